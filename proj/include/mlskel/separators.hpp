#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlskel/dyncon.hpp"
#include "mlskel/graph.hpp"

namespace mlskel {

/// A connected local separator on one level of the hierarchy.
struct Separator {
  int level = 0;
  std::vector<Vertex> members;  // sorted, distinct
  std::int64_t footprint = 0;   // sum of member capacities
  Point center = Point::Zero(); // guiding sphere center from the search that produced it

  friend bool operator==(const Separator& a, const Separator& b) {
    return a.level == b.level && a.members == b.members && a.footprint == b.footprint;
  }
};

/// Sorts and deduplicates `members` and fills in the footprint.
Separator make_separator(const EmbeddedGraph& g, std::vector<Vertex> members, int level, const Point& center);

/// Capacity-weighted barycenter of a vertex set.
Point barycenter(const EmbeddedGraph& g, std::span<const Vertex> members);

inline constexpr double kSphereEpsilon = 1e-12;

/**
 * Grows a set from `v0` one vertex at a time, always taking the front vertex
 * nearest the guiding sphere's center, until the front splits (success), the
 * front empties, or `alpha` vertices have been absorbed without a split.
 *
 * The front's induced edges are kept in a `Front` connectivity structure
 * (DynamicConnectivity or RecomputeConnectivity) addressed by local ids.
 */
template <class Front>
std::optional<Separator> search_separator(const EmbeddedGraph& g, Vertex v0, int alpha,
                                          std::int64_t dyncon_threshold = DynamicConnectivity::kSingleLevel,
                                          int level = 0);

inline std::optional<Separator> restricted_separator_search(
    const EmbeddedGraph& g, Vertex v0, int alpha,
    std::int64_t dyncon_threshold = DynamicConnectivity::kSingleLevel, int level = 0) {
  return search_separator<DynamicConnectivity>(g, v0, alpha, dyncon_threshold, level);
}

/**
 * Removes vertices from a separator until it is minimal.
 *
 * Each member gets its distance to the separator's sphere center, averaged
 * with the members it is adjacent to. Members are scanned from the largest
 * smoothed distance down (ties by id), and a member is dropped whenever the
 * rest is still a connected local separator. Scans repeat until one drops
 * nothing.
 */
Separator shrink_separator(const EmbeddedGraph& g, const Separator& s);

/// Tries each initial front vertex in ascending id order and keeps it when the
/// enlarged set is still a local separator.
Separator thicken_separator(const EmbeddedGraph& g, const Separator& s);

}  // namespace mlskel
