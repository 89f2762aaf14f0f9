#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mlskel/graph.hpp"

namespace mlskel {

using Rng = std::mt19937_64;
using Matching = std::vector<Edge>;

/// Maps fine vertices of one level onto the coarse vertices of the next.
struct ContractionRecord {
  int fine_level = 0;
  int coarse_level = 1;
  std::vector<Vertex> parent;                 // fine -> coarse
  std::vector<std::vector<Vertex>> children;  // coarse -> sorted fine vertices
};

/// Composition fine -> mid -> coarse of two adjacent records.
ContractionRecord compose(const ContractionRecord& fine_to_mid, const ContractionRecord& mid_to_coarse);

struct LevelHierarchy {
  std::vector<EmbeddedGraph> graphs;         // graphs[0] is the input
  std::vector<ContractionRecord> records;    // records[i] maps graphs[i] onto graphs[i + 1]
  bool stalled = false;

  int level_count() const { return static_cast<int>(graphs.size()); }
};

/// Uniform random permutation of [0, n) by Fisher-Yates over the raw 64-bit stream.
std::vector<Vertex> random_order(Vertex n, Rng& rng);

/// Greedy maximal matching: each unmatched vertex, in `visit_order`, is matched
/// to its nearest unmatched neighbour (ties towards the smaller id).
Matching light_edge_matching(const EmbeddedGraph& g, std::span<const Vertex> visit_order);
Matching light_edge_matching(const EmbeddedGraph& g, Rng& rng);

/// Contracts each matched pair into one vertex placed at the capacity-weighted
/// mean of the pair, with summed capacity. Coarse ids follow the smallest fine id.
std::pair<EmbeddedGraph, ContractionRecord> contract(const EmbeddedGraph& g, const Matching& matching);

/// Quotient of `g` by the partition in `record`: positions are capacity-weighted
/// means, capacities sum, parallel edges and self-loops vanish.
EmbeddedGraph quotient(const EmbeddedGraph& g, const ContractionRecord& record);

struct CoarsenResult {
  EmbeddedGraph graph;
  ContractionRecord record;
  int rounds = 0;
  bool halved = false;
  bool stalled = false;  // a round found nothing to contract before halving
};

inline constexpr int kMaxMatchingRounds = 10;

/// Matching rounds until the vertex count is at least halved, a round contracts
/// nothing, or `max_rounds` is reached.
CoarsenResult coarsen_level(const EmbeddedGraph& g, Rng& rng, int max_rounds = kMaxMatchingRounds);

/// Coarsens until the last graph has at most `alpha` vertices or coarsening stalls.
LevelHierarchy build_hierarchy(const EmbeddedGraph& g, int alpha, Rng& rng);
LevelHierarchy build_hierarchy(const EmbeddedGraph& g, int alpha, std::uint64_t seed);

}  // namespace mlskel
