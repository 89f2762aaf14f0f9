#pragma once

#include <span>
#include <vector>

#include "mlskel/graph.hpp"
#include "mlskel/separators.hpp"

namespace mlskel {

struct NodeOrigin {
  enum class Kind { separator, residual };
  Kind kind = Kind::separator;
  int index = 0;  // separator index, or residual component index
};

/// Curve complex plus, for each node, what it was built from.
struct Skeleton {
  EmbeddedGraph graph;
  std::vector<NodeOrigin> origin;
};

/**
 * Quotient construction: one node per separator at its capacity-weighted
 * barycenter, one node per connected component of the graph with all
 * separator vertices removed, and an edge between any two nodes whose vertex
 * sets are adjacent. Separator nodes come first, in input order; residual
 * nodes follow in order of their smallest vertex.
 *
 * Throws ContractViolation if two separators share a vertex.
 */
Skeleton extract_skeleton(const EmbeddedGraph& g, std::span<const Separator> separators);

struct SkeletonMetrics {
  int vertices = 0;
  int leafs = 0;
  int branches = 0;
  int genus_estimate = 0;
  double hausdorff_ab = 0.0;
  double hausdorff_ba = 0.0;
};

/// |E| - |V| + number of components.
int cycle_rank(const EmbeddedGraph& g);

/// Counts only; Hausdorff fields stay zero.
SkeletonMetrics skeleton_metrics(const EmbeddedGraph& skeleton);

/// Nodes plus evenly spaced points on each edge, no two consecutive samples farther apart than `spacing`.
std::vector<Point> sample_curve(const EmbeddedGraph& skeleton, double spacing);

inline constexpr double kHausdorffSamplesPerRadius = 256.0;

/// max over samples of `a` of the distance to the nearest sample of `b`, divided by `normalizer`.
double directed_hausdorff(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer);

/// Counts of `a`, both normalized Hausdorff directions against `b`.
SkeletonMetrics compare_skeletons(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer);

}  // namespace mlskel
