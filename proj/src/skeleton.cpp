#include "mlskel/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace mlskel {

Skeleton extract_skeleton(const EmbeddedGraph& g, std::span<const Separator> separators) {
  const Vertex n = g.vertex_count();
  std::vector<int> node_of(n, -1);
  Skeleton skel;
  std::vector<Point> positions;
  std::vector<std::int64_t> capacities;

  for (std::size_t i = 0; i < separators.size(); ++i) {
    const auto& members = separators[i].members;
    if (members.empty()) throw ContractViolation("empty separator " + std::to_string(i));
    for (Vertex v : members) {
      if (!g.contains(v)) throw ContractViolation("separator vertex out of range");
      if (node_of[v] != -1) {
        throw ContractViolation("separators overlap at vertex " + std::to_string(v));
      }
      node_of[v] = static_cast<int>(i);
    }
    positions.push_back(barycenter(g, members));
    std::int64_t cap = 0;
    for (Vertex v : members) cap += g.capacity(v);
    capacities.push_back(cap);
    skel.origin.push_back({NodeOrigin::Kind::separator, static_cast<int>(i)});
  }

  // residual components of g minus all separator vertices
  std::vector<Vertex> stack;
  std::vector<Vertex> component;
  int residual = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (node_of[s] != -1) continue;
    const int id = static_cast<int>(positions.size());
    node_of[s] = id;
    stack.assign(1, s);
    component.clear();
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (node_of[w] == -1) {
          node_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    positions.push_back(barycenter(g, component));
    std::int64_t cap = 0;
    for (Vertex v : component) cap += g.capacity(v);
    capacities.push_back(cap);
    skel.origin.push_back({NodeOrigin::Kind::residual, residual++});
  }

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const int a = node_of[u];
    const int b = node_of[v];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  skel.graph = EmbeddedGraph(std::move(positions), std::move(capacities), edges);
  return skel;
}

int cycle_rank(const EmbeddedGraph& g) {
  return static_cast<int>(g.edge_count()) - g.vertex_count() + connected_components(g).count;
}

SkeletonMetrics skeleton_metrics(const EmbeddedGraph& skeleton) {
  SkeletonMetrics m;
  m.vertices = skeleton.vertex_count();
  for (Vertex v = 0; v < skeleton.vertex_count(); ++v) {
    const int d = skeleton.degree(v);
    if (d == 1) ++m.leafs;
    if (d >= 3) ++m.branches;
  }
  m.genus_estimate = cycle_rank(skeleton);
  return m;
}

std::vector<Point> sample_curve(const EmbeddedGraph& skeleton, double spacing) {
  if (!(spacing > 0)) throw ContractViolation("sample spacing must be positive");
  std::vector<Point> samples(skeleton.positions());
  for (const auto& [u, v] : skeleton.edges()) {
    const Point& a = skeleton.position(u);
    const Point& b = skeleton.position(v);
    const auto pieces = static_cast<int>(std::ceil((b - a).norm() / spacing));
    for (int k = 1; k < pieces; ++k) {
      samples.push_back(a + (static_cast<double>(k) / pieces) * (b - a));
    }
  }
  return samples;
}

double directed_hausdorff(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer) {
  if (a.empty() || b.empty()) throw ContractViolation("directed_hausdorff needs non-empty skeletons");
  if (!(normalizer > 0)) throw ContractViolation("normalizer must be positive");
  const double spacing = normalizer / kHausdorffSamplesPerRadius;
  const auto from = sample_curve(a, spacing);
  auto to = sample_curve(b, spacing);
  // random target order makes the early exit below effective
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = to.size(); i > 1; --i) std::swap(to[i - 1], to[rng() % i]);

  double worst = 0.0;
  for (const Point& p : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Point& q : to) {
      const double d = (p - q).squaredNorm();
      if (d < nearest) {
        nearest = d;
        if (nearest <= worst) break;
      }
    }
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst) / normalizer;
}

SkeletonMetrics compare_skeletons(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer) {
  SkeletonMetrics m = skeleton_metrics(a);
  m.hausdorff_ab = directed_hausdorff(a, b, normalizer);
  m.hausdorff_ba = directed_hausdorff(b, a, normalizer);
  return m;
}

}  // namespace mlskel
