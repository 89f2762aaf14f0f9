#include "mlskel/coarsening.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mlskel {

std::vector<Vertex> random_order(Vertex n, Rng& rng) {
  std::vector<Vertex> order(n);
  for (Vertex i = 0; i < n; ++i) order[i] = i;
  for (Vertex i = n - 1; i > 0; --i) {
    const auto j = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

Matching light_edge_matching(const EmbeddedGraph& g, std::span<const Vertex> visit_order) {
  std::vector<char> matched(g.vertex_count(), 0);
  Matching matching;
  for (Vertex u : visit_order) {
    if (matched[u]) continue;
    Vertex best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (Vertex w : g.neighbors(u)) {
      if (matched[w]) continue;
      const double d = (g.position(u) - g.position(w)).squaredNorm();
      // neighbours are sorted, so strict < keeps the smaller id on ties
      if (d < best_d) {
        best_d = d;
        best = w;
      }
    }
    if (best >= 0) {
      matched[u] = matched[best] = 1;
      matching.emplace_back(u, best);
    }
  }
  return matching;
}

Matching light_edge_matching(const EmbeddedGraph& g, Rng& rng) {
  const auto order = random_order(g.vertex_count(), rng);
  return light_edge_matching(g, order);
}

EmbeddedGraph quotient(const EmbeddedGraph& g, const ContractionRecord& record) {
  const auto coarse_n = record.children.size();
  std::vector<Point> positions(coarse_n, Point::Zero());
  std::vector<std::int64_t> capacities(coarse_n, 0);
  for (std::size_t c = 0; c < coarse_n; ++c) {
    for (Vertex f : record.children[c]) {
      positions[c] += static_cast<double>(g.capacity(f)) * g.position(f);
      capacities[c] += g.capacity(f);
    }
    positions[c] /= static_cast<double>(capacities[c]);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = record.parent[u];
    const Vertex b = record.parent[v];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return EmbeddedGraph(std::move(positions), std::move(capacities), edges);
}

std::pair<EmbeddedGraph, ContractionRecord> contract(const EmbeddedGraph& g, const Matching& matching) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> mate(n, -1);
  for (const auto& [u, v] : matching) {
    if (!g.contains(u) || !g.contains(v) || u == v || !g.has_edge(u, v)) {
      throw ContractViolation("matching contains a non-edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (mate[u] >= 0 || mate[v] >= 0) throw ContractViolation("matching edges are not vertex-disjoint");
    mate[u] = v;
    mate[v] = u;
  }
  ContractionRecord record;
  record.parent.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (record.parent[v] >= 0) continue;
    const auto c = static_cast<Vertex>(record.children.size());
    record.parent[v] = c;
    if (mate[v] >= 0) {
      record.parent[mate[v]] = c;
      record.children.push_back({v, mate[v]});  // v < mate[v] since v is the first seen
    } else {
      record.children.push_back({v});
    }
  }
  EmbeddedGraph coarse = quotient(g, record);
  return {std::move(coarse), std::move(record)};
}

ContractionRecord compose(const ContractionRecord& fine_to_mid, const ContractionRecord& mid_to_coarse) {
  ContractionRecord out;
  out.fine_level = fine_to_mid.fine_level;
  out.coarse_level = mid_to_coarse.coarse_level;
  out.parent.resize(fine_to_mid.parent.size());
  for (std::size_t f = 0; f < out.parent.size(); ++f) out.parent[f] = mid_to_coarse.parent[fine_to_mid.parent[f]];
  out.children.resize(mid_to_coarse.children.size());
  for (std::size_t c = 0; c < out.children.size(); ++c) {
    auto& kids = out.children[c];
    for (Vertex m : mid_to_coarse.children[c]) {
      const auto& sub = fine_to_mid.children[m];
      kids.insert(kids.end(), sub.begin(), sub.end());
    }
    std::sort(kids.begin(), kids.end());
  }
  return out;
}

namespace {

ContractionRecord identity_record(Vertex n) {
  ContractionRecord r;
  r.parent.resize(n);
  r.children.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    r.parent[v] = v;
    r.children[v] = {v};
  }
  return r;
}

}  // namespace

CoarsenResult coarsen_level(const EmbeddedGraph& g, Rng& rng, int max_rounds) {
  CoarsenResult result;
  result.graph = g;
  result.record = identity_record(g.vertex_count());
  const Vertex target = g.vertex_count() / 2;
  while (result.graph.vertex_count() > target && result.rounds < max_rounds) {
    const Matching m = light_edge_matching(result.graph, rng);
    ++result.rounds;
    if (m.empty()) {
      result.stalled = true;
      break;
    }
    auto [next, step] = contract(result.graph, m);
    result.record = compose(result.record, step);
    result.graph = std::move(next);
  }
  result.halved = result.graph.vertex_count() <= target;
  return result;
}

LevelHierarchy build_hierarchy(const EmbeddedGraph& g, int alpha, Rng& rng) {
  if (alpha < 1) throw ContractViolation("alpha must be >= 1");
  LevelHierarchy h;
  h.graphs.push_back(g);
  while (h.graphs.back().vertex_count() > alpha) {
    const EmbeddedGraph& fine = h.graphs.back();
    CoarsenResult step = coarsen_level(fine, rng);
    if (step.graph.vertex_count() == fine.vertex_count()) {
      h.stalled = true;
      break;
    }
    step.record.fine_level = h.level_count() - 1;
    step.record.coarse_level = h.level_count();
    h.records.push_back(std::move(step.record));
    h.graphs.push_back(std::move(step.graph));
    if (step.stalled) {
      h.stalled = true;
      break;
    }
  }
  return h;
}

LevelHierarchy build_hierarchy(const EmbeddedGraph& g, int alpha, std::uint64_t seed) {
  Rng rng(seed);
  return build_hierarchy(g, alpha, rng);
}

}  // namespace mlskel
