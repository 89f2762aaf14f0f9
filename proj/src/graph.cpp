#include "mlskel/graph.hpp"

#include <algorithm>
#include <string>

#include "marker.hpp"

namespace mlskel {

EmbeddedGraph::EmbeddedGraph(std::vector<Point> positions, std::vector<std::int64_t> capacities,
                             std::span<const Edge> edges)
    : positions_(std::move(positions)), capacities_(std::move(capacities)) {
  const auto n = positions_.size();
  if (capacities_.size() != n) throw ContractViolation("capacity count does not match vertex count");
  for (auto c : capacities_) {
    if (c < 1) throw ContractViolation("vertex capacity must be >= 1");
  }
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ContractViolation("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  // sort and dedup each list, then compact
  std::size_t out = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t end = offsets_[v + 1];
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets_[v] = out;
    for (auto it = first; it != last; ++it) adjacency_[out++] = *it;
    begin = end;
  }
  offsets_[n] = out;
  adjacency_.resize(out);
}

EmbeddedGraph::EmbeddedGraph(std::vector<Point> positions, std::span<const Edge> edges)
    : EmbeddedGraph(std::vector<Point>(positions), std::vector<std::int64_t>(positions.size(), 1), edges) {}

bool EmbeddedGraph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ComponentLabels connected_components(const EmbeddedGraph& g) {
  ComponentLabels result;
  result.labels.assign(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (result.labels[s] != -1) continue;
    const int label = result.count++;
    result.labels[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (result.labels[w] == -1) {
          result.labels[w] = label;
          stack.push_back(w);
        }
      }
    }
  }
  return result;
}

bool induces_connected(const EmbeddedGraph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  thread_local detail::Marker in_set;
  thread_local detail::Marker seen;
  thread_local std::vector<Vertex> stack;
  in_set.reset(g.vertex_count());
  seen.reset(g.vertex_count());
  for (Vertex v : set) in_set.mark(v);
  stack.assign(1, set.front());
  seen.mark(set.front());
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in_set.marked(w) && !seen.marked(w)) {
        seen.mark(w);
        ++reached;
        stack.push_back(w);
      }
    }
  }
  // set may hold duplicates; count distinct members
  std::size_t distinct = 0;
  seen.reset(g.vertex_count());
  for (Vertex v : set) {
    if (!seen.marked(v)) {
      seen.mark(v);
      ++distinct;
    }
  }
  return reached == distinct;
}

std::vector<Vertex> front_vertices(const EmbeddedGraph& g, std::span<const Vertex> set) {
  thread_local detail::Marker in_set;
  thread_local detail::Marker in_front;
  in_set.reset(g.vertex_count());
  in_front.reset(g.vertex_count());
  for (Vertex v : set) in_set.mark(v);
  std::vector<Vertex> front;
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_set.marked(w) && !in_front.marked(w)) {
        in_front.mark(w);
        front.push_back(w);
      }
    }
  }
  std::sort(front.begin(), front.end());
  return front;
}

int front_component_count(const EmbeddedGraph& g, std::span<const Vertex> set) {
  thread_local detail::Marker in_set;
  thread_local detail::Marker in_front;
  thread_local detail::Marker seen;
  thread_local std::vector<Vertex> front;
  thread_local std::vector<Vertex> stack;
  in_set.reset(g.vertex_count());
  in_front.reset(g.vertex_count());
  seen.reset(g.vertex_count());
  front.clear();
  for (Vertex v : set) in_set.mark(v);
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_set.marked(w) && !in_front.marked(w)) {
        in_front.mark(w);
        front.push_back(w);
      }
    }
  }
  int components = 0;
  for (Vertex s : front) {
    if (seen.marked(s)) continue;
    ++components;
    seen.mark(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (in_front.marked(w) && !seen.marked(w)) {
          seen.mark(w);
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool separates(const EmbeddedGraph& g, std::span<const Vertex> set) {
  return induces_connected(g, set) && front_component_count(g, set) >= 2;
}

namespace {

void require_valid_set(const EmbeddedGraph& g, std::span<const Vertex> s) {
  if (s.empty()) throw ContractViolation("vertex set is empty");
  for (Vertex v : s) {
    if (!g.contains(v)) throw ContractViolation("vertex id out of range: " + std::to_string(v));
  }
  if (!induces_connected(g, s)) throw ContractViolation("vertex set does not induce a connected subgraph");
}

}  // namespace

bool is_local_separator(const EmbeddedGraph& g, std::span<const Vertex> s) {
  require_valid_set(g, s);
  return front_component_count(g, s) >= 2;
}

bool is_minimal_local_separator(const EmbeddedGraph& g, std::span<const Vertex> s) {
  if (!is_local_separator(g, s)) throw ContractViolation("set is not a local separator");
  std::vector<Vertex> rest;
  rest.reserve(s.size());
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip && s[i] != s[skip]) rest.push_back(s[i]);
    }
    if (separates(g, rest)) return false;
  }
  return true;
}

BoundingSphere bounding_sphere(std::span<const Point> points) {
  if (points.empty()) throw ContractViolation("bounding_sphere needs at least one point");
  auto farthest_from = [&](const Point& q) {
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double d = (points[i] - q).squaredNorm();
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  };
  const Point& a = points[farthest_from(points.front())];
  const Point& b = points[farthest_from(a)];
  const double diameter = (b - a).norm();

  // Ritter growth from the diameter sphere through the points.
  BoundingSphere grown{0.5 * (a + b), 0.5 * diameter};
  for (const Point& p : points) {
    const double d = (p - grown.center).norm();
    if (d > grown.radius) {
      const double r = 0.5 * (grown.radius + d);
      grown.center += (d - r) / d * (p - grown.center);
      grown.radius = r;
    }
  }
  double cover = 0.0;
  for (const Point& p : points) cover = std::max(cover, (p - grown.center).norm());
  grown.radius = cover;

  // Every point lies within `diameter` of a, and the optimum is at least diameter / 2.
  if (grown.radius <= diameter) return grown;
  return {a, diameter};
}

}  // namespace mlskel
