#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "mlskel/graph.hpp"
#include "mlskel/io.hpp"

namespace oracle {

using mlskel::Edge;
using mlskel::EmbeddedGraph;
using mlskel::Point;
using mlskel::Vertex;

/// Components of the subgraph induced by vertices with keep[v] set, by BFS over an adjacency matrix.
inline int induced_components(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& keep) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!keep[s] || seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (adj[u][w] && keep[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return count;
}

inline std::vector<std::vector<bool>> matrix(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline bool connected_set(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex v : s) keep[v] = true;
  return induced_components(matrix(g), keep) == 1;
}

/// Closed neighbourhood of S minus S has at least two components.
inline bool local_separator(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  const auto adj = matrix(g);
  const int n = g.vertex_count();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) in_s[v] = true;
  std::vector<bool> rest(n, false);
  for (int u = 0; u < n; ++u) {
    if (in_s[u]) continue;
    for (Vertex v : s) {
      if (adj[u][v]) rest[u] = true;
    }
  }
  return induced_components(adj, rest) >= 2;
}

inline bool connected_local_separator(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  return connected_set(g, s) && local_separator(g, s);
}

inline bool minimal_separator(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  if (!connected_local_separator(g, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Vertex> rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (connected_local_separator(g, rest)) return false;
  }
  return true;
}

/// Same test as connected_local_separator, by BFS over neighbour lists, for large graphs.
inline bool separates_sparse(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::set<Vertex> in_s(s.begin(), s.end());
  auto count = [&](const std::set<Vertex>& keep) {
    std::set<Vertex> seen;
    int components = 0;
    for (Vertex start : keep) {
      if (seen.count(start)) continue;
      ++components;
      std::vector<Vertex> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
          if (keep.count(w) && seen.insert(w).second) stack.push_back(w);
        }
      }
    }
    return components;
  };
  if (count(in_s) != 1) return false;
  std::set<Vertex> front;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_s.count(w)) front.insert(w);
    }
  }
  return count(front) >= 2;
}

inline bool minimal_sparse(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
  if (!separates_sparse(g, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Vertex> rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (separates_sparse(g, rest)) return false;
  }
  return true;
}

/// Every connected vertex subset, by bitmask enumeration (n <= 16).
inline std::vector<std::vector<Vertex>> connected_subsets(const EmbeddedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) s.push_back(v);
    }
    if (connected_set(g, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<int> bfs_labels(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> label(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

inline int bfs_components(int n, const std::set<std::pair<int, int>>& edges) {
  const auto labels = bfs_labels(n, edges);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// Edge set of the graph obtained by merging each fine vertex into parent[v].
inline std::set<std::pair<Vertex, Vertex>> quotient_edges(const EmbeddedGraph& g, const std::vector<Vertex>& parent) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = parent[u];
    const Vertex b = parent[v];
    if (a != b) out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

// ---------------------------------------------------------------- small graphs

inline std::vector<Point> line_positions(int n) {
  std::vector<Point> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, 0, 0);
  return p;
}

inline EmbeddedGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return EmbeddedGraph(line_positions(n), e);
}

inline EmbeddedGraph cycle(int n, double radius = 1.0) {
  std::vector<Point> p;
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * 3.141592653589793 * i / n;
    p.emplace_back(radius * std::cos(t), radius * std::sin(t), 0);
    e.emplace_back(i, (i + 1) % n);
  }
  return EmbeddedGraph(p, e);
}

inline EmbeddedGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return EmbeddedGraph(line_positions(n), e);
}

inline EmbeddedGraph star(int leaves) {
  std::vector<Point> p{Point::Zero()};
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) {
    const double t = 2.0 * 3.141592653589793 * i / leaves;
    p.emplace_back(std::cos(t), std::sin(t), 0);
    e.emplace_back(0, i);
  }
  return EmbeddedGraph(p, e);
}

inline EmbeddedGraph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pos;
  for (int i = 0; i < n; ++i) pos.emplace_back(u(rng), u(rng), u(rng));
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (u(rng) < p) e.emplace_back(i, j);
    }
  }
  return EmbeddedGraph(pos, e);
}

inline EmbeddedGraph grid(int w, int h) {
  std::vector<Point> p;
  std::vector<Edge> e;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      p.emplace_back(x, y, 0);
      const int v = y * w + x;
      if (x + 1 < w) e.emplace_back(v, v + 1);
      if (y + 1 < h) e.emplace_back(v, v + w);
    }
  }
  return EmbeddedGraph(p, e);
}

}  // namespace oracle
