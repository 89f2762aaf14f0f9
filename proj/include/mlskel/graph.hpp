#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mlskel {

using Vertex = std::int32_t;
using Point = Eigen::Vector3d;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the readers on malformed input. The message carries the line or byte offset.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Undirected simple graph with a 3D position and an integer capacity per vertex.
 *
 * Adjacency is stored in CSR form with sorted neighbor lists. The graph is
 * immutable after construction, so shared concurrent reads are safe.
 */
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Self-loops and repeated edges in `edges` are dropped. Capacities must be >= 1.
  EmbeddedGraph(std::vector<Point> positions, std::vector<std::int64_t> capacities,
                std::span<const Edge> edges);

  /// Unit capacities, as for an original input graph.
  EmbeddedGraph(std::vector<Point> positions, std::span<const Edge> edges);

  Vertex vertex_count() const { return static_cast<Vertex>(positions_.size()); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  bool empty() const { return positions_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(Vertex u, Vertex v) const;

  const Point& position(Vertex v) const { return positions_[v]; }
  std::int64_t capacity(Vertex v) const { return capacities_[v]; }
  const std::vector<Point>& positions() const { return positions_; }
  const std::vector<std::int64_t>& capacities() const { return capacities_; }

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  std::vector<Point> positions_;
  std::vector<std::int64_t> capacities_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

struct ComponentLabels {
  int count = 0;
  std::vector<int> labels;
};

ComponentLabels connected_components(const EmbeddedGraph& g);

/// True iff `set` is non-empty and induces a connected subgraph.
bool induces_connected(const EmbeddedGraph& g, std::span<const Vertex> set);

/// Number of connected components of the front of `set`: the subgraph induced
/// by vertices adjacent to `set` but not in it.
int front_component_count(const EmbeddedGraph& g, std::span<const Vertex> set);

/// Front vertex set of `set`, ascending.
std::vector<Vertex> front_vertices(const EmbeddedGraph& g, std::span<const Vertex> set);

/// Connected local separator test without preconditions: false for empty or
/// disconnected sets instead of throwing.
bool separates(const EmbeddedGraph& g, std::span<const Vertex> set);

/// `s` must be non-empty and connected; throws ContractViolation otherwise.
bool is_local_separator(const EmbeddedGraph& g, std::span<const Vertex> s);

/// No single vertex can be dropped from `s` while leaving a connected local separator.
bool is_minimal_local_separator(const EmbeddedGraph& g, std::span<const Vertex> s);

struct BoundingSphere {
  Point center = Point::Zero();
  double radius = 0.0;

  bool covers(const Point& p) const { return (center - p).norm() <= radius * (1.0 + 1e-9) + 1e-300; }
};

/// Deterministic approximate enclosing sphere, radius at most twice the minimal one.
BoundingSphere bounding_sphere(std::span<const Point> points);

}  // namespace mlskel
