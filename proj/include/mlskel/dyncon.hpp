#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace mlskel {

/**
 * Fully dynamic edge connectivity (Holm, de Lichtenberg, Thorup).
 *
 * A hierarchy of Euler tour forests, each tour stored in an implicit treap
 * augmented with vertex counts and "has tree/non-tree edge at this level"
 * flags. When the smaller half of a split tree holds at most
 * `level_threshold` vertices its edges are not pushed to the next level, so
 * a threshold at or above the vertex count keeps everything on level 0 and
 * the structure degenerates to a single augmented Euler tour forest.
 *
 * Vertices are dense ids; add_vertex() appends a fresh isolated vertex.
 */
class DynamicConnectivity {
 public:
  static constexpr std::int64_t kSingleLevel = std::numeric_limits<std::int64_t>::max();

  explicit DynamicConnectivity(int n = 0, std::int64_t level_threshold = kSingleLevel);

  int add_vertex();

  /// Inserting an edge that is already present is a no-op.
  void connect(int u, int v);
  /// Removing an absent edge is a ContractViolation.
  void remove(int u, int v);

  bool has_edge(int u, int v) const;
  bool connected(int u, int v) const;
  int number_of_components() const { return components_; }
  int component_size(int v) const;

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_index_.size(); }
  int level_count() const { return static_cast<int>(vertex_node_.size()); }
  std::int64_t level_threshold() const { return level_threshold_; }

 private:
  static constexpr std::uint8_t kTreeFlag = 1;
  static constexpr std::uint8_t kNonTreeFlag = 2;

  struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
    std::uint32_t priority = 0;
    int count = 1;
    int vertices = 0;
    bool is_vertex = false;
    int vertex = -1;
    std::uint8_t own = 0;
    std::uint8_t agg = 0;
  };

  struct EdgeRecord {
    int u = -1;
    int v = -1;
    int level = 0;
    bool tree = false;
    int pos_u = -1;
    int pos_v = -1;
    std::vector<std::array<int, 2>> arcs;  // per level 0..level, tree edges only
  };

  // treap
  int new_node(bool is_vertex, int vertex = -1);
  void free_node(int x);
  int count_of(int x) const { return x < 0 ? 0 : nodes_[x].count; }
  void pull(int x);
  int merge(int a, int b);
  std::pair<int, int> split(int t, int k);
  int root_of(int x) const;
  int position_of(int x) const;
  void set_flag(int x, std::uint8_t bit, bool value);
  void collect_flagged(int root, std::uint8_t bit, std::vector<int>& out) const;

  // Euler tour forest per level
  int vnode(int level, int v) const { return vertex_node_[level][v]; }
  int reroot(int x);
  void link(int level, EdgeRecord& e);
  void cut(int level, EdgeRecord& e);
  void ensure_level(int level);

  // incidence lists
  void list_add(int e);
  void list_remove(int e);
  std::vector<int>& incidence(int level, int v, bool tree) { return incidence_[level][v][tree ? 0 : 1]; }

  static std::uint64_t key(int u, int v);
  int find_edge(int u, int v) const;
  void check_vertex(int v) const;

  std::int64_t level_threshold_;
  int vertex_count_ = 0;
  int components_ = 0;
  std::uint64_t rng_state_ = 0x9e3779b97f4a7c15ULL;

  std::vector<Node> nodes_;
  std::vector<int> free_nodes_;
  std::vector<std::vector<int>> vertex_node_;  // [level][vertex]
  std::vector<std::vector<std::array<std::vector<int>, 2>>> incidence_;  // [level][vertex][tree, non-tree]

  std::vector<EdgeRecord> edges_;
  std::vector<int> free_edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<int> scratch_;
};

/// Reference front connectivity that recomputes components by traversal on every query.
class RecomputeConnectivity {
 public:
  explicit RecomputeConnectivity(int n = 0, std::int64_t level_threshold = 0);

  int add_vertex();
  void connect(int u, int v);
  void remove(int u, int v);
  bool connected(int u, int v) const;
  int number_of_components() const;
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace mlskel
