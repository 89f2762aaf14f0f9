#include "mlskel/dyncon.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mlskel/graph.hpp"

namespace mlskel {

DynamicConnectivity::DynamicConnectivity(int n, std::int64_t level_threshold)
    : level_threshold_(level_threshold) {
  if (n < 0) throw ContractViolation("vertex count must be non-negative");
  ensure_level(0);
  for (int i = 0; i < n; ++i) add_vertex();
}

int DynamicConnectivity::add_vertex() {
  const int v = vertex_count_++;
  ++components_;
  for (std::size_t level = 0; level < vertex_node_.size(); ++level) {
    vertex_node_[level].push_back(new_node(true, v));
    incidence_[level].emplace_back();
  }
  return v;
}

// ---------------------------------------------------------------- treap

int DynamicConnectivity::new_node(bool is_vertex, int vertex) {
  int x;
  if (!free_nodes_.empty()) {
    x = free_nodes_.back();
    free_nodes_.pop_back();
    nodes_[x] = Node{};
  } else {
    x = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
  }
  // xorshift64*
  rng_state_ ^= rng_state_ >> 12;
  rng_state_ ^= rng_state_ << 25;
  rng_state_ ^= rng_state_ >> 27;
  nodes_[x].priority = static_cast<std::uint32_t>((rng_state_ * 2685821657736338717ULL) >> 32);
  nodes_[x].is_vertex = is_vertex;
  nodes_[x].vertex = vertex;
  nodes_[x].vertices = is_vertex ? 1 : 0;
  return x;
}

void DynamicConnectivity::free_node(int x) { free_nodes_.push_back(x); }

void DynamicConnectivity::pull(int x) {
  Node& n = nodes_[x];
  n.count = 1;
  n.vertices = n.is_vertex ? 1 : 0;
  n.agg = n.own;
  for (int c : {n.left, n.right}) {
    if (c >= 0) {
      n.count += nodes_[c].count;
      n.vertices += nodes_[c].vertices;
      n.agg |= nodes_[c].agg;
    }
  }
}

int DynamicConnectivity::merge(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  if (nodes_[a].priority > nodes_[b].priority) {
    const int r = merge(nodes_[a].right, b);
    nodes_[a].right = r;
    nodes_[r].parent = a;
    pull(a);
    return a;
  }
  const int l = merge(a, nodes_[b].left);
  nodes_[b].left = l;
  nodes_[l].parent = b;
  pull(b);
  return b;
}

// First k nodes go left. Both returned roots have no parent.
std::pair<int, int> DynamicConnectivity::split(int t, int k) {
  if (t < 0) return {-1, -1};
  nodes_[t].parent = -1;
  const int left_count = count_of(nodes_[t].left);
  if (k <= left_count) {
    auto [a, b] = split(nodes_[t].left, k);
    nodes_[t].left = b;
    if (b >= 0) nodes_[b].parent = t;
    pull(t);
    if (a >= 0) nodes_[a].parent = -1;
    return {a, t};
  }
  auto [a, b] = split(nodes_[t].right, k - left_count - 1);
  nodes_[t].right = a;
  if (a >= 0) nodes_[a].parent = t;
  pull(t);
  if (b >= 0) nodes_[b].parent = -1;
  return {t, b};
}

int DynamicConnectivity::root_of(int x) const {
  while (nodes_[x].parent >= 0) x = nodes_[x].parent;
  return x;
}

int DynamicConnectivity::position_of(int x) const {
  int pos = count_of(nodes_[x].left);
  while (nodes_[x].parent >= 0) {
    const int p = nodes_[x].parent;
    if (nodes_[p].right == x) pos += count_of(nodes_[p].left) + 1;
    x = p;
  }
  return pos;
}

void DynamicConnectivity::set_flag(int x, std::uint8_t bit, bool value) {
  const std::uint8_t own = value ? (nodes_[x].own | bit) : (nodes_[x].own & ~bit);
  if (own == nodes_[x].own) return;
  nodes_[x].own = own;
  for (; x >= 0; x = nodes_[x].parent) pull(x);
}

void DynamicConnectivity::collect_flagged(int root, std::uint8_t bit, std::vector<int>& out) const {
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x < 0 || !(nodes_[x].agg & bit)) continue;
    if (nodes_[x].own & bit) out.push_back(x);
    stack.push_back(nodes_[x].left);
    stack.push_back(nodes_[x].right);
  }
}

// ---------------------------------------------------------------- Euler tours

int DynamicConnectivity::reroot(int x) {
  const int r = root_of(x);
  auto [a, b] = split(r, position_of(x));
  return merge(b, a);
}

void DynamicConnectivity::link(int level, EdgeRecord& e) {
  const int uv = new_node(false);
  const int vu = new_node(false);
  if (static_cast<int>(e.arcs.size()) <= level) e.arcs.resize(level + 1);
  e.arcs[level] = {uv, vu};
  const int tu = reroot(vnode(level, e.u));
  const int tv = reroot(vnode(level, e.v));
  merge(merge(merge(tu, uv), tv), vu);
}

void DynamicConnectivity::cut(int level, EdgeRecord& e) {
  int first = e.arcs[level][0];
  int second = e.arcs[level][1];
  int p1 = position_of(first);
  int p2 = position_of(second);
  if (p1 > p2) {
    std::swap(first, second);
    std::swap(p1, p2);
  }
  const int r = root_of(first);
  auto [head, rest] = split(r, p1);
  auto [arc1, rest2] = split(rest, 1);
  auto [middle, rest3] = split(rest2, p2 - p1 - 1);
  auto [arc2, tail] = split(rest3, 1);
  merge(head, tail);
  (void)middle;
  free_node(arc1);
  free_node(arc2);
}

void DynamicConnectivity::ensure_level(int level) {
  while (static_cast<int>(vertex_node_.size()) <= level) {
    std::vector<int> nodes(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) nodes[v] = new_node(true, v);
    vertex_node_.push_back(std::move(nodes));
    incidence_.emplace_back(vertex_count_);
  }
}

// ---------------------------------------------------------------- incidence lists

void DynamicConnectivity::list_add(int id) {
  EdgeRecord& e = edges_[id];
  const std::uint8_t bit = e.tree ? kTreeFlag : kNonTreeFlag;
  auto& lu = incidence(e.level, e.u, e.tree);
  e.pos_u = static_cast<int>(lu.size());
  lu.push_back(id);
  set_flag(vnode(e.level, e.u), bit, true);
  auto& lv = incidence(e.level, e.v, e.tree);
  e.pos_v = static_cast<int>(lv.size());
  lv.push_back(id);
  set_flag(vnode(e.level, e.v), bit, true);
}

void DynamicConnectivity::list_remove(int id) {
  EdgeRecord& e = edges_[id];
  const std::uint8_t bit = e.tree ? kTreeFlag : kNonTreeFlag;
  for (int side = 0; side < 2; ++side) {
    const int x = side == 0 ? e.u : e.v;
    const int pos = side == 0 ? e.pos_u : e.pos_v;
    auto& list = incidence(e.level, x, e.tree);
    const int moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (moved != id) {
      EdgeRecord& m = edges_[moved];
      (m.u == x ? m.pos_u : m.pos_v) = pos;
    }
    if (list.empty()) set_flag(vnode(e.level, x), bit, false);
  }
  e.pos_u = e.pos_v = -1;
}

// ---------------------------------------------------------------- public operations

std::uint64_t DynamicConnectivity::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

int DynamicConnectivity::find_edge(int u, int v) const {
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

void DynamicConnectivity::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_) throw ContractViolation("vertex out of range: " + std::to_string(v));
}

bool DynamicConnectivity::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return find_edge(u, v) >= 0;
}

bool DynamicConnectivity::connected(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return root_of(vnode(0, u)) == root_of(vnode(0, v));
}

int DynamicConnectivity::component_size(int v) const {
  check_vertex(v);
  return nodes_[root_of(vnode(0, v))].vertices;
}

void DynamicConnectivity::connect(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractViolation("self-loop insertion");
  if (find_edge(u, v) >= 0) return;
  int id;
  if (!free_edges_.empty()) {
    id = free_edges_.back();
    free_edges_.pop_back();
  } else {
    id = static_cast<int>(edges_.size());
    edges_.emplace_back();
  }
  edges_[id] = EdgeRecord{};
  EdgeRecord& e = edges_[id];
  e.u = u;
  e.v = v;
  e.level = 0;
  edge_index_.emplace(key(u, v), id);
  if (!connected(u, v)) {
    e.tree = true;
    link(0, e);
    --components_;
  }
  list_add(id);
}

void DynamicConnectivity::remove(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  const int id = find_edge(u, v);
  if (id < 0) throw ContractViolation("removing an absent edge");
  edge_index_.erase(key(u, v));
  list_remove(id);
  const bool was_tree = edges_[id].tree;
  const int top = edges_[id].level;
  if (was_tree) {
    for (int level = 0; level <= top; ++level) cut(level, edges_[id]);
  }
  edges_[id].arcs.clear();
  free_edges_.push_back(id);
  if (!was_tree) return;

  for (int level = top; level >= 0; --level) {
    const int root_u = root_of(vnode(level, u));
    const int root_v = root_of(vnode(level, v));
    const int small = nodes_[root_u].vertices <= nodes_[root_v].vertices ? root_u : root_v;
    const bool push = nodes_[small].vertices > level_threshold_;

    if (push) {
      ensure_level(level + 1);
      scratch_.clear();
      collect_flagged(small, kTreeFlag, scratch_);
      for (int node : scratch_) {
        auto& list = incidence(level, nodes_[node].vertex, true);
        while (!list.empty()) {
          const int id = list.back();
          list_remove(id);
          edges_[id].level = level + 1;
          link(level + 1, edges_[id]);
          list_add(id);
        }
      }
    }

    scratch_.clear();
    collect_flagged(small, kNonTreeFlag, scratch_);
    const std::vector<int> holders(scratch_);
    for (int node : holders) {
      const int x = nodes_[node].vertex;
      const std::vector<int> candidates(incidence(level, x, false));
      for (int id : candidates) {
        EdgeRecord& e = edges_[id];
        if (e.tree || e.level != level) continue;
        const int y = e.u == x ? e.v : e.u;
        if (root_of(vnode(level, y)) != root_of(vnode(level, x))) {
          list_remove(id);
          e.tree = true;
          for (int l = 0; l <= level; ++l) link(l, e);
          list_add(id);
          return;
        }
        if (push) {
          list_remove(id);
          e.level = level + 1;
          list_add(id);
        }
      }
    }
  }
  ++components_;
}

// ---------------------------------------------------------------- reference

RecomputeConnectivity::RecomputeConnectivity(int n, std::int64_t) : adjacency_(n) {}

int RecomputeConnectivity::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<int>(adjacency_.size()) - 1;
}

void RecomputeConnectivity::connect(int u, int v) {
  auto& a = adjacency_[u];
  if (std::find(a.begin(), a.end(), v) != a.end()) return;
  a.push_back(v);
  adjacency_[v].push_back(u);
}

void RecomputeConnectivity::remove(int u, int v) {
  auto& a = adjacency_[u];
  auto it = std::find(a.begin(), a.end(), v);
  if (it == a.end()) throw ContractViolation("removing an absent edge");
  a.erase(it);
  auto& b = adjacency_[v];
  b.erase(std::find(b.begin(), b.end(), u));
}

bool RecomputeConnectivity::connected(int u, int v) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

int RecomputeConnectivity::number_of_components() const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack;
  int count = 0;
  for (std::size_t s = 0; s < adjacency_.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.assign(1, static_cast<int>(s));
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace mlskel
