#include "mlskel/separators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "marker.hpp"

namespace mlskel {

Separator make_separator(const EmbeddedGraph& g, std::vector<Vertex> members, int level, const Point& center) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Separator s;
  s.level = level;
  s.footprint = 0;
  for (Vertex v : members) s.footprint += g.capacity(v);
  s.members = std::move(members);
  s.center = center;
  return s;
}

Point barycenter(const EmbeddedGraph& g, std::span<const Vertex> members) {
  Point sum = Point::Zero();
  double weight = 0.0;
  for (Vertex v : members) {
    sum += static_cast<double>(g.capacity(v)) * g.position(v);
    weight += static_cast<double>(g.capacity(v));
  }
  return weight > 0 ? Point(sum / weight) : sum;
}

namespace {

struct SearchScratch {
  detail::Marker in_sigma;
  detail::Marker in_front;
  detail::Marker has_local;
  std::vector<int> local_id;
  std::vector<int> front_slot;
  std::vector<Vertex> front;
  std::vector<Vertex> sigma;

  void reset(Vertex n) {
    in_sigma.reset(n);
    in_front.reset(n);
    has_local.reset(n);
    if (local_id.size() < static_cast<std::size_t>(n)) {
      local_id.resize(n);
      front_slot.resize(n);
    }
    front.clear();
    sigma.clear();
  }
};

}  // namespace

template <class Front>
std::optional<Separator> search_separator(const EmbeddedGraph& g, Vertex v0, int alpha,
                                          std::int64_t dyncon_threshold, int level) {
  if (alpha < 1) throw ContractViolation("alpha must be >= 1");
  if (!g.contains(v0)) throw ContractViolation("start vertex out of range");

  thread_local SearchScratch st;
  st.reset(g.vertex_count());
  Front conn(0, dyncon_threshold);

  auto local = [&](Vertex v) {
    if (!st.has_local.marked(v)) {
      st.has_local.mark(v);
      st.local_id[v] = conn.add_vertex();
    }
    return st.local_id[v];
  };
  auto add_to_front = [&](Vertex x) {
    const int lx = local(x);
    st.in_front.mark(x);
    st.front_slot[x] = static_cast<int>(st.front.size());
    st.front.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      if (st.in_front.marked(y) && y != x) conn.connect(lx, st.local_id[y]);
    }
  };
  auto drop_from_front = [&](Vertex v) {
    const int lv = st.local_id[v];
    for (Vertex w : g.neighbors(v)) {
      if (st.in_front.marked(w)) conn.remove(lv, st.local_id[w]);
    }
    st.in_front.unmark(v);
    const int slot = st.front_slot[v];
    const Vertex last = st.front.back();
    st.front[slot] = last;
    st.front_slot[last] = slot;
    st.front.pop_back();
  };

  Point center = g.position(v0);
  double radius = 0.0;
  add_to_front(v0);

  for (int i = 1;; ++i) {
    // nearest front vertex to the sphere center, ties to the smaller id
    Vertex v = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Vertex f : st.front) {
      const double d = (center - g.position(f)).squaredNorm();
      if (d < best || (d == best && f < v)) {
        best = d;
        v = f;
      }
    }
    const Point& pv = g.position(v);
    const double dist = (center - pv).norm();
    if (dist > radius) {
      radius = 0.5 * (radius + dist);
      center = pv + (radius / (kSphereEpsilon + dist)) * (center - pv);
    }

    st.sigma.push_back(v);
    st.in_sigma.mark(v);
    drop_from_front(v);
    for (Vertex x : g.neighbors(v)) {
      if (!st.in_sigma.marked(x) && !st.in_front.marked(x)) add_to_front(x);
    }

    const int front_components = conn.number_of_components() - static_cast<int>(st.sigma.size());
    if (front_components > 1) {
      return make_separator(g, st.sigma, level, center);
    }
    if (front_components == 0 || i >= alpha) return std::nullopt;
  }
}

template std::optional<Separator> search_separator<DynamicConnectivity>(const EmbeddedGraph&, Vertex, int,
                                                                        std::int64_t, int);
template std::optional<Separator> search_separator<RecomputeConnectivity>(const EmbeddedGraph&, Vertex, int,
                                                                          std::int64_t, int);

Separator shrink_separator(const EmbeddedGraph& g, const Separator& s) {
  if (s.members.empty() || !separates(g, s.members)) {
    throw ContractViolation("shrink_separator needs a valid local separator");
  }
  thread_local detail::Marker in_set;
  in_set.reset(g.vertex_count());
  for (Vertex v : s.members) in_set.mark(v);

  const std::size_t k = s.members.size();
  std::vector<double> raw(k);
  for (std::size_t i = 0; i < k; ++i) raw[i] = (g.position(s.members[i]) - s.center).norm();
  std::vector<double> smoothed(k);
  for (std::size_t i = 0; i < k; ++i) {
    double sum = raw[i];
    int count = 1;
    for (Vertex w : g.neighbors(s.members[i])) {
      if (!in_set.marked(w)) continue;
      const auto j = static_cast<std::size_t>(
          std::lower_bound(s.members.begin(), s.members.end(), w) - s.members.begin());
      sum += raw[j];
      ++count;
    }
    smoothed[i] = sum / count;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return smoothed[a] > smoothed[b]; });

  std::vector<char> kept(k, 1);
  std::size_t remaining = k;
  std::vector<Vertex> candidate;
  candidate.reserve(k);
  bool moved = true;
  while (moved && remaining > 1) {
    moved = false;
    for (std::size_t idx : order) {
      if (!kept[idx] || remaining == 1) continue;
      candidate.clear();
      for (std::size_t j = 0; j < k; ++j) {
        if (kept[j] && j != idx) candidate.push_back(s.members[j]);
      }
      if (separates(g, candidate)) {
        kept[idx] = 0;
        --remaining;
        moved = true;
      }
    }
  }
  std::vector<Vertex> members;
  members.reserve(remaining);
  for (std::size_t j = 0; j < k; ++j) {
    if (kept[j]) members.push_back(s.members[j]);
  }
  return make_separator(g, std::move(members), s.level, s.center);
}

Separator thicken_separator(const EmbeddedGraph& g, const Separator& s) {
  if (s.members.empty() || !separates(g, s.members)) {
    throw ContractViolation("thicken_separator needs a valid local separator");
  }
  std::vector<Vertex> members = s.members;
  for (Vertex u : front_vertices(g, s.members)) {
    members.push_back(u);
    if (!separates(g, members)) members.pop_back();
  }
  return make_separator(g, std::move(members), s.level, s.center);
}

}  // namespace mlskel
