#include "mlskel/multilevel.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include <json.hpp>

#include "parallel.hpp"

namespace mlskel {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct MembersHash {
  std::size_t operator()(const std::vector<Vertex>& members) const {
    std::size_t h = members.size();
    for (Vertex v : members) h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

Separator project_separator(const ContractionRecord& record, const Separator& s, const EmbeddedGraph& fine) {
  std::vector<Vertex> members;
  for (Vertex c : s.members) {
    if (c < 0 || static_cast<std::size_t>(c) >= record.children.size()) {
      throw ContractViolation("separator vertex is not a coarse vertex of this record");
    }
    const auto& kids = record.children[c];
    members.insert(members.end(), kids.begin(), kids.end());
  }
  return make_separator(fine, std::move(members), record.fine_level, s.center);
}

std::optional<Separator> refine_separator(const EmbeddedGraph& g, const Separator& projected, RefineMode mode) {
  if (!separates(g, projected.members)) return std::nullopt;
  if (mode == RefineMode::thicken_then_shrink) return shrink_separator(g, thicken_separator(g, projected));
  return shrink_separator(g, projected);
}

std::vector<Separator> dedup_filter(std::vector<Separator> pool) {
  std::unordered_set<std::vector<Vertex>, MembersHash> seen;
  std::vector<Separator> out;
  out.reserve(pool.size());
  for (auto& s : pool) {
    std::vector<Vertex> key = s.members;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(s));
  }
  return out;
}

SeparatorPool capacity_pack(const EmbeddedGraph& g, std::vector<Separator> pool) {
  std::stable_sort(pool.begin(), pool.end(), [](const Separator& a, const Separator& b) {
    if (a.footprint != b.footprint) return a.footprint < b.footprint;
    return a.members < b.members;
  });
  SeparatorPool packed;
  packed.level = pool.empty() ? 0 : pool.front().level;
  packed.usage.assign(g.vertex_count(), 0);
  for (auto& s : pool) {
    const bool fits = std::all_of(s.members.begin(), s.members.end(),
                                  [&](Vertex v) { return packed.usage[v] + 1 <= g.capacity(v); });
    if (!fits) continue;
    for (Vertex v : s.members) ++packed.usage[v];
    packed.separators.push_back(std::move(s));
  }
  return packed;
}

std::vector<Separator> drop_touching(const EmbeddedGraph& g, std::vector<Separator> pool) {
  std::vector<char> blocked(g.vertex_count(), 0);
  std::vector<Separator> kept;
  kept.reserve(pool.size());
  for (auto& s : pool) {
    const bool touches = std::any_of(s.members.begin(), s.members.end(), [&](Vertex v) { return blocked[v]; });
    if (touches) continue;
    for (Vertex v : s.members) {
      blocked[v] = 1;
      for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    kept.push_back(std::move(s));
  }
  return kept;
}

std::vector<int> membership_counts(Vertex n, std::span<const Separator> pool) {
  std::vector<int> counts(n, 0);
  for (const auto& s : pool) {
    for (Vertex v : s.members) ++counts[v];
  }
  return counts;
}

double unit_uniform(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Vertex> sample_start_vertices(const EmbeddedGraph& g, std::span<const Separator> pool, Rng& rng) {
  const auto counts = membership_counts(g.vertex_count(), pool);
  std::vector<Vertex> starts;
  for (Vertex v : random_order(g.vertex_count(), rng)) {
    if (accept_start(counts[v], unit_uniform(rng))) starts.push_back(v);
  }
  return starts;
}

std::string to_json(const RunReport& report, int indent) {
  nlohmann::ordered_json j;
  auto& levels = j["levels"] = nlohmann::ordered_json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"level", l.level},
                      {"vertices", l.vertices},
                      {"edges", l.edges},
                      {"projected", l.projected},
                      {"refine_failures", l.refine_failures},
                      {"searches", l.searches},
                      {"found", l.found},
                      {"deduped", l.deduped},
                      {"packed", l.packed},
                      {"touching_dropped", l.touching_dropped}});
  }
  j["phases_seconds"] = {{"coarsen", report.seconds.coarsen}, {"search", report.seconds.search},
                         {"project", report.seconds.project}, {"pack", report.seconds.pack},
                         {"extract", report.seconds.extract}, {"total", report.seconds.total}};
  j["coarsening_stalled"] = report.coarsening_stalled;
  j["refine_failures"] = report.refine_failures;
  return j.dump(indent);
}

SkeletonizeResult multilevel_skeletonize(const EmbeddedGraph& g, const SkeletonizeConfig& config) {
  if (config.alpha < 1) throw ContractViolation("alpha must be >= 1");
  if (config.threads < 1) throw ContractViolation("threads must be >= 1");
  if (config.sampling_batch < 1) throw ContractViolation("sampling batch must be >= 1");

  const Stopwatch total;
  SkeletonizeResult result;
  RunReport& report = result.report;
  Rng rng(config.seed);

  LevelHierarchy hierarchy;
  int search_alpha = config.alpha;
  {
    const Stopwatch watch;
    if (config.baseline) {
      hierarchy.graphs.push_back(g);
      search_alpha = std::max<Vertex>(1, g.vertex_count());
    } else {
      hierarchy = build_hierarchy(g, config.alpha, rng);
    }
    report.seconds.coarsen = config.baseline ? 0.0 : watch.seconds();
  }
  report.coarsening_stalled = hierarchy.stalled;

  std::vector<Separator> pool;
  for (int level = hierarchy.level_count() - 1; level >= 0; --level) {
    const EmbeddedGraph& graph = hierarchy.graphs[level];
    LevelReport lr;
    lr.level = level;
    lr.vertices = graph.vertex_count();
    lr.edges = graph.edge_count();

    if (level + 1 < hierarchy.level_count()) {
      const Stopwatch watch;
      const ContractionRecord& record = hierarchy.records[level];
      std::vector<std::optional<Separator>> refined(pool.size());
      detail::parallel_for(pool.size(), std::min(2, config.threads), [&](std::size_t i) {
        refined[i] = refine_separator(graph, project_separator(record, pool[i], graph), config.refine);
      });
      lr.projected = static_cast<int>(pool.size());
      std::vector<Separator> next;
      next.reserve(pool.size());
      for (auto& r : refined) {
        if (r) {
          next.push_back(std::move(*r));
        } else {
          ++lr.refine_failures;
        }
      }
      pool = std::move(next);
      report.seconds.project += watch.seconds();
    }

    {
      const Stopwatch watch;
      std::vector<int> covered = membership_counts(graph.vertex_count(), pool);
      const auto order = random_order(graph.vertex_count(), rng);
      std::vector<double> draws(order.size());
      for (auto& u : draws) u = unit_uniform(rng);

      std::vector<Vertex> starts;
      std::vector<std::optional<Separator>> found;
      const auto batch = static_cast<std::size_t>(config.sampling_batch);
      for (std::size_t begin = 0; begin < order.size(); begin += batch) {
        const std::size_t end = std::min(order.size(), begin + batch);
        starts.clear();
        for (std::size_t k = begin; k < end; ++k) {
          if (accept_start(covered[order[k]], draws[k])) starts.push_back(order[k]);
        }
        found.assign(starts.size(), std::nullopt);
        detail::parallel_for(starts.size(), config.threads, [&](std::size_t i) {
          auto s = restricted_separator_search(graph, starts[i], search_alpha, config.dyncon_threshold, level);
          if (s) found[i] = shrink_separator(graph, *s);
        });
        lr.searches += static_cast<int>(starts.size());
        for (auto& s : found) {
          if (!s) continue;
          ++lr.found;
          for (Vertex v : s->members) ++covered[v];
          pool.push_back(std::move(*s));
        }
      }
      report.seconds.search += watch.seconds();
    }

    {
      const Stopwatch watch;
      pool = dedup_filter(std::move(pool));
      lr.deduped = static_cast<int>(pool.size());
      SeparatorPool packed = capacity_pack(graph, std::move(pool));
      pool = std::move(packed.separators);
      lr.packed = static_cast<int>(pool.size());
      if (level == 0) {
        pool = drop_touching(graph, std::move(pool));
        lr.touching_dropped = lr.packed - static_cast<int>(pool.size());
      }
      report.seconds.pack += watch.seconds();
    }
    report.refine_failures += lr.refine_failures;
    report.levels.push_back(lr);
  }

  {
    const Stopwatch watch;
    result.skeleton = extract_skeleton(g, pool);
    report.seconds.extract = watch.seconds();
  }
  result.separators = std::move(pool);
  report.seconds.total = total.seconds();
  return result;
}

}  // namespace mlskel
