#include <doctest.h>

#include <cmath>

#include "mlskel/multilevel.hpp"
#include "mlskel/synthetic.hpp"
#include "oracles.hpp"

using namespace mlskel;

namespace {

Separator sep(const EmbeddedGraph& g, std::vector<Vertex> members, int level = 0) {
  return make_separator(g, std::move(members), level, Point::Zero());
}

int skeleton_components(const Skeleton& s) { return connected_components(s.graph).count; }

}  // namespace

TEST_SUITE("multilevel") {
  TEST_CASE("projection examples") {
    const auto p2 = oracle::path(2);
    const auto [coarse, record] = contract(p2, Matching{{0, 1}});
    CHECK(project_separator(record, sep(coarse, {0}, 1), p2).members == std::vector<Vertex>{0, 1});

    const auto c8 = oracle::cycle(8);
    const auto [same, identity] = contract(c8, Matching{});
    const auto s = sep(same, {3}, 1);
    CHECK(project_separator(identity, s, c8).members == std::vector<Vertex>{3});

    const auto torus_g = mesh_graph(torus(16, 8));
    const auto h = build_hierarchy(torus_g, 16, 3);
    REQUIRE(h.level_count() >= 2);
    const auto& fine = h.graphs[0];
    const auto& mid = h.graphs[1];
    for (Vertex v = 0; v + 2 < mid.vertex_count(); v += 5) {
      const auto coarse_s = sep(mid, {v, mid.neighbors(v)[0]}, 1);
      const auto projected = project_separator(h.records[0], coarse_s, fine);
      CHECK(projected.footprint == coarse_s.footprint);
      CHECK(projected.level == 0);
    }
    CHECK_THROWS_AS(project_separator(record, sep(c8, {5}, 1), p2), ContractViolation);
  }

  TEST_CASE("refinement examples") {
    const auto c8 = oracle::cycle(8);
    const auto [c4, record] = contract(c8, Matching{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    REQUIRE(c4.vertex_count() == 4);
    REQUIRE(c4.edge_count() == 4);
    const auto projected = project_separator(record, sep(c4, {0}, 1), c8);
    CHECK(projected.members == std::vector<Vertex>{0, 1});
    for (RefineMode mode : {RefineMode::shrink_only, RefineMode::thicken_then_shrink}) {
      const auto refined = refine_separator(c8, projected, mode);
      REQUIRE(refined.has_value());
      CHECK(refined->members.size() == 1);
    }

    const auto already = refine_separator(c8, sep(c8, {2}), RefineMode::shrink_only);
    REQUIRE(already.has_value());
    CHECK(already->members == std::vector<Vertex>{2});

    const EmbeddedGraph k4_minus(oracle::line_positions(4), std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(oracle::local_separator(k4_minus, {2}));
    CHECK_FALSE(refine_separator(k4_minus, sep(k4_minus, {2}), RefineMode::shrink_only).has_value());
  }

  TEST_CASE("dedup examples") {
    const auto g = oracle::path(4);
    CHECK(dedup_filter({sep(g, {0, 1}), sep(g, {0, 1})}).size() == 1);
    Separator unsorted;
    unsorted.members = {1, 0};
    CHECK(dedup_filter({sep(g, {0, 1}), unsorted}).size() == 1);
    CHECK(dedup_filter({sep(g, {0}), sep(g, {0, 1})}).size() == 2);
    const auto kept = dedup_filter({sep(g, {2}), sep(g, {0}), sep(g, {2})});
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].members == std::vector<Vertex>{2});
  }

  TEST_CASE("capacity pack examples") {
    const auto unit = oracle::path(3);
    const auto a = capacity_pack(unit, {sep(unit, {0, 1}), sep(unit, {1, 2})});
    REQUIRE(a.separators.size() == 1);
    CHECK(a.separators[0].members == std::vector<Vertex>{0, 1});

    const EmbeddedGraph wide(oracle::line_positions(3), std::vector<std::int64_t>{1, 2, 1},
                             std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(capacity_pack(wide, {sep(wide, {0, 1}), sep(wide, {1, 2})}).separators.size() == 2);
    CHECK(capacity_pack(unit, {}).separators.empty());

    // ascending footprint wins over pool order
    const auto p5 = oracle::path(5);
    const auto small_first = capacity_pack(p5, {sep(p5, {1, 2, 3}), sep(p5, {2})});
    REQUIRE(small_first.separators.size() == 1);
    CHECK(small_first.separators[0].members == std::vector<Vertex>{2});
  }

  TEST_CASE("capacity pack respects capacities on random pools") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 20 + trial % 30;
      std::vector<std::int64_t> caps(n);
      for (auto& c : caps) c = 1 + static_cast<std::int64_t>(rng() % 3);
      const EmbeddedGraph g(oracle::line_positions(n), caps, std::vector<Edge>{});
      std::vector<Separator> pool;
      const int count = static_cast<int>(rng() % 40);
      for (int i = 0; i < count; ++i) {
        std::vector<Vertex> m;
        const int size = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < size; ++k) m.push_back(static_cast<Vertex>(rng() % n));
        pool.push_back(sep(g, m));
      }
      const auto packed = capacity_pack(g, pool);
      std::vector<std::int64_t> usage(n, 0);
      for (const auto& s : packed.separators) {
        for (Vertex v : s.members) ++usage[v];
      }
      CHECK(usage == packed.usage);
      for (Vertex v = 0; v < n; ++v) REQUIRE(usage[v] <= caps[v]);
      // greedy: every rejected separator would overflow some vertex
      for (const auto& s : pool) {
        if (std::find(packed.separators.begin(), packed.separators.end(), s) != packed.separators.end()) continue;
        bool overflow = false;
        for (Vertex v : s.members) overflow = overflow || usage[v] + 1 > caps[v];
        REQUIRE(overflow);
      }
    }
  }

  TEST_CASE("touching separators are dropped") {
    const auto p9 = oracle::path(9);
    const auto kept = drop_touching(p9, {sep(p9, {2}), sep(p9, {3}), sep(p9, {4}), sep(p9, {6})});
    REQUIRE(kept.size() == 3);
    CHECK(kept[0].members == std::vector<Vertex>{2});
    CHECK(kept[1].members == std::vector<Vertex>{4});
    CHECK(kept[2].members == std::vector<Vertex>{6});
    CHECK(drop_touching(p9, {}).empty());
  }

  TEST_CASE("start vertex sampling law") {
    const auto g = oracle::cycle(30);
    Rng rng(1);
    CHECK(sample_start_vertices(g, {}, rng).size() == 30);

    const std::vector<Separator> one{sep(g, {0})};
    std::vector<Separator> twenty(20, sep(g, {1}));
    int hits_one = 0;
    int hits_twenty = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
      Rng r(static_cast<std::uint64_t>(t) + 1);
      const auto a = sample_start_vertices(g, one, r);
      hits_one += std::count(a.begin(), a.end(), 0);
      CHECK(a.size() >= 29);
      const auto b = sample_start_vertices(g, twenty, r);
      hits_twenty += std::count(b.begin(), b.end(), 1);
    }
    CHECK(std::abs(hits_one / static_cast<double>(trials) - 0.5) <= 0.02);
    CHECK(hits_twenty <= 1);

    CHECK(accept_start(0, 0.999));
    CHECK_FALSE(accept_start(1, 0.5));
    CHECK_FALSE(accept_start(5000, 0.0));
  }

  TEST_CASE("small inputs run on a single level") {
    const auto c8 = oracle::cycle(8);
    SkeletonizeConfig cfg;
    cfg.alpha = 64;
    const auto r = multilevel_skeletonize(c8, cfg);
    CHECK(r.report.levels.size() == 1);
    CHECK(cycle_rank(r.skeleton.graph) == 1);
    cfg.alpha = 0;
    CHECK_THROWS_AS(multilevel_skeletonize(c8, cfg), ContractViolation);
  }

  TEST_CASE("torus skeleton has one cycle for every seed") {
    const auto g = mesh_graph(torus(32, 32));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SkeletonizeConfig cfg;
      cfg.seed = seed;
      const auto r = multilevel_skeletonize(g, cfg);
      CHECK(cycle_rank(r.skeleton.graph) == 1);
      CHECK(skeleton_components(r.skeleton) == 1);
      CHECK(r.report.levels.size() > 1);
    }
  }

  TEST_CASE("components are preserved end to end") {
    const auto g = mesh_graph(disjoint_union(torus(24, 12), uv_sphere(10, 16)));
    SkeletonizeConfig cfg;
    cfg.seed = 3;
    const auto r = multilevel_skeletonize(g, cfg);
    CHECK(skeleton_components(r.skeleton) == 2);
    CHECK(cycle_rank(r.skeleton.graph) == 1);
  }

  TEST_CASE("final separators are disjoint minimal separators") {
    const auto g = mesh_graph(holed_block(2, 3));
    SkeletonizeConfig cfg;
    cfg.seed = 4;
    cfg.alpha = 32;
    const auto r = multilevel_skeletonize(g, cfg);
    REQUIRE_FALSE(r.separators.empty());
    std::vector<int> used(g.vertex_count(), 0);
    for (const auto& s : r.separators) {
      CHECK(s.level == 0);
      CHECK(oracle::minimal_sparse(g, s.members));
      for (Vertex v : s.members) CHECK(++used[v] == 1);
    }
    CHECK(cycle_rank(r.skeleton.graph) == 2);
  }

  TEST_CASE("results do not depend on the thread count") {
    const auto g = mesh_graph(random_torus(8, 40, 16));
    SkeletonizeConfig cfg;
    cfg.seed = 12;
    const auto one = multilevel_skeletonize(g, cfg);
    cfg.threads = 4;
    const auto four = multilevel_skeletonize(g, cfg);
    CHECK(one.skeleton.graph == four.skeleton.graph);
    CHECK(one.separators == four.separators);
    cfg.seed = 13;
    CHECK(multilevel_skeletonize(g, cfg).separators != one.separators);
  }

  TEST_CASE("baseline mode skips coarsening and projection") {
    const auto g = mesh_graph(torus(20, 10));
    SkeletonizeConfig cfg;
    cfg.baseline = true;
    const auto r = multilevel_skeletonize(g, cfg);
    CHECK(r.report.levels.size() == 1);
    CHECK(r.report.seconds.coarsen == 0.0);
    CHECK(r.report.seconds.project == 0.0);
    CHECK(cycle_rank(r.skeleton.graph) == 1);
    const auto json = to_json(r.report);
    CHECK(json.find("\"phases_seconds\"") != std::string::npos);
    CHECK(json.find("\"touching_dropped\"") != std::string::npos);
  }

  TEST_CASE("thickened refinement also recovers the torus") {
    const auto g = mesh_graph(torus(32, 16));
    SkeletonizeConfig cfg;
    cfg.refine = RefineMode::thicken_then_shrink;
    const auto r = multilevel_skeletonize(g, cfg);
    CHECK(cycle_rank(r.skeleton.graph) == 1);
  }
}
