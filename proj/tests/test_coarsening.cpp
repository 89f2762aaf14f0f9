#include <doctest.h>

#include <cmath>
#include <set>

#include "mlskel/coarsening.hpp"
#include "mlskel/synthetic.hpp"
#include "oracles.hpp"

using namespace mlskel;

namespace {

void check_matching(const EmbeddedGraph& g, const Matching& m) {
  std::vector<int> hits(g.vertex_count(), 0);
  for (const auto& [u, v] : m) {
    REQUIRE(g.has_edge(u, v));
    ++hits[u];
    ++hits[v];
  }
  for (int h : hits) REQUIRE(h <= 1);
  // maximal: every edge has a matched endpoint
  for (const auto& [u, v] : g.edges()) REQUIRE(hits[u] + hits[v] >= 1);
}

void check_record(const EmbeddedGraph& fine, const EmbeddedGraph& coarse, const ContractionRecord& r) {
  REQUIRE(r.parent.size() == static_cast<std::size_t>(fine.vertex_count()));
  REQUIRE(r.children.size() == static_cast<std::size_t>(coarse.vertex_count()));
  for (std::size_t c = 0; c < r.children.size(); ++c) {
    REQUIRE_FALSE(r.children[c].empty());
    REQUIRE(std::is_sorted(r.children[c].begin(), r.children[c].end()));
    std::int64_t cap = 0;
    Point mean = Point::Zero();
    for (Vertex f : r.children[c]) {
      REQUIRE(r.parent[f] == static_cast<Vertex>(c));
      cap += fine.capacity(f);
      mean += static_cast<double>(fine.capacity(f)) * fine.position(f);
    }
    CHECK(coarse.capacity(static_cast<Vertex>(c)) == cap);
    CHECK((coarse.position(static_cast<Vertex>(c)) - mean / static_cast<double>(cap)).norm() < 1e-9);
  }
  // the coarse graph is the quotient of the fine graph
  const auto expected = oracle::quotient_edges(fine, r.parent);
  const auto actual = coarse.edges();
  CHECK(std::set<Edge>(actual.begin(), actual.end()) == std::set<Edge>(expected.begin(), expected.end()));
  CHECK(connected_components(coarse).count == connected_components(fine).count);
}

}  // namespace

TEST_SUITE("coarsening") {
  TEST_CASE("light edge matching examples") {
    std::vector<Point> p(3, Point::Zero());
    CHECK(light_edge_matching(EmbeddedGraph(p, std::vector<Edge>{}), std::vector<Vertex>{0, 1, 2}).empty());

    const auto p2 = oracle::path(2);
    const auto single = light_edge_matching(p2, std::vector<Vertex>{1, 0});
    REQUIRE(single.size() == 1);
    CHECK(std::set<Vertex>{single[0].first, single[0].second} == std::set<Vertex>{0, 1});

    // a=0 at x=0, b=1 at x=1, c=2 at x=3: |ab| < |bc|
    const EmbeddedGraph abc({Point(0, 0, 0), Point(1, 0, 0), Point(3, 0, 0)}, std::vector<Edge>{{0, 1}, {1, 2}});
    const auto m = light_edge_matching(abc, std::vector<Vertex>{1, 0, 2});
    REQUIRE(m.size() == 1);
    CHECK(std::set<Vertex>{m[0].first, m[0].second} == std::set<Vertex>{0, 1});
  }

  TEST_CASE("matchings are maximal and vertex-disjoint") {
    Rng rng(3);
    std::vector<EmbeddedGraph> graphs{mesh_graph(torus(20, 9)), mesh_graph(uv_sphere(10, 14)), oracle::star(30),
                                      oracle::grid(12, 7)};
    for (std::uint64_t s = 1; s <= 10; ++s) graphs.push_back(oracle::random_graph(40, 0.08, s));
    for (const auto& g : graphs) {
      for (int rep = 0; rep < 5; ++rep) check_matching(g, light_edge_matching(g, rng));
    }
  }

  TEST_CASE("random order is a permutation") {
    Rng rng(11);
    auto order = random_order(100, rng);
    std::sort(order.begin(), order.end());
    for (Vertex i = 0; i < 100; ++i) CHECK(order[i] == i);
    CHECK(random_order(0, rng).empty());
  }

  TEST_CASE("contract examples") {
    const auto k3 = oracle::complete(3);
    const auto [tri, r1] = contract(k3, Matching{{0, 1}});
    CHECK(tri.vertex_count() == 2);
    CHECK(tri.edge_count() == 1);
    check_record(k3, tri, r1);

    const auto p2 = oracle::path(2);
    const auto [one, r2] = contract(p2, Matching{{0, 1}});
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);
    CHECK(one.capacity(0) == 2);

    const EmbeddedGraph two_edges(oracle::line_positions(4), std::vector<Edge>{{0, 1}, {2, 3}});
    const auto [pair, r3] = contract(two_edges, Matching{{0, 1}, {3, 2}});
    CHECK(pair.vertex_count() == 2);
    CHECK(pair.edge_count() == 0);
    CHECK(connected_components(pair).count == 2);

    CHECK_THROWS_AS(contract(oracle::path(3), Matching{{0, 2}}), ContractViolation);
    CHECK_THROWS_AS(contract(oracle::path(3), Matching{{0, 1}, {1, 2}}), ContractViolation);
    CHECK_THROWS_AS(contract(oracle::path(3), Matching{{0, 7}}), ContractViolation);
  }

  TEST_CASE("coarsen level examples") {
    Rng rng(5);
    const auto p8 = oracle::path(8);
    const auto r = coarsen_level(p8, rng);
    CHECK(r.graph.vertex_count() <= 4);
    CHECK(r.halved);
    CHECK(connected_components(r.graph).count == 1);
    check_record(p8, r.graph, r.record);

    const auto star = oracle::star(99);
    const auto s = coarsen_level(star, rng);
    CHECK(s.rounds == kMaxMatchingRounds);
    CHECK(s.graph.vertex_count() == 100 - kMaxMatchingRounds);
    CHECK_FALSE(s.halved);
    CHECK_FALSE(s.stalled);

    const EmbeddedGraph isolated(oracle::line_positions(2), std::vector<Edge>{});
    const auto i = coarsen_level(isolated, rng);
    CHECK(i.stalled);
    CHECK(i.graph.vertex_count() == 2);
    const auto h = build_hierarchy(isolated, 1, 1);
    CHECK(h.stalled);
    CHECK(h.level_count() == 1);
  }

  TEST_CASE("hierarchy examples") {
    const auto small = build_hierarchy(oracle::cycle(10), 10, 1);
    CHECK(small.level_count() == 1);
    CHECK(small.records.empty());
    CHECK_FALSE(small.stalled);
    CHECK_THROWS_AS(build_hierarchy(oracle::cycle(10), 0, 1), ContractViolation);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto h = build_hierarchy(oracle::path(1000), 64, seed);
      CHECK(h.level_count() - 1 <= static_cast<int>(std::ceil(std::log2(1000.0 / 64))) + 1);
      CHECK(h.graphs.back().vertex_count() <= 64);
      for (const auto& g : h.graphs) CHECK(connected_components(g).count == 1);
    }

    std::vector<Point> pos;
    std::vector<Edge> edges;
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 50; ++i) {
        pos.emplace_back(std::cos(i * 0.1257) + 5 * k, std::sin(i * 0.1257), 0);
        edges.emplace_back(50 * k + i, 50 * k + (i + 1) % 50);
      }
    }
    const auto h = build_hierarchy(EmbeddedGraph(pos, edges), 8, 2);
    for (const auto& g : h.graphs) CHECK(connected_components(g).count == 2);
  }

  TEST_CASE("hierarchy invariants on meshes") {
    const std::vector<EmbeddedGraph> inputs{mesh_graph(torus(40, 16)), mesh_graph(holed_block(2, 3)),
                                            mesh_graph(random_torus(4, 30, 12)),
                                            voxel_graph(random_voxel_blob(1500, 3))};
    for (const auto& g : inputs) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto h = build_hierarchy(g, 32, seed);
        CHECK_FALSE(h.stalled);
        CHECK(h.graphs.back().vertex_count() <= 32);
        long long total = 0;
        for (const auto& level : h.graphs) total += level.vertex_count();
        CHECK(total <= 2LL * g.vertex_count());
        for (std::size_t i = 0; i < h.records.size(); ++i) {
          CHECK(h.records[i].fine_level == static_cast<int>(i));
          CHECK(h.records[i].coarse_level == static_cast<int>(i) + 1);
          check_record(h.graphs[i], h.graphs[i + 1], h.records[i]);
        }
        // composing all records maps the input straight onto the coarsest level
        if (!h.records.empty()) {
          ContractionRecord all = h.records[0];
          for (std::size_t i = 1; i < h.records.size(); ++i) all = compose(all, h.records[i]);
          CHECK(all.fine_level == 0);
          CHECK(all.coarse_level == h.level_count() - 1);
          check_record(g, h.graphs.back(), all);
        }
      }
      CHECK(build_hierarchy(g, 32, 7).graphs.back() == build_hierarchy(g, 32, 7).graphs.back());
    }
  }
}
