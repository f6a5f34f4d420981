#include "doctest.h"
#include "helpers.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/properties.hpp"

using namespace maxsub;
using testing::sets;
using testing::ue_graph;
using testing::vs;

namespace {

using Solver = SolutionSet (*)(const InducedSubgraph&, std::optional<VertexId>);

struct Specialized {
  const Property& property;
  Solver solver;
};

std::vector<Specialized> specialized() {
  return {{clique_property(), restricted_clique},
          {independent_set_property(), restricted_independent_set},
          {connected_bipartite_property(), restricted_connected_bipartite},
          {star_property(), restricted_star},
          {rooted_clique_property(), restricted_rooted_clique}};
}

// Two-colouring by trying every assignment.
bool two_colourable(const Graph& g) {
  const std::size_t n = g.size();
  for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << n); ++colour) {
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      if (((colour >> a) & 1U) == ((colour >> b) & 1U)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::size_t compare_solvers(const Graph& g) {
  std::size_t checked = 0;
  const auto u = whole(g);
  for (const auto& [p, solver] : specialized()) {
    if (!almost_satisfies(p, u)) continue;
    const auto oracle = brute_force_all(p, g);
    INFO(p.name, "\n", format_graph(g));
    REQUIRE(solver(u, std::nullopt) == oracle);
    REQUIRE(generic_restricted(p, u) == oracle);
    for (VertexId v = 0; v < g.size(); ++v) {
      const auto expect = brute_force_with_vertex(p, g, v);
      REQUIRE(solver(u, v) == expect);
      REQUIRE(generic_restricted(p, u, v) == expect);
    }
    ++checked;
  }
  return checked;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("predicates on small graphs") {
  const Graph tri = testing::triangle();
  CHECK(is_clique(whole(tri)));
  CHECK_FALSE(is_bipartite(whole(tri)));
  const Graph c4 = ue_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_bipartite(whole(c4)));
  CHECK(is_connected_bipartite(whole(c4)));
  CHECK_FALSE(is_star(whole(c4)));
  CHECK(is_rooted_clique(whole(ue_graph(2, {{0, 1}}, VertexId{0}))));
  CHECK(is_star(whole(ue_graph(4, {{0, 1}, {0, 2}, {0, 3}}))));
  CHECK(is_star(whole(ue_graph(2, {{0, 1}}))));
  CHECK(is_star(whole(Graph(1, {}))));
  CHECK_FALSE(is_star(whole(Graph(2, {}))));
  CHECK(is_independent_set(whole(Graph(3, {}))));
  CHECK_FALSE(is_independent_set(whole(testing::path3())));
}

TEST_CASE("explanations name the failure") {
  CHECK(clique_property().explain(whole(Graph(2, {}))).find("not adjacent") != std::string::npos);
  CHECK(bipartite_property().explain(whole(testing::triangle())).find("odd") != std::string::npos);
  CHECK(bipartite_property().explain(whole(testing::path3())).empty());
}

TEST_CASE("bipartite agrees with brute-force two-colouring") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Graph g = random_undirected(2 + seed % 9, 0.1 + 0.05 * (seed % 8), seed);
    CHECK(is_bipartite(whole(g)) == two_colourable(g));
    const auto side = bipartition(whole(g));
    CHECK(side.has_value() == two_colourable(g));
    if (side) {
      for (const auto& [a, b] : g.edges()) CHECK(side->contains(a) != side->contains(b));
    }
  }
}

TEST_CASE("restricted_clique examples") {
  const Graph apex = testing::triangle_apex();
  CHECK(restricted_clique(whole(apex)) == brute_force_all(clique_property(), apex));
  CHECK(restricted_clique(whole(apex)) == sets(4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(restricted_clique(whole(testing::triangle())) == sets(3, {{0, 1, 2}}));
  CHECK(restricted_clique(whole(apex), VertexId{3}) ==
        brute_force_with_vertex(clique_property(), apex, 3));
  CHECK(restricted_clique(whole(apex), VertexId{3}) == sets(4, {{0, 1, 3}}));
}

TEST_CASE("restricted_independent_set examples") {
  const Graph star = ue_graph(3, {{0, 1}, {0, 2}});  // centre 0
  CHECK(restricted_independent_set(whole(star)) ==
        brute_force_all(independent_set_property(), star));
  CHECK(restricted_independent_set(whole(star)) == sets(3, {{1, 2}, {0}}));
  CHECK(restricted_independent_set(whole(Graph(3, {}))) == sets(3, {{0, 1, 2}}));
  CHECK(restricted_independent_set(whole(ue_graph(2, {{0, 1}})), VertexId{1}) ==
        sets(2, {{1}}));
}

TEST_CASE("restricted_connected_bipartite examples") {
  using namespace g1;
  const Graph g = make_g1();
  CHECK(restricted_connected_bipartite(whole(g), kW) ==
        sets(5, {{kV1, kV2, kU1, kW}, {kU2, kW}}));
  CHECK(restricted_connected_bipartite(whole(g), kU1) ==
        brute_force_with_vertex(connected_bipartite_property(), g, kU1));
  CHECK(restricted_connected_bipartite(whole(g), kU1) ==
        sets(5, {{kV1, kV2, kU1, kU2}, {kV1, kV2, kU1, kW}}));
  const Graph c4 = ue_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(restricted_connected_bipartite(whole(c4), v) == sets(4, {{0, 1, 2, 3}}));
  }
}

TEST_CASE("restricted_connected_bipartite output is not bounded by three") {
  // The five-cycle almost satisfies the property and has five maximal
  // connected bipartite subgraphs (the five paths on four vertices).
  const Graph c5 = ue_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto oracle = brute_force_all(connected_bipartite_property(), c5);
  CHECK(oracle.size() == 5);
  CHECK(restricted_connected_bipartite(whole(c5)) == oracle);
}

TEST_CASE("restricted_star examples") {
  // Star centre 0 with leaves 1, 2; vertex 3 adjacent to 0 and 1.
  const Graph a = ue_graph(4, {{0, 1}, {0, 2}, {3, 0}, {3, 1}});
  CHECK(restricted_star(whole(a), VertexId{0}) == brute_force_with_vertex(star_property(), a, 0));
  CHECK(restricted_star(whole(a), VertexId{0}) == sets(4, {{0, 2, 3}, {0, 1, 2}}));

  const Graph s = ue_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(restricted_star(whole(s), VertexId{2}) == sets(4, {{0, 1, 2, 3}}));

  // Vertex 3 adjacent only to leaf 1. The maximal star through 3 keeps the
  // centre: {0, 1, 3} is the path 0-1-3, a star centred at 1.
  const Graph b = ue_graph(4, {{0, 1}, {0, 2}, {3, 1}});
  const auto oracle = brute_force_with_vertex(star_property(), b, 3);
  CHECK(oracle == sets(4, {{0, 1, 3}}));
  CHECK(restricted_star(whole(b), VertexId{3}) == oracle);
}

TEST_CASE("restricted_rooted_clique examples") {
  const Graph g = Graph(3, {{0, 1}, {1, 0}, {0, 2}}, VertexId{0});
  CHECK(restricted_rooted_clique(whole(g), VertexId{0}) ==
        brute_force_with_vertex(rooted_clique_property(), g, 0));
  CHECK(restricted_rooted_clique(whole(g), VertexId{0}) == sets(3, {{0, 1}, {0, 2}}));
  const Graph k3 = Graph(3, {{0, 1}, {0, 2}, {1, 2}}, VertexId{0});
  CHECK(restricted_rooted_clique(whole(k3)) == sets(3, {{0, 1, 2}}));
  CHECK(restricted_rooted_clique(whole(Graph(3, {{0, 1}, {0, 2}})), std::nullopt).empty());
}

TEST_CASE("specialized solvers reject universes that do not almost satisfy") {
  const Graph two = ue_graph(4, {});
  CHECK_THROWS_AS(restricted_clique(whole(two)), ContractError);
  const Graph k4 = ue_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(restricted_independent_set(whole(k4)), ContractError);
}

TEST_CASE("example graph G1") {
  using namespace g1;
  const Graph g = make_g1();
  CHECK(g.size() == 5);
  const auto all = brute_force_all(connected_bipartite_property(), g);
  CHECK(all.size() == 3);
  CHECK(all == sets(5, {{kV1, kV2, kU1, kU2}, {kV1, kV2, kU1, kW}, {kU2, kW}}));
}

TEST_CASE("example graph G2") {
  const Graph g = make_g2(1);
  CHECK(brute_force_all(bipartite_property(), g) ==
        sets(3, {{g2_v(1), g2_u(1)}, {0, g2_v(1)}, {0, g2_u(1)}}));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(brute_force_all(bipartite_property(), make_g2(n)).size() == (std::size_t{1} << n) + 1);
  }
  CHECK_THROWS_AS(make_g2(0), ContractError);
}

TEST_CASE("specialized solvers equal generic and oracle: exhaustive n <= 6") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_undirected_graph(n, VertexId{0}, [&](const Graph& g) { checked += compare_solvers(g); });
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_digraph(n, VertexId{0}, [&](const Graph& g) { checked += compare_solvers(g); });
  }
  CHECK(checked > 10000);
}

TEST_CASE("specialized solvers equal generic and oracle: 500 random digraphs n <= 9") {
  std::size_t checked = 0;
  testing::for_each_random_digraph(500, 9, 9001, [&](const Graph& g) { checked += compare_solvers(g); });
  // Sparse rooted DAG-like graphs almost satisfy the rooted property often.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    checked += compare_solvers(random_rooted_dag(3 + seed % 7, 0.2, seed));
    checked += compare_solvers(random_tree(3 + seed % 7, seed));
  }
  CHECK(checked > 200);
}

TEST_CASE("catalog lookup") {
  CHECK(property_catalog().size() == 6);
  for (const Property* p : property_catalog()) CHECK(find_property(p->name) == p);
  CHECK(find_property("nope") == nullptr);
  CHECK(find_property("bipartite")->cls == PropertyClass::kHereditary);
  CHECK(find_property("star")->cls == PropertyClass::kConnectedHereditary);
  CHECK(find_property("rooted-clique")->cls == PropertyClass::kRootedHereditary);
}

}
