#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "ks/automorphism.hpp"
#include "ks/catalog.hpp"
#include "ks/cliques.hpp"
#include "ks/coloring.hpp"
#include "ks/error.hpp"
#include "ks/generators.hpp"
#include "ks/graph6.hpp"

using namespace ks;

namespace {

Graph seven_context_graph() { return *builtin_graph("seven-context"); }

// Small graphs of mixed structure for cross-checks against brute force.
std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{cycle_graph(5), cycle_graph(6), path_graph(4), complete_graph(4), johnson_graph(5, 2),
                         petersen_graph(), empty_graph(3)};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    out.push_back(oracle::random_graph(size(rng), density(rng), rng));
  }
  return out;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle_graph(7)));
  CHECK(Graph(64).vertices() == ~VertexMask{0});
}

TEST_CASE("graph6 known encodings") {
  // Pentagon 0-1-2-3-4-0 in the standard column-wise upper-triangle order.
  const Graph c5 = from_graph6("Dhc");
  CHECK(c5.n() == 5);
  CHECK(c5 == cycle_graph(5));
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");

  const Graph single = from_graph6("@");
  CHECK(single.n() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(to_graph6(Graph(0)) == "?");

  CHECK(to_graph6(petersen_graph()).size() == 9);
  CHECK(from_graph6(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 rejects malformed records") {
  CHECK_THROWS_AS(from_graph6(""), InputError);
  CHECK_THROWS_AS(from_graph6("Dh"), InputError);     // too short
  CHECK_THROWS_AS(from_graph6("Dhcc"), InputError);   // too long
  CHECK_THROWS_AS(from_graph6("Dhd"), InputError);    // padding bits set
  CHECK_THROWS_AS(from_graph6("D h"), InputError);    // byte below 63
  CHECK_THROWS_AS(from_graph6("~"), InputError);      // truncated long header
  CHECK_THROWS_AS(from_graph6("~?@A"), InputError);   // 66 vertices
}

TEST_CASE("graph6 round-trip on random graphs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(0, 64);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(size(rng), density(rng), rng);
    const std::string text = to_graph6(g);
    CHECK(from_graph6(text) == g);
    CHECK(to_graph6(from_graph6(text)) == text);
  }
}

TEST_CASE("graph6 stream reader") {
  std::istringstream in(">>graph6<<Dhc\r\n\nIheA@GUAo\nbad!\n");
  const auto records = read_graph6_stream(in);
  REQUIRE(records.size() == 3);
  CHECK(records[0].line == 1);
  CHECK(*records[0].graph == cycle_graph(5));
  CHECK(records[1].graph->n() == 10);
  CHECK(records[2].line == 4);
  CHECK_FALSE(records[2].graph.has_value());
  CHECK_FALSE(records[2].error.empty());
}

TEST_CASE("generators") {
  const Graph j52 = johnson_graph(5, 2);
  CHECK(j52.n() == 10);
  CHECK(j52.edge_count() == 30);
  for (int v = 0; v < 10; ++v) CHECK(j52.degree(v) == 6);

  const Graph j72 = johnson_graph(7, 2);
  CHECK(j72.n() == 21);
  CHECK(j72.edge_count() == 105);
  for (int v = 0; v < 21; ++v) CHECK(j72.degree(v) == 10);

  CHECK_THROWS_AS(johnson_graph(3, 3), InputError);
  CHECK_THROWS_AS(johnson_graph(3, 0), InputError);

  const std::vector<int> conn{1, -1};
  CHECK(circulant(5, conn) == cycle_graph(5));
  const std::vector<int> asym{1};
  CHECK_THROWS_AS(circulant(5, asym), InputError);

  const Graph g = sample_graphs()[10];
  CHECK(complement(complement(g)) == g);

  const std::vector<int> verts{0, 2, 4};
  const Graph sub = induced_subgraph(cycle_graph(6), verts);
  CHECK(sub.edge_count() == 0);
  const std::vector<int> dup{0, 0};
  CHECK_THROWS_AS(induced_subgraph(cycle_graph(6), dup), InputError);
}

TEST_CASE("independence number against brute force") {
  CHECK(independence_number(johnson_graph(5, 2)) == 2);
  CHECK(oracle::alpha(johnson_graph(5, 2)) == 2);
  CHECK(independence_number(seven_context_graph()) == 3);
  CHECK(oracle::alpha(seven_context_graph()) == 3);
  CHECK(independence_number(empty_graph(7)) == 7);
  for (const auto& g : sample_graphs()) {
    const int a = independence_number(g);
    CHECK(a == oracle::alpha(g));
    CHECK(a + oracle::min_vertex_cover(g) == g.n());
  }
}

TEST_CASE("clique number") {
  CHECK(clique_number(seven_context_graph()) == 6);
  CHECK(clique_number(johnson_graph(5, 2)) == 4);
  CHECK(clique_number(cycle_graph(5)) == 2);
  for (const auto& g : sample_graphs()) {
    CHECK(clique_number(g) == oracle::omega(g));
    CHECK(clique_number(g) == independence_number(complement(g)));
  }
}

TEST_CASE("maximum cliques are complete and exact") {
  const auto j52 = maximum_cliques(johnson_graph(5, 2));
  CHECK(j52.size == 4);
  CHECK(j52.cliques.size() == 5);

  const auto seven = maximum_cliques(seven_context_graph());
  CHECK(seven.size == 6);
  CHECK(seven.cliques.size() == 7);

  const auto k4 = maximum_cliques(complete_graph(4));
  REQUIRE(k4.cliques.size() == 1);
  CHECK(k4.cliques[0] == std::vector<int>{0, 1, 2, 3});

  for (const auto& g : sample_graphs()) {
    if (g.n() == 0) continue;
    const auto list = maximum_cliques(g);
    const auto expected = oracle::cliques_of_size(g, list.size);
    CHECK(list.cliques.size() == expected.size());
    CHECK(std::is_sorted(list.cliques.begin(), list.cliques.end()));
    CHECK(std::adjacent_find(list.cliques.begin(), list.cliques.end()) == list.cliques.end());
    for (const auto& c : list.cliques) {
      std::uint32_t mask = 0;
      for (int v : c) mask |= 1U << v;
      CHECK(oracle::is_clique(g, mask));
      CHECK(static_cast<int>(c.size()) == list.size);
    }
    CHECK(oracle::cliques_of_size(g, list.size + 1).empty());
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(johnson_graph(5, 2)) == 5);
  CHECK(chromatic_number(seven_context_graph()) == 7);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(petersen_graph()) == 3);
  for (const auto& g : sample_graphs()) {
    const int chi = chromatic_number(g);
    CHECK(chi == oracle::chi(g));
    CHECK(chi >= clique_number(g));
    const auto greedy = greedy_coloring(g);
    CHECK(is_proper_coloring(g, greedy));
    if (g.n() > 0) CHECK(chi <= *std::max_element(greedy.begin(), greedy.end()) + 1);
    CHECK(is_proper_coloring(g, optimal_coloring(g)));
  }
}

TEST_CASE("automorphism orbits") {
  const auto pent = automorphism_orbits(cycle_graph(5));
  CHECK(pent.size() == 1);
  CHECK(is_vertex_transitive(cycle_graph(5)));

  const auto p3 = automorphism_orbits(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == std::vector<int>{0, 2});
  CHECK(p3[1] == std::vector<int>{1});
  CHECK_FALSE(is_vertex_transitive(path_graph(3)));

  CHECK(is_vertex_transitive(seven_context_graph()));
  CHECK(is_vertex_transitive(johnson_graph(5, 2)));
  CHECK(is_vertex_transitive(petersen_graph()));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> size(1, 8);
    const Graph g = oracle::random_graph(size(rng), 0.5, rng);
    CHECK(automorphism_orbits(g) == oracle::orbits(g));
  }
}

TEST_CASE("vertex-transitive graphs are regular and satisfy alpha * omega <= n") {
  std::vector<Graph> vt{cycle_graph(5), cycle_graph(8), johnson_graph(5, 2), johnson_graph(6, 2),
                        petersen_graph(), complete_graph(5), seven_context_graph()};
  for (int n = 5; n <= 13; ++n) {
    const std::vector<int> conn{1, n - 1, 2, n - 2};
    vt.push_back(circulant(n, conn));
  }
  for (const auto& g : vt) {
    REQUIRE(is_vertex_transitive(g));
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == g.degree(0));
    CHECK(independence_number(g) * clique_number(g) <= g.n());
  }
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(8);
  const Graph c5 = cycle_graph(5);
  CHECK(is_isomorphic(c5, relabel(c5, oracle::random_permutation(5, rng))));
  CHECK_FALSE(is_isomorphic(c5, path_graph(5)));
  CHECK(is_isomorphic(seven_context_graph(), johnson_graph(7, 2)));

  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> size(1, 7);
    const Graph g = oracle::random_graph(size(rng), 0.5, rng);
    const Graph h = oracle::random_graph(g.n(), 0.5, rng);
    const Graph g2 = relabel(g, oracle::random_permutation(g.n(), rng));
    const auto map = find_isomorphism(g, g2);
    REQUIRE(map.has_value());
    CHECK(relabel(g, *map) == g2);
    CHECK(is_isomorphic(g, h) == oracle::isomorphic(g, h));
  }
}

TEST_CASE("found automorphisms are genuine") {
  const Graph g = johnson_graph(6, 2);
  for (int v = 0; v < g.n(); ++v) {
    const auto a = find_automorphism(g, 0, v);
    REQUIRE(a.has_value());
    CHECK((*a)[0] == v);
    CHECK(is_automorphism(g, *a));
  }
}
