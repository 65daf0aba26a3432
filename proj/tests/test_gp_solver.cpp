#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gpgame/distance.hpp"
#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"
#include "gpgame/generators.hpp"
#include "gpgame/gp_solver.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/sampling.hpp"
#include "oracles.hpp"

using namespace gpgame;

TEST_CASE("gp numbers of fixed graphs") {
  auto check = [](const char* expr, int want) {
    Graph g = build(expr);
    GpReport r = gp_number(g);
    CHECK(r.exact);
    CHECK(r.gp_number == want);
    CHECK(r.witness.size() == want);
    CHECK(is_general_position(bfs_distances(g), r.witness));
  };
  check("path(7)", 2);
  check("path(2)", 2);
  check("cycle(4)", 2);
  check("cycle(5)", 3);
  check("petersen", 6);
  check("complete(6)", 6);
  check("empty(3)", 3);
  check("path(1)", 1);
  check("hypercube(3)", 4);
}

TEST_CASE("gp number matches exhaustive subset search") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.range(1, 8);
    Graph g = trial % 3 == 0 ? random_tree(rng, n)
                             : random_graph(rng, n, trial % 2 ? 0.3 : 0.6);
    GpReport r = gp_number(g);
    REQUIRE(r.exact);
    REQUIRE(r.gp_number == oracle::brute_gp_number(g));
    REQUIRE(is_general_position(bfs_distances(g), r.witness));
    REQUIRE(r.witness.size() == r.gp_number);
  }
  for (const char* name :
       {"cycle(8)", "multipartite(2,2,2)", "union(path(3), cycle(4))"}) {
    Graph g = build(name);
    CHECK(gp_number(g).gp_number == oracle::brute_gp_number(g));
  }
}

TEST_CASE("maximal set enumeration on fixed graphs") {
  auto lists = [](const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const VertexSet& s : sets) out.push_back(s.to_vector());
    return out;
  };

  // On a three-vertex path every pair is maximal and no triple qualifies.
  CHECK(lists(enumerate_maximal_gp_sets(build("path(3)"), 3)) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  // A complete graph has exactly one maximal set: everything.
  CHECK(lists(enumerate_maximal_gp_sets(build("complete(3)"), 3)) ==
        std::vector<std::vector<int>>{{0, 1, 2}});

  // Six-cycle, two-member sets only: every vertex appears in some set.
  auto sets = enumerate_maximal_gp_sets(build("cycle(6)"), 2);
  VertexSet covered(6);
  for (const VertexSet& s : sets) {
    CHECK(s.size() == 2);
    covered |= s;
  }
  CHECK(covered == VertexSet::full(6));

  CHECK_THROWS_AS(enumerate_maximal_gp_sets(build("path(3)"), 0),
                  ParameterError);
}

TEST_CASE("maximal set enumeration matches the subset-scan oracle") {
  Rng rng(32);
  std::vector<Graph> graphs;
  for (int trial = 0; trial < 20; ++trial) {
    graphs.push_back(random_graph(rng, rng.range(1, 7), 0.4));
  }
  graphs.push_back(build("cycle(6)"));
  graphs.push_back(build("union(path(2), empty(1))"));
  for (const Graph& g : graphs) {
    for (int cap : {2, g.order()}) {
      auto got = enumerate_maximal_gp_sets(g, cap);
      std::vector<std::vector<int>> got_lists;
      for (const VertexSet& s : got) got_lists.push_back(s.to_vector());
      REQUIRE(got_lists == oracle::maximal_gp_sets(g, cap));
      // Output is sorted by ascending member lists.
      for (std::size_t i = 1; i < got.size(); ++i) {
        REQUIRE(got[i - 1].lex_less(got[i]));
      }
      // Every reported set is in general position with nothing playable.
      auto dist = bfs_distances(g);
      for (const VertexSet& s : got) {
        REQUIRE(is_general_position(dist, s));
        REQUIRE(playable_set(dist, s).empty());
      }
    }
  }
}

TEST_CASE("maximal pair queries") {
  auto d5 = bfs_distances(build("path(5)"));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) {
      if (u == v) continue;
      CHECK(is_maximal_gp_pair(d5, u, v));
    }

  auto k4 = bfs_distances(build("complete(4)"));
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      CHECK(!is_maximal_gp_pair(k4, u, v));
    }

  // Six-cycle: adjacent and antipodal pairs are maximal, the rest extend.
  auto c6 = bfs_distances(build("cycle(6)"));
  CHECK(is_maximal_gp_pair(c6, 0, 1));
  CHECK(is_maximal_gp_pair(c6, 0, 3));
  CHECK(!is_maximal_gp_pair(c6, 0, 2));
  CHECK(playable_set(c6, VertexSet::of(6, {0, 2})) == VertexSet::of(6, {4}));

  CHECK_THROWS_AS(is_maximal_gp_pair(c6, 2, 2), PreconditionError);
  CHECK_THROWS_AS(is_maximal_gp_pair(c6, 0, 6), ParameterError);
}

TEST_CASE("exhausted budgets downgrade to lower bounds") {
  Graph g = build("petersen");
  GpReport r = gp_number(g, GpOptions{1});
  CHECK(!r.exact);
  CHECK(r.gp_number >= 1);
  CHECK(r.gp_number < 6);
  CHECK(r.witness.size() == r.gp_number);
  CHECK(is_general_position(bfs_distances(g), r.witness));
  CHECK(r.explored >= 1);

  // The same budget that cannot finish the search aborts enumeration.
  CHECK_THROWS_AS(enumerate_maximal_gp_sets(g, 10, GpOptions{5}), BudgetError);
  // A generous budget leaves results exact.
  CHECK(gp_number(g, GpOptions{100000}).exact);
}
