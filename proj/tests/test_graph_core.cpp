#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gpgame/distance.hpp"
#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"
#include "gpgame/generators.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/sampling.hpp"
#include "gpgame/vertex_set.hpp"
#include "oracles.hpp"

using namespace gpgame;

namespace {

// Mixed bag of seeded graphs for property sweeps: sparse, dense, trees,
// and deliberately disconnected ones.
std::vector<Graph> sample_graphs(std::uint64_t seed, int count, int max_order) {
  Rng rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = rng.range(1, max_order);
    switch (rng.below(4)) {
      case 0:
        out.push_back(random_graph(rng, n, 0.25));
        break;
      case 1:
        out.push_back(random_graph(rng, n, 0.6));
        break;
      case 2:
        out.push_back(random_tree(rng, n));
        break;
      default:
        out.push_back(random_connected_graph(rng, n, 0.3));
        break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction rules") {
  CHECK_THROWS_AS(Graph(0), ParameterError);
  CHECK_THROWS_AS(Graph(-3), ParameterError);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ParameterError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate, either orientation: no-op
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(2) == 0);
  CHECK(g.neighbors(1) == std::vector<int>{0});
}

TEST_CASE("distances on fixed graphs") {
  auto p4 = bfs_distances(build("path(4)"));
  CHECK(p4(0, 3) == 3);
  CHECK(p4(3, 0) == 3);
  CHECK(p4(1, 1) == 0);
  CHECK(p4.at(0, 3) == 3);
  CHECK_THROWS_AS(p4.at(0, 4), ParameterError);
  CHECK_THROWS_AS(p4.at(-1, 0), ParameterError);

  auto e2 = bfs_distances(build("empty(2)"));
  CHECK(e2(0, 1) == DistMatrix::kUnreachable);
  CHECK(!e2.reachable(0, 1));
  CHECK(e2.reachable(0, 0));

  auto pet = bfs_distances(build("petersen"));
  int maxd = 0;
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v) maxd = std::max(maxd, pet(u, v));
  CHECK(maxd == 2);
}

TEST_CASE("distances agree with an independent BFS on seeded graphs") {
  for (const Graph& g : sample_graphs(11, 40, 9)) {
    auto dist = bfs_distances(g);
    auto ref = oracle::dist_table(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        REQUIRE(dist(u, v) == ref[u][v]);
      }
  }
}

TEST_CASE("intervals on fixed graphs") {
  Graph p4 = build("path(4)");
  auto d4 = bfs_distances(p4);
  CHECK(interval(d4, 0, 3) == VertexSet::of(4, {0, 1, 2, 3}));
  CHECK(interval(d4, 1, 1) == VertexSet::of(4, {1}));

  auto c4 = bfs_distances(build("cycle(4)"));
  CHECK(interval(c4, 0, 2) == VertexSet::of(4, {0, 1, 2, 3}));

  auto e2 = bfs_distances(build("empty(2)"));
  CHECK(interval(e2, 0, 1).empty());

  Graph pet = build("petersen");
  auto dp = bfs_distances(pet);
  for (auto [u, v] : pet.edge_list()) {
    CHECK(interval(dp, u, v).size() == 2);
  }
}

TEST_CASE("intervals match explicit shortest-path enumeration") {
  for (const Graph& g : sample_graphs(12, 30, 8)) {
    auto dist = bfs_distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        REQUIRE(interval(dist, u, v).to_vector() ==
                oracle::interval_by_paths(g, u, v));
      }
  }
}

TEST_CASE("general position on fixed sets") {
  auto p4 = bfs_distances(build("path(4)"));
  CHECK(!is_general_position(p4, VertexSet::of(4, {0, 1, 3})));
  CHECK(is_general_position(p4, VertexSet::of(4, {0, 3})));
  auto c7 = bfs_distances(build("cycle(7)"));
  CHECK(is_general_position(c7, VertexSet::of(7, {0, 2, 4})));
  // Sets of size <= 2 are in general position by convention.
  auto c6 = bfs_distances(build("cycle(6)"));
  CHECK(is_general_position(c6, VertexSet(6)));
  CHECK(is_general_position(c6, VertexSet::of(6, {0})));
  CHECK(is_general_position(c6, VertexSet::of(6, {0, 3})));
  // Unreachable pairs never create a violating triple.
  auto u = bfs_distances(build("union(path(2), path(3))"));
  CHECK(is_general_position(u, VertexSet::of(5, {0, 1, 2})));
}

TEST_CASE("playable sets on fixed positions") {
  Graph p4 = build("path(4)");
  auto d4 = bfs_distances(p4);
  // A single played vertex leaves everything else playable.
  CHECK(playable_set(d4, VertexSet::of(4, {1})) == VertexSet::of(4, {0, 2, 3}));
  // Any two path vertices exhaust the path.
  CHECK(playable_set(d4, VertexSet::of(4, {0, 1})).empty());
  CHECK(playable_set(d4, VertexSet::of(4, {0, 3})).empty());
  // The empty position allows every vertex.
  CHECK(playable_set(d4, VertexSet(4)) == VertexSet::full(4));

  Graph pet = build("petersen");
  auto dp = bfs_distances(pet);
  for (auto [u, v] : pet.edge_list()) {
    CHECK(playable_set(dp, VertexSet::of(10, {u, v})).size() == 4);
  }
  CHECK(playable_set(dp, VertexSet::of(10, {0, 1})) ==
        VertexSet::of(10, {3, 7, 8, 9}));

  CHECK_THROWS_AS(playable_set(d4, VertexSet::of(4, {0, 1, 3})),
                  PreconditionError);
}

TEST_CASE("playable characterization matches the definition-level oracle") {
  // The two playability conditions must select exactly the vertices whose
  // addition keeps the set in general position — on every graph and every
  // general position set. Exhaustive over subsets for small orders.
  std::vector<Graph> graphs = sample_graphs(13, 30, 7);
  for (const char* name :
       {"petersen", "cycle(6)", "complete(4)", "multipartite(2,2,2)",
        "union(path(2), empty(1))", "hypercube(3)"}) {
    graphs.push_back(build(name));
  }
  for (const Graph& g : graphs) {
    auto dist = bfs_distances(g);
    auto ref = oracle::dist_table(g);
    oracle::for_each_subset(g.order(), [&](const std::vector<int>& s) {
      if (!oracle::is_gp(ref, s)) return;
      VertexSet vs = VertexSet::of(g.order(), s);
      REQUIRE(playable_set(dist, vs).to_vector() ==
              oracle::playable(g, ref, s));
    });
  }
}

TEST_CASE("playable sets shrink as the position grows") {
  for (const Graph& g : sample_graphs(14, 20, 7)) {
    auto dist = bfs_distances(g);
    auto ref = oracle::dist_table(g);
    oracle::for_each_subset(g.order(), [&](const std::vector<int>& s) {
      if (!oracle::is_gp(ref, s)) return;
      VertexSet vs = VertexSet::of(g.order(), s);
      VertexSet pl = playable_set(dist, vs);
      for (int x = pl.first(); x != -1; x = pl.next_after(x)) {
        VertexSet bigger = vs;
        bigger.add(x);
        VertexSet pl2 = playable_set(dist, bigger);
        pl2.add(x);
        REQUIRE(pl2.is_subset_of(pl));
      }
    });
  }
}

TEST_CASE("isolated vertices") {
  CHECK(isolated_vertices(build("empty(3)")) == VertexSet::of(3, {0, 1, 2}));
  CHECK(isolated_vertices(build("path(4)")).empty());
  CHECK(isolated_vertices(build("union(path(2), empty(1))")) ==
        VertexSet::of(3, {2}));
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(build("cycle(6)")));
  CHECK(!is_bipartite(build("cycle(5)")));
  CHECK(!is_bipartite(build("petersen")));
  CHECK(is_bipartite(build("empty(4)")));
  CHECK(is_bipartite(build("union(path(3), cycle(4))")));
  CHECK(!is_bipartite(build("union(path(3), cycle(3))")));
  CHECK(is_bipartite(build("hypercube(4)")));
}

TEST_CASE("connected components ordered by smallest member") {
  auto comps = components(build("union(path(2), path(3))"));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of(5, {0, 1}));
  CHECK(comps[1] == VertexSet::of(5, {2, 3, 4}));
  CHECK(components(build("cycle(5)")).size() == 1);
  CHECK(components(build("empty(3)")).size() == 3);
}

TEST_CASE("large general position sets in bipartite graphs are independent") {
  // Three or more pairwise-adjacent-or-not members in a bipartite graph:
  // any edge inside a general position set of size >= 3 would place its
  // endpoints and a third member on a common shortest path extension.
  std::vector<Graph> graphs;
  Rng rng(15);
  for (int i = 0; i < 25; ++i) {
    graphs.push_back(random_connected_bipartite(rng, rng.range(3, 8), 0.3));
  }
  graphs.push_back(build("hypercube(3)"));
  graphs.push_back(build("cycle(8)"));
  for (const Graph& g : graphs) {
    REQUIRE(is_bipartite(g));
    auto dist = bfs_distances(g);
    oracle::for_each_subset(g.order(), [&](const std::vector<int>& s) {
      if (s.size() < 3) return;
      VertexSet vs = VertexSet::of(g.order(), s);
      if (!is_general_position(dist, vs)) return;
      REQUIRE(is_independent(g, vs));
    });
  }
}

TEST_CASE("is_independent basics") {
  Graph k3 = build("complete(3)");
  CHECK(is_independent(k3, VertexSet(3)));
  CHECK(is_independent(k3, VertexSet::of(3, {1})));
  CHECK(!is_independent(k3, VertexSet::of(3, {0, 1})));
  Graph c4 = build("cycle(4)");
  CHECK(is_independent(c4, VertexSet::of(4, {0, 2})));
}

TEST_CASE("edge list text round trips") {
  for (const char* name :
       {"path(4)", "petersen", "union(path(2), empty(1))", "empty(1)"}) {
    Graph g = build(name);
    Graph back = Graph::from_edge_list_text(g.to_edge_list_text());
    CHECK(back.order() == g.order());
    CHECK(back.edge_list() == g.edge_list());
    CHECK(edge_list_hash(back) == edge_list_hash(g));
  }
  Graph p2 = Graph::from_edge_list_text("2 1\n0 1\n");
  CHECK(p2.order() == 2);
  CHECK(p2.adjacent(0, 1));
  // Edges may arrive in any order; the canonical text sorts them.
  Graph g = Graph::from_edge_list_text("3 2\n1 2\n0 1\n");
  CHECK(g.to_edge_list_text() == "3 2\n0 1\n1 2\n");
}

TEST_CASE("edge list text rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edge_list_text(""), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("0 0\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 1\n0 1\nxx"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list_text("2 1\n0 1\n9 9\n"), ParseError);
  try {
    Graph::from_edge_list_text("2 1\n1 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(e.expected() == "endpoints with u < v");
  }
}

TEST_CASE("edge list hash is stable and label-sensitive") {
  CHECK(edge_list_hash(build("path(3)")) == edge_list_hash(build("path(3)")));
  CHECK(edge_list_hash(build("path(3)")) != edge_list_hash(build("cycle(3)")));
  CHECK(edge_list_hash(build("path(3)")).size() == 16);
}
