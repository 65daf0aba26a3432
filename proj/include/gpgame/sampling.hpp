#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/generators.hpp"
#include "gpgame/graph.hpp"

namespace gpgame {

// SplitMix64. Chosen over <random> engines because its stream is identical
// on every platform and standard library, which keeps seeded sweeps and
// their frozen expectations reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

// Uniform Prüfer sequence for a tree on `order` >= 3 vertices.
std::vector<int> random_pruefer(Rng& rng, int order);

// Uniform random labeled tree; order >= 1.
Graph random_tree(Rng& rng, int order);

// Erdős–Rényi G(n, p).
Graph random_graph(Rng& rng, int order, double edge_prob);

// Random spanning tree plus each remaining pair independently with
// probability extra_edge_prob.
Graph random_connected_graph(Rng& rng, int order, double extra_edge_prob);

// Random tree plus extra edges drawn only across its two-coloring, so the
// result stays bipartite and connected.
Graph random_connected_bipartite(Rng& rng, int order, double extra_edge_prob);

// One to three bipartite blocks (paths, even cycles, random trees) plus
// zero to three isolated vertices, assembled as a nested `union` family
// expression, total order <= 18. Every sample is reproducible by feeding
// the expression text back to the parser.
FamilyExpr random_bipartite_union_expr(Rng& rng);

}  // namespace gpgame
