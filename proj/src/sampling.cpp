#include "gpgame/sampling.hpp"

#include <string>
#include <vector>

#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"

namespace gpgame {

std::vector<int> random_pruefer(Rng& rng, int order) {
  if (order < 3) throw ParameterError("random_pruefer needs order >= 3");
  std::vector<int> seq(static_cast<std::size_t>(order - 2));
  for (int& s : seq) s = rng.range(0, order - 1);
  return seq;
}

Graph random_tree(Rng& rng, int order) {
  if (order < 1) throw ParameterError("random_tree needs order >= 1");
  if (order == 1) return Graph(1);
  if (order == 2) return tree_from_pruefer({});
  return tree_from_pruefer(random_pruefer(rng, order));
}

Graph random_graph(Rng& rng, int order, double edge_prob) {
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (rng.chance(edge_prob)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_connected_graph(Rng& rng, int order, double extra_edge_prob) {
  Graph g = random_tree(rng, order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (!g.adjacent(u, v) && rng.chance(extra_edge_prob)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_connected_bipartite(Rng& rng, int order, double extra_edge_prob) {
  Graph g = random_tree(rng, order);
  // Two-color the tree, then add chords only across the color classes.
  std::vector<int> color(static_cast<std::size_t>(order), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int v : g.neighbors(queue[head])) {
      if (color[static_cast<std::size_t>(v)] == -1) {
        color[static_cast<std::size_t>(v)] =
            1 - color[static_cast<std::size_t>(queue[head])];
        queue.push_back(v);
      }
    }
  }
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (color[static_cast<std::size_t>(u)] !=
              color[static_cast<std::size_t>(v)] &&
          !g.adjacent(u, v) && rng.chance(extra_edge_prob)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

FamilyExpr random_bipartite_union_expr(Rng& rng) {
  constexpr int kMaxOrder = 18;
  int blocks = rng.range(1, 3);
  int isolated = rng.range(0, 3);
  int budget = kMaxOrder - isolated;

  std::vector<FamilyExpr> parts;
  for (int b = 0; b < blocks && budget >= 2; ++b) {
    FamilyExpr part;
    switch (rng.range(0, 2)) {
      case 0: {  // path on 2..5 vertices
        int n = rng.range(2, std::min(5, budget));
        part.kind = FamilyExpr::Kind::kPath;
        part.args = {n};
        budget -= n;
        break;
      }
      case 1: {  // even cycle C4/C6/C8 when it fits, else a short path
        int n = 2 * rng.range(2, 4);
        if (n > budget) {
          part.kind = FamilyExpr::Kind::kPath;
          part.args = {std::min(5, budget)};
          budget -= part.args[0];
        } else {
          part.kind = FamilyExpr::Kind::kCycle;
          part.args = {n};
          budget -= n;
        }
        break;
      }
      default: {  // random tree on 3..6 vertices
        int n = rng.range(3, std::min(6, std::max(3, budget)));
        n = std::min(n, budget);
        if (n < 3) {
          part.kind = FamilyExpr::Kind::kPath;
          part.args = {n};
        } else {
          part.kind = FamilyExpr::Kind::kTree;
          part.args = random_pruefer(rng, n);
        }
        budget -= n;
        break;
      }
    }
    parts.push_back(std::move(part));
  }
  if (isolated > 0 || parts.empty()) {
    FamilyExpr iso;
    iso.kind = FamilyExpr::Kind::kEmpty;
    iso.args = {std::max(isolated, 1)};
    parts.push_back(std::move(iso));
  }
  FamilyExpr expr = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    FamilyExpr joined;
    joined.kind = FamilyExpr::Kind::kUnion;
    joined.children = {std::move(expr), std::move(parts[i])};
    expr = std::move(joined);
  }
  return expr;
}

}  // namespace gpgame
