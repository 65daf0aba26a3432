#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpgame/graph.hpp"

namespace gpgame {

inline constexpr int kDefaultVertexCap = 4096;

struct BuildOptions {
  // Hard ceiling on the order of any constructed graph (leaves, unions and
  // products alike). Exceeding it throws CapError before materialization.
  int vertex_cap = kDefaultVertexCap;
};

// Expression tree over the supported graph families.
//
// Grammar:  expr := NAME | NAME '(' int {',' int} ')'
//                 | ('cartesian' | 'lex' | 'union') '(' expr ',' expr ')'
// Names are case-insensitive and whitespace is ignored between tokens.
// Leaf families: path(n) cycle(n) complete(n) empty(n) multipartite(n1,..,nk)
// petersen hypercube(d) tree(p1,..,pk) — tree args are a Prüfer sequence on
// k+2 vertices.
struct FamilyExpr {
  enum class Kind {
    kPath,
    kCycle,
    kComplete,
    kEmpty,
    kMultipartite,
    kPetersen,
    kHypercube,
    kTree,
    kUnion,
    kCartesian,
    kLex,
  };

  Kind kind = Kind::kPath;
  std::vector<int> args;             // leaf parameters (Prüfer entries for kTree)
  std::vector<FamilyExpr> children;  // exactly two for kUnion/kCartesian/kLex

  // Canonical lower-case text; parse_family(to_string()) round-trips.
  std::string to_string() const;
};

// Grammar check only; range checks happen in validate_family/build.
FamilyExpr parse_family(std::string_view text);

// Arity and range checks for every node; throws ParameterError.
void validate_family(const FamilyExpr& expr);

// Number of vertices build() would produce (validates first).
long long family_order(const FamilyExpr& expr);

// Validates, checks the vertex cap, then constructs with the canonical
// numbering of each family.
Graph build(const FamilyExpr& expr, const BuildOptions& opts = {});
Graph build(std::string_view text, const BuildOptions& opts = {});

// A product graph with row-major vertex labels: (g, h) -> g * |V(H)| + h.
struct ProductGraph {
  Graph graph;
  int g_order;
  int h_order;

  int index(int g, int h) const { return g * h_order + h; }
  int project_g(int v) const { return v / h_order; }
  int project_h(int v) const { return v % h_order; }
};

// (g,h) ~ (g',h') iff g = g' and hh' is an edge, or h = h' and gg' is an edge.
ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               const BuildOptions& opts = {});

// (g,h) ~ (g',h') iff gg' is an edge, or g = g' and hh' is an edge.
ProductGraph lexicographic_product(const Graph& g, const Graph& h,
                                   const BuildOptions& opts = {});

// Disjoint union; vertices of a keep their labels, b's are shifted up.
Graph disjoint_union(const Graph& a, const Graph& b);

// Decodes a Prüfer sequence into the tree on seq.size() + 2 vertices.
// Entries must lie in [0, seq.size() + 2). An empty sequence yields P_2.
Graph tree_from_pruefer(const std::vector<int>& seq);

// Number of degree-1 vertices; throws NotATreeError when g is not a tree.
int leaf_count(const Graph& g);

}  // namespace gpgame
