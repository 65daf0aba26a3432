#include "gpgame/generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"

namespace gpgame {

namespace {

using Kind = FamilyExpr::Kind;

constexpr long long kOrderSat = 1'000'000'000'000'000'000ll;

long long sat_add(long long a, long long b) {
  return std::min(kOrderSat, a + b);
}

long long sat_mul(long long a, long long b) {
  if (a > kOrderSat / b) return kOrderSat;
  return a * b;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::kPath: return "path";
    case Kind::kCycle: return "cycle";
    case Kind::kComplete: return "complete";
    case Kind::kEmpty: return "empty";
    case Kind::kMultipartite: return "multipartite";
    case Kind::kPetersen: return "petersen";
    case Kind::kHypercube: return "hypercube";
    case Kind::kTree: return "tree";
    case Kind::kUnion: return "union";
    case Kind::kCartesian: return "cartesian";
    case Kind::kLex: return "lex";
  }
  return "?";
}

bool is_binary(Kind k) {
  return k == Kind::kUnion || k == Kind::kCartesian || k == Kind::kLex;
}

bool kind_from_name(const std::string& name, Kind* out) {
  static const std::pair<const char*, Kind> table[] = {
      {"path", Kind::kPath},
      {"cycle", Kind::kCycle},
      {"complete", Kind::kComplete},
      {"empty", Kind::kEmpty},
      {"multipartite", Kind::kMultipartite},
      {"petersen", Kind::kPetersen},
      {"hypercube", Kind::kHypercube},
      {"tree", Kind::kTree},
      {"union", Kind::kUnion},
      {"cartesian", Kind::kCartesian},
      {"lex", Kind::kLex},
  };
  for (const auto& [text, kind] : table) {
    if (name == text) {
      *out = kind;
      return true;
    }
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilyExpr parse() {
    FamilyExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(pos_, what);
  }

  FamilyExpr expr() {
    skip_ws();
    std::size_t name_at = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      name.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(text_[pos_]))));
      ++pos_;
    }
    if (name.empty()) throw ParseError(name_at, "a family name");
    FamilyExpr e;
    if (!kind_from_name(name, &e.kind)) {
      throw ParseError(name_at,
                       "a family name (path, cycle, complete, empty, "
                       "multipartite, petersen, hypercube, tree, union, "
                       "cartesian, lex)");
    }
    if (is_binary(e.kind)) {
      expect('(', "'('");
      e.children.push_back(expr());
      expect(',', "','");
      e.children.push_back(expr());
      expect(')', "')'");
    } else if (consume('(')) {
      e.args.push_back(integer());
      while (consume(',')) e.args.push_back(integer());
      expect(')', "')' or ','");
    }
    return e;
  }

  int integer() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, "an integer");
    }
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError(pos_, "a smaller integer");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_args(const FamilyExpr& e, std::size_t lo, std::size_t hi,
                  const char* what) {
  if (e.args.size() < lo || e.args.size() > hi) {
    throw ParameterError(std::string(kind_name(e.kind)) + " expects " + what);
  }
  if (!e.children.empty()) {
    throw ParameterError(std::string(kind_name(e.kind)) +
                         " takes no sub-expressions");
  }
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_multipartite(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  Graph g(n);
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    offset[p + 1] = offset[p] + parts[p];
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      for (int u = offset[p]; u < offset[p + 1]; ++u) {
        for (int v = offset[q]; v < offset[q + 1]; ++v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph make_hypercube(int d) {
  int n = 1 << d;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int b = 0; b < d; ++b) {
      int v = u ^ (1 << b);
      if (v > u) g.add_edge(u, v);
    }
  }
  return g;
}

Graph build_impl(const FamilyExpr& e, const BuildOptions& opts) {
  switch (e.kind) {
    case Kind::kPath:
      return make_path(e.args[0]);
    case Kind::kCycle:
      return make_cycle(e.args[0]);
    case Kind::kComplete:
      return make_complete(e.args[0]);
    case Kind::kEmpty:
      return Graph(e.args[0]);
    case Kind::kMultipartite:
      return make_multipartite(e.args);
    case Kind::kPetersen:
      return make_petersen();
    case Kind::kHypercube:
      return make_hypercube(e.args[0]);
    case Kind::kTree:
      return tree_from_pruefer(e.args);
    case Kind::kUnion:
      return disjoint_union(build_impl(e.children[0], opts),
                            build_impl(e.children[1], opts));
    case Kind::kCartesian:
      return cartesian_product(build_impl(e.children[0], opts),
                               build_impl(e.children[1], opts), opts)
          .graph;
    case Kind::kLex:
      return lexicographic_product(build_impl(e.children[0], opts),
                                   build_impl(e.children[1], opts), opts)
          .graph;
  }
  throw ParameterError("unhandled family kind");
}

}  // namespace

std::string FamilyExpr::to_string() const {
  std::string out = kind_name(kind);
  if (is_binary(kind)) {
    out += "(" + children[0].to_string() + "," + children[1].to_string() + ")";
  } else if (!args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(args[i]);
    }
    out += ")";
  }
  return out;
}

FamilyExpr parse_family(std::string_view text) { return Parser(text).parse(); }

void validate_family(const FamilyExpr& e) {
  switch (e.kind) {
    case Kind::kPath:
    case Kind::kComplete:
    case Kind::kEmpty:
      require_args(e, 1, 1, "exactly one parameter");
      if (e.args[0] < 1) {
        throw ParameterError(std::string(kind_name(e.kind)) +
                             " needs at least 1 vertex");
      }
      break;
    case Kind::kCycle:
      require_args(e, 1, 1, "exactly one parameter");
      if (e.args[0] < 3) throw ParameterError("cycle length must be >= 3");
      break;
    case Kind::kHypercube:
      require_args(e, 1, 1, "exactly one parameter");
      if (e.args[0] < 1 || e.args[0] > 62) {
        throw ParameterError("hypercube dimension must be in [1, 62]");
      }
      break;
    case Kind::kMultipartite:
      require_args(e, 2, e.args.max_size(), "at least two part sizes");
      for (int part : e.args) {
        if (part < 1) throw ParameterError("part sizes must be >= 1");
      }
      break;
    case Kind::kPetersen:
      require_args(e, 0, 0, "no parameters");
      break;
    case Kind::kTree:
      require_args(e, 1, e.args.max_size(), "at least one code entry");
      for (int entry : e.args) {
        if (entry < 0 || entry >= static_cast<int>(e.args.size()) + 2) {
          throw ParameterError(
              "tree code entries must name vertices of the decoded tree "
              "(0 <= entry < k + 2 for k entries)");
        }
      }
      break;
    case Kind::kUnion:
    case Kind::kCartesian:
    case Kind::kLex:
      if (e.children.size() != 2) {
        throw ParameterError(std::string(kind_name(e.kind)) +
                             " expects exactly two sub-expressions");
      }
      if (!e.args.empty()) {
        throw ParameterError(std::string(kind_name(e.kind)) +
                             " takes no numeric parameters");
      }
      validate_family(e.children[0]);
      validate_family(e.children[1]);
      break;
  }
}

long long family_order(const FamilyExpr& e) {
  validate_family(e);
  switch (e.kind) {
    case Kind::kPath:
    case Kind::kCycle:
    case Kind::kComplete:
    case Kind::kEmpty:
      return e.args[0];
    case Kind::kMultipartite:
      return std::accumulate(e.args.begin(), e.args.end(), 0ll);
    case Kind::kPetersen:
      return 10;
    case Kind::kHypercube:
      return e.args[0] >= 60 ? kOrderSat : (1ll << e.args[0]);
    case Kind::kTree:
      return static_cast<long long>(e.args.size()) + 2;
    case Kind::kUnion:
      return sat_add(family_order(e.children[0]), family_order(e.children[1]));
    case Kind::kCartesian:
    case Kind::kLex:
      return sat_mul(family_order(e.children[0]), family_order(e.children[1]));
  }
  throw ParameterError("unhandled family kind");
}

Graph build(const FamilyExpr& expr, const BuildOptions& opts) {
  validate_family(expr);
  long long order = family_order(expr);
  if (order > opts.vertex_cap) {
    throw CapError("graph order " + std::to_string(order) +
                   " exceeds the vertex cap " +
                   std::to_string(opts.vertex_cap));
  }
  return build_impl(expr, opts);
}

Graph build(std::string_view text, const BuildOptions& opts) {
  return build(parse_family(text), opts);
}

ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               const BuildOptions& opts) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > opts.vertex_cap) {
    throw CapError("product order " + std::to_string(order) +
                   " exceeds the vertex cap " +
                   std::to_string(opts.vertex_cap));
  }
  Graph p(static_cast<int>(order));
  int hn = h.order();
  auto h_edges = h.edge_list();
  for (int a = 0; a < g.order(); ++a) {
    for (const auto& [u, v] : h_edges) {
      p.add_edge(a * hn + u, a * hn + v);
    }
  }
  for (const auto& [a, b] : g.edge_list()) {
    for (int u = 0; u < hn; ++u) p.add_edge(a * hn + u, b * hn + u);
  }
  return {std::move(p), g.order(), hn};
}

ProductGraph lexicographic_product(const Graph& g, const Graph& h,
                                   const BuildOptions& opts) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > opts.vertex_cap) {
    throw CapError("product order " + std::to_string(order) +
                   " exceeds the vertex cap " +
                   std::to_string(opts.vertex_cap));
  }
  Graph p(static_cast<int>(order));
  int hn = h.order();
  auto h_edges = h.edge_list();
  for (int a = 0; a < g.order(); ++a) {
    for (const auto& [u, v] : h_edges) {
      p.add_edge(a * hn + u, a * hn + v);
    }
  }
  for (const auto& [a, b] : g.edge_list()) {
    for (int u = 0; u < hn; ++u) {
      for (int v = 0; v < hn; ++v) p.add_edge(a * hn + u, b * hn + v);
    }
  }
  return {std::move(p), g.order(), hn};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& [u, v] : a.edge_list()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edge_list()) {
    g.add_edge(a.order() + u, a.order() + v);
  }
  return g;
}

Graph tree_from_pruefer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : seq) {
    if (s < 0 || s >= n) {
      throw ParameterError("tree code entry out of range");
    }
    ++degree[static_cast<std::size_t>(s)];
  }
  Graph g(n);
  int ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    g.add_edge(leaf, s);
    if (--degree[static_cast<std::size_t>(s)] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  g.add_edge(leaf, n - 1);
  return g;
}

int leaf_count(const Graph& g) {
  if (g.edge_count() != g.order() - 1 || components(g).size() != 1) {
    throw NotATreeError("graph is not a tree (need connected with n-1 edges)");
  }
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ++count;
  }
  return count;
}

}  // namespace gpgame
