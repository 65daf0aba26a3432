#include "gpgame/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"
#include "gpgame/gp_solver.hpp"
#include "gpgame/sampling.hpp"

namespace gpgame {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                            start)
          .count());
}

struct Context {
  SuiteOptions opts;

  BuildOptions build_opts() const { return BuildOptions{opts.vertex_cap}; }
  SolveOptions solve_opts() const {
    SolveOptions s;
    s.state_cap = opts.state_cap;
    return s;
  }
};

void add_check_case(SuiteReport& rep, std::string name, std::string rule,
                    std::string expected, std::string computed,
                    std::uint64_t states, std::uint64_t ms) {
  SuiteCase c;
  c.name = std::move(name);
  c.rule = std::move(rule);
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  c.states = states;
  c.ms = ms;
  rep.cases.push_back(std::move(c));
}

// Winner row for the graph named by expr. Returns the computed winner, or ""
// when the vertex cap excluded the case (the case is then omitted).
std::string add_game_case(SuiteReport& rep, const Context& cx,
                          const std::string& expr, Rule rule,
                          const std::string& expected) {
  Graph g = Graph(1);
  try {
    g = build(expr, cx.build_opts());
  } catch (const CapError&) {
    return "";
  }
  auto t0 = Clock::now();
  Outcome out = solve(g, rule, cx.solve_opts());
  std::string computed = to_string(out.winner);
  add_check_case(rep, expr, to_string(rule), expected, computed,
                 out.solved_states, elapsed_ms(t0));
  return computed;
}

void add_gp_case(SuiteReport& rep, const Context& cx, const std::string& expr,
                 int expected) {
  Graph g = Graph(1);
  try {
    g = build(expr, cx.build_opts());
  } catch (const CapError&) {
    return;
  }
  auto t0 = Clock::now();
  GpReport r = gp_number(g);
  add_check_case(rep, "gp " + expr, "-", std::to_string(expected),
                 std::to_string(r.gp_number), r.explored, elapsed_ms(t0));
}

SuiteReport run_complete(const Context& cx) {
  SuiteReport rep;
  rep.suite = "complete";
  rep.seed = cx.opts.seed;
  for (int n = 1; n <= 9; ++n) {
    add_game_case(rep, cx, "complete(" + std::to_string(n) + ")",
                  Rule::kAchievement, n % 2 == 1 ? "A" : "B");
  }
  return rep;
}

SuiteReport run_cycles(const Context& cx) {
  SuiteReport rep;
  rep.suite = "cycles";
  rep.seed = cx.opts.seed;
  for (int n = 2; n <= 10; ++n) {
    add_gp_case(rep, cx, "path(" + std::to_string(n) + ")", 2);
  }
  add_gp_case(rep, cx, "cycle(4)", 2);
  for (int n = 2; n <= 10; ++n) {
    add_game_case(rep, cx, "path(" + std::to_string(n) + ")",
                  Rule::kAchievement, "B");
  }
  for (int n = 3; n <= 12; ++n) {
    add_game_case(rep, cx, "cycle(" + std::to_string(n) + ")",
                  Rule::kAchievement, n % 2 == 0 ? "B" : "A");
  }
  return rep;
}

SuiteReport run_multipartite(const Context& cx) {
  SuiteReport rep;
  rep.suite = "multipartite";
  rep.seed = cx.opts.seed;
  std::vector<std::vector<int>> vectors;
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      vectors.push_back({a, b});
      for (int c = b; c <= 4; ++c) {
        vectors.push_back({a, b, c});
        for (int d = c; d <= 4; ++d) vectors.push_back({a, b, c, d});
      }
    }
  for (const auto& parts : vectors) {
    int order = 0;
    bool any_odd = false;
    std::ostringstream expr;
    expr << "multipartite(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      order += parts[i];
      any_odd = any_odd || parts[i] % 2 == 1;
      expr << (i ? "," : "") << parts[i];
    }
    expr << ")";
    if (order > 16) continue;
    bool a_wins = parts.size() % 2 == 1 && any_odd;
    add_game_case(rep, cx, expr.str(), Rule::kAchievement, a_wins ? "A" : "B");
  }
  return rep;
}

SuiteReport run_bipartite(const Context& cx) {
  SuiteReport rep;
  rep.suite = "bipartite";
  rep.seed = cx.opts.seed;
  Rng rng(cx.opts.seed);
  for (int i = 0; i < 200; ++i) {
    FamilyExpr expr = random_bipartite_union_expr(rng);
    std::string name = expr.to_string();
    Graph g = Graph(1);
    try {
      g = build(expr, cx.build_opts());
    } catch (const CapError&) {
      continue;
    }
    bool odd_isolated = isolated_vertices(g).size() % 2 == 1;
    auto t0 = Clock::now();
    Outcome out = solve(g, Rule::kAchievement, cx.solve_opts());
    add_check_case(rep, name, to_string(Rule::kAchievement),
                   odd_isolated ? "A" : "B", to_string(out.winner),
                   out.solved_states, elapsed_ms(t0));
  }
  return rep;
}

SuiteReport run_petersen(const Context& cx) {
  SuiteReport rep;
  rep.suite = "petersen";
  rep.seed = cx.opts.seed;
  add_game_case(rep, cx, "petersen", Rule::kAchievement, "B");
  add_gp_case(rep, cx, "petersen", 6);
  try {
    auto board =
        std::make_shared<const Board>(build("petersen", cx.build_opts()));
    for (auto [a, b] : board->graph().edge_list()) {
      auto t0 = Clock::now();
      GameState st(board, Rule::kAchievement,
                   VertexSet::of(board->graph().order(), {a, b}));
      bool ok = parity_criterion_check(st);
      std::ostringstream name;
      name << "petersen parity (" << a << "," << b << ")";
      add_check_case(rep, name.str(), to_string(Rule::kAchievement), "true",
                     ok ? "true" : "false", 0, elapsed_ms(t0));
    }
  } catch (const CapError&) {
  }
  return rep;
}

SuiteReport run_hamming(const Context& cx) {
  SuiteReport rep;
  rep.suite = "hamming";
  rep.seed = cx.opts.seed;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      std::ostringstream expr;
      expr << "cartesian(complete(" << n << "),complete(" << m << "))";
      bool a_wins = n % 2 == 1 && m % 2 == 1;
      add_game_case(rep, cx, expr.str(), Rule::kAchievement,
                    a_wins ? "A" : "B");
    }
  return rep;
}

SuiteReport run_k3cm(const Context& cx) {
  SuiteReport rep;
  rep.suite = "k3cm";
  rep.seed = cx.opts.seed;
  for (int m = 3; m <= 9; ++m) {
    std::ostringstream expr;
    expr << "cartesian(complete(3),cycle(" << m << "))";
    bool a_wins = m == 3 || m == 5;
    add_game_case(rep, cx, expr.str(), Rule::kAchievement, a_wins ? "A" : "B");
  }
  return rep;
}

SuiteReport run_lex(const Context& cx) {
  SuiteReport rep;
  rep.suite = "lex";
  rep.seed = cx.opts.seed;
  const std::pair<const char*, const char*> bases[] = {
      {"path(4)", "B"}, {"cycle(5)", "A"}, {"cycle(6)", "B"},
      {"complete(3)", "A"}};
  for (auto [gexpr, gexpected] : bases) {
    std::string gwinner = add_game_case(rep, cx, gexpr, Rule::kAchievement,
                                        gexpected);
    if (gwinner.empty()) continue;
    for (int n = 2; n <= 3; ++n) {
      // The factor's winner drives the expectation: B wins the product iff
      // B wins the factor or the clique order is even.
      bool b_wins = gwinner == "B" || n % 2 == 0;
      std::ostringstream expr;
      expr << "lex(" << gexpr << ",complete(" << n << "))";
      add_game_case(rep, cx, expr.str(), Rule::kAchievement,
                    b_wins ? "B" : "A");
    }
  }
  return rep;
}

// "ok", or a short description of the first pair violating the distance sum
// or the interval cross-product identity on the Cartesian product.
std::string check_cartesian_formulas(const Graph& g, const Graph& h,
                                     const BuildOptions& bopts) {
  DistMatrix dg = bfs_distances(g);
  DistMatrix dh = bfs_distances(h);
  ProductGraph p = cartesian_product(g, h, bopts);
  DistMatrix dp = bfs_distances(p.graph);
  int n = p.graph.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int g1 = p.project_g(x), h1 = p.project_h(x);
      int g2 = p.project_g(y), h2 = p.project_h(y);
      int leg_g = dg(g1, g2), leg_h = dh(h1, h2);
      int want = leg_g == DistMatrix::kUnreachable ||
                         leg_h == DistMatrix::kUnreachable
                     ? DistMatrix::kUnreachable
                     : leg_g + leg_h;
      if (dp(x, y) != want) {
        std::ostringstream msg;
        msg << "distance((" << g1 << "," << h1 << "),(" << g2 << "," << h2
            << ")) = " << dp(x, y) << ", factor sum " << want;
        return msg.str();
      }
      VertexSet ig = interval(dg, g1, g2);
      VertexSet ih = interval(dh, h1, h2);
      VertexSet ip = interval(dp, x, y);
      for (int v = 0; v < n; ++v) {
        bool in_product = ip.contains(v);
        bool in_cross =
            ig.contains(p.project_g(v)) && ih.contains(p.project_h(v));
        if (in_product != in_cross) {
          std::ostringstream msg;
          msg << "interval((" << g1 << "," << h1 << "),(" << g2 << "," << h2
              << ")) disagrees with the factor cross product at ("
              << p.project_g(v) << "," << p.project_h(v) << ")";
          return msg.str();
        }
      }
    }
  }
  return "ok";
}

// "ok", or the first pair violating the three-case lexicographic distance
// formula: d_G(g,g') when g != g'; min(d_H(h,h'), 2) when g = g' with
// deg(g) > 0; d_H(h,h') when g = g' is isolated in G.
std::string check_lex_distance(const Graph& g, const Graph& h,
                               const BuildOptions& bopts) {
  DistMatrix dg = bfs_distances(g);
  DistMatrix dh = bfs_distances(h);
  ProductGraph p = lexicographic_product(g, h, bopts);
  DistMatrix dp = bfs_distances(p.graph);
  int n = p.graph.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int g1 = p.project_g(x), h1 = p.project_h(x);
      int g2 = p.project_g(y), h2 = p.project_h(y);
      int want;
      if (g1 != g2) {
        want = dg(g1, g2);
      } else if (h1 == h2) {
        want = 0;
      } else if (g.degree(g1) > 0) {
        want = dh(h1, h2) == 1 ? 1 : 2;
      } else {
        want = dh(h1, h2);
      }
      if (dp(x, y) != want) {
        std::ostringstream msg;
        msg << "distance((" << g1 << "," << h1 << "),(" << g2 << "," << h2
            << ")) = " << dp(x, y) << ", formula gives " << want;
        return msg.str();
      }
    }
  }
  return "ok";
}

SuiteReport run_products(const Context& cx) {
  SuiteReport rep;
  rep.suite = "products";
  rep.seed = cx.opts.seed;

  const char* games_g[] = {"complete(3)", "cycle(5)", "petersen",
                           "complete(4)"};
  const char* games_h[] = {"path(2)", "path(3)", "cycle(4)", "cycle(6)"};
  for (const char* ge : games_g)
    for (const char* he : games_h) {
      std::ostringstream expr;
      expr << "cartesian(" << ge << "," << he << ")";
      add_game_case(rep, cx, expr.str(), Rule::kAchievement, "B");
    }
  for (const char* he : games_h) {
    try {
      Graph h = build(he, cx.build_opts());
      auto t0 = Clock::now();
      bool ok = even_clique_closure_condition(h);
      add_check_case(rep, std::string("even-clique-closure ") + he, "-",
                     "true", ok ? "true" : "false", 0, elapsed_ms(t0));
    } catch (const CapError&) {
    }
  }

  std::vector<std::string> pool;
  for (int n = 2; n <= 5; ++n) pool.push_back("path(" + std::to_string(n) + ")");
  for (int n = 3; n <= 6; ++n) pool.push_back("cycle(" + std::to_string(n) + ")");
  for (int n = 2; n <= 4; ++n)
    pool.push_back("complete(" + std::to_string(n) + ")");

  for (const auto& a : pool)
    for (const auto& b : pool) {
      try {
        Graph g = build(a, cx.build_opts());
        Graph h = build(b, cx.build_opts());
        auto t0 = Clock::now();
        std::string result = check_cartesian_formulas(g, h, cx.build_opts());
        add_check_case(rep, "distance+interval cartesian(" + a + "," + b + ")",
                       "-", "ok", result, 0, elapsed_ms(t0));
      } catch (const CapError&) {
      }
    }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      try {
        Graph g = build(a, cx.build_opts());
        Graph h = build(b, cx.build_opts());
        auto t0 = Clock::now();
        std::string result = check_lex_distance(g, h, cx.build_opts());
        add_check_case(rep, "distance lex(" + a + "," + b + ")", "-", "ok",
                       result, 0, elapsed_ms(t0));
      } catch (const CapError&) {
      }
    }
  try {
    Graph g = build("union(path(2),empty(1))", cx.build_opts());
    Graph h = build("path(3)", cx.build_opts());
    auto t0 = Clock::now();
    std::string result = check_lex_distance(g, h, cx.build_opts());
    add_check_case(rep, "distance lex(union(path(2),empty(1)),path(3))", "-",
                   "ok", result, 0, elapsed_ms(t0));
  } catch (const CapError&) {
  }
  return rep;
}

SuiteReport run_trees(const Context& cx) {
  SuiteReport rep;
  rep.suite = "trees";
  rep.seed = cx.opts.seed;
  Rng rng(cx.opts.seed);
  for (int i = 0; i < 20; ++i) {
    int order1 = rng.range(3, 7);
    int order2 = rng.range(3, 7);
    std::vector<int> seq1 = random_pruefer(rng, order1);
    std::vector<int> seq2 = random_pruefer(rng, order2);
    auto tree_expr = [](const std::vector<int>& seq) {
      std::ostringstream out;
      out << "tree(";
      for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i ? "," : "") << seq[i];
      out << ")";
      return out.str();
    };
    Graph t1 = tree_from_pruefer(seq1);
    Graph t2 = tree_from_pruefer(seq2);
    int expected = leaf_count(t1) + leaf_count(t2);
    std::string name =
        "cartesian(" + tree_expr(seq1) + "," + tree_expr(seq2) + ")";
    try {
      ProductGraph p = cartesian_product(t1, t2, cx.build_opts());
      auto t0 = Clock::now();
      GpReport r = gp_number(p.graph);
      add_check_case(rep, name, "-", std::to_string(expected),
                     std::to_string(r.gp_number), r.explored, elapsed_ms(t0));
    } catch (const CapError&) {
    }
  }
  return rep;
}

SuiteReport run_avoidance(const Context& cx) {
  SuiteReport rep;
  rep.suite = "avoidance";
  rep.seed = cx.opts.seed;
  add_game_case(rep, cx, "cycle(6)", Rule::kAchievement, "B");
  add_game_case(rep, cx, "cycle(6)", Rule::kAvoidance, "B");
  return rep;
}

using SuiteFn = SuiteReport (*)(const Context&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"complete", run_complete},   {"cycles", run_cycles},
      {"multipartite", run_multipartite}, {"bipartite", run_bipartite},
      {"petersen", run_petersen},   {"hamming", run_hamming},
      {"k3cm", run_k3cm},           {"lex", run_lex},
      {"products", run_products},   {"trees", run_trees},
      {"avoidance", run_avoidance},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  Context cx{opts};
  for (const auto& [suite, fn] : suite_table()) {
    if (suite == name) return fn(cx);
  }
  throw UnknownSuiteError(name);
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts) {
  Context cx{opts};
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(fn(cx));
  return out;
}

}  // namespace gpgame
