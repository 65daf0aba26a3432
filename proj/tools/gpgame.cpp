#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpgame/errors.hpp"
#include "gpgame/game_engine.hpp"
#include "gpgame/general_position.hpp"
#include "gpgame/generators.hpp"
#include "gpgame/gp_solver.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/report.hpp"
#include "gpgame/suites.hpp"

namespace fs = std::filesystem;
using namespace gpgame;

namespace {

struct GlobalConfig {
  std::string format = "text";
  std::uint64_t seed = 1;
  int vertex_cap = kDefaultVertexCap;
  std::uint64_t state_cap = kDefaultStateCap;
  std::string cache_dir;
  bool restrict_first_move = false;

  Format parsed_format() const {
    auto f = format_from_string(format);
    if (!f) throw ParameterError("unknown format: " + format);
    return *f;
  }
  BuildOptions build_opts() const { return BuildOptions{vertex_cap}; }
  SolveOptions solve_opts() const {
    SolveOptions s;
    s.state_cap = state_cap;
    s.restrict_first_move = restrict_first_move;
    return s;
  }
};

Rule parse_rule(const std::string& name) {
  auto r = rule_from_string(name);
  if (!r) throw ParameterError("unknown rule: " + name + " (expected achievement or avoidance)");
  return *r;
}

void import_cache_if_configured(Solver& solver, const GlobalConfig& cfg) {
  if (cfg.cache_dir.empty()) return;
  fs::path file =
      fs::path(cfg.cache_dir) / cache_file_name(solver.board().graph(), solver.rule());
  std::ifstream in(file);
  if (!in) return;
  try {
    solver.import_cache(in);
  } catch (const CacheError& e) {
    std::cerr << "cache ignored (" << file.string() << "): " << e.what() << "\n";
  }
}

void export_cache_if_configured(const Solver& solver, const GlobalConfig& cfg) {
  if (cfg.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(cfg.cache_dir, ec);
  fs::path file =
      fs::path(cfg.cache_dir) / cache_file_name(solver.board().graph(), solver.rule());
  std::ofstream out(file, std::ios::trunc);
  if (!out) {
    std::cerr << "cache not written: cannot open " << file.string() << "\n";
    return;
  }
  solver.export_cache(out);
}

int run_solve(const GlobalConfig& cfg, const std::string& expr, Rule rule) {
  auto board = std::make_shared<const Board>(build(expr, cfg.build_opts()));
  Solver solver(board, rule, cfg.solve_opts());
  import_cache_if_configured(solver, cfg);
  Outcome out = solver.solve();
  export_cache_if_configured(solver, cfg);

  switch (cfg.parsed_format()) {
    case Format::kText:
      std::cout << "winner " << to_string(out.winner) << "\n";
      if (out.best_first_move)
        std::cout << "best first move " << *out.best_first_move << "\n";
      std::cout << "states " << out.solved_states << "\n";
      break;
    case Format::kJson: {
      nlohmann::json j = {{"winner", to_string(out.winner)},
                          {"states", out.solved_states}};
      if (out.best_first_move)
        j["best_first_move"] = *out.best_first_move;
      else
        j["best_first_move"] = nullptr;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      std::cout << "winner,best_first_move,states\n"
                << to_string(out.winner) << ","
                << (out.best_first_move ? std::to_string(*out.best_first_move)
                                        : std::string())
                << "," << out.solved_states << "\n";
      break;
    }
  }
  return 0;
}

int run_gp(const GlobalConfig& cfg, const std::string& expr) {
  Graph g = build(expr, cfg.build_opts());
  GpReport r = gp_number(g);
  std::string witness;
  for (int v : r.witness.to_vector()) {
    if (!witness.empty()) witness += " ";
    witness += std::to_string(v);
  }
  switch (cfg.parsed_format()) {
    case Format::kText:
      std::cout << "gp " << r.gp_number << (r.exact ? "" : " (lower bound)")
                << "\n"
                << "witness " << r.witness.to_string() << "\n"
                << "explored " << r.explored << "\n";
      break;
    case Format::kJson: {
      nlohmann::json j = {{"gp", r.gp_number},
                          {"witness", r.witness.to_vector()},
                          {"explored", r.explored},
                          {"exact", r.exact}};
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "gp,witness,explored,exact\n"
                << r.gp_number << "," << witness << "," << r.explored << ","
                << (r.exact ? "true" : "false") << "\n";
      break;
  }
  if (!r.exact) {
    std::cerr << "node budget exhausted; the value is a lower bound\n";
    return 4;
  }
  return 0;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && text[i] != ',') ++i;
    std::string item = text.substr(start, i - start);
    if (i < text.size()) ++i;  // skip the comma
    std::size_t item_begin = item.find_first_not_of(" \t");
    if (item_begin == std::string::npos)
      throw ParseError(start, "a vertex index");
    std::size_t item_end = item.find_last_not_of(" \t");
    item = item.substr(item_begin, item_end - item_begin + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0)
        throw ParseError(start, "a non-negative vertex index");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError(start, "a non-negative vertex index");
    }
  }
  return out;
}

int run_playable(const GlobalConfig& cfg, const std::string& expr,
                 const std::string& set_text) {
  Graph g = build(expr, cfg.build_opts());
  DistMatrix dist = bfs_distances(g);
  VertexSet played(g.order());
  for (int v : parse_vertex_list(set_text)) {
    if (v >= g.order())
      throw ParameterError("vertex " + std::to_string(v) +
                           " out of range for order " +
                           std::to_string(g.order()));
    played.add(v);
  }
  VertexSet result = playable_set(dist, played);
  switch (cfg.parsed_format()) {
    case Format::kText:
      std::cout << "playable " << result.to_string() << "\n"
                << "count " << result.size() << "\n";
      break;
    case Format::kJson: {
      nlohmann::json j = {{"playable", result.to_vector()},
                          {"count", result.size()}};
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      std::string members;
      for (int v : result.to_vector()) {
        if (!members.empty()) members += " ";
        members += std::to_string(v);
      }
      std::cout << "playable,count\n" << members << "," << result.size()
                << "\n";
      break;
    }
  }
  return 0;
}

int run_play(const GlobalConfig& cfg, const std::string& expr, Rule rule,
             Player human) {
  auto board = std::make_shared<const Board>(build(expr, cfg.build_opts()));
  Solver solver(board, rule, cfg.solve_opts());
  import_cache_if_configured(solver, cfg);
  solver.solve();  // pre-solve so every engine reply is a table lookup
  GameState state(board, rule);
  std::cout << "playing " << to_string(rule) << " on " << expr
            << "; you are " << to_string(human) << "\n";
  for (;;) {
    VertexSet playable = playable_set(board->dist(), state.played());
    std::cout << "played " << state.played().to_string() << "\n";
    std::cout << "playable " << playable.to_string() << "\n";
    if (playable.empty()) break;
    Player mover = state.to_move();
    if (mover == human) {
      for (;;) {
        std::cout << "your move (" << to_string(mover) << "): " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\nsession aborted\n";
          export_cache_if_configured(solver, cfg);
          return 5;
        }
        int v = -1;
        try {
          std::size_t used = 0;
          v = std::stoi(line, &used);
          while (used < line.size() &&
                 (line[used] == ' ' || line[used] == '\t'))
            ++used;
          if (used != line.size() || v < 0) {
            std::cout << "enter one vertex index in decimal\n";
            continue;
          }
        } catch (const std::logic_error&) {
          std::cout << "enter one vertex index in decimal\n";
          continue;
        }
        try {
          state = apply_move(state, v);
          break;
        } catch (const IllegalMoveError& e) {
          std::cout << "illegal move: " << describe(e.violation()) << "\n";
        } catch (const ParameterError&) {
          std::cout << "no such vertex (order is "
                    << board->graph().order() << ")\n";
        }
      }
    } else {
      int v = solver.best_move(state.played());
      std::cout << "engine (" << to_string(mover) << ") plays " << v << "\n";
      state = apply_move(state, v);
    }
  }
  int moves = state.played().size();
  Player last_mover = moves % 2 == 1 ? Player::kA : Player::kB;
  Player winner =
      rule == Rule::kAchievement ? last_mover : opponent(last_mover);
  std::cout << "winner " << to_string(winner)
            << (winner == human ? " (you)" : " (engine)") << "\n";
  export_cache_if_configured(solver, cfg);
  return 0;
}

int run_verify(const GlobalConfig& cfg, const std::string& suite) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.vertex_cap = cfg.vertex_cap;
  opts.state_cap = cfg.state_cap;
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_suites(opts);
  } else {
    reports.push_back(run_suite(suite, opts));
  }
  switch (cfg.parsed_format()) {
    case Format::kText:
      std::cout << render_text(reports);
      break;
    case Format::kJson:
      std::cout << render_json(reports);
      break;
    case Format::kCsv:
      std::cout << render_csv(reports);
      break;
  }
  for (const auto& report : reports) {
    if (!report.pass()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general position game workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig cfg;
  app.add_option("--format", cfg.format, "output format: text, json, or csv")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized suite cases")
      ->capture_default_str();
  app.add_option("--vertex-cap", cfg.vertex_cap,
                 "largest graph order any command may build")
      ->capture_default_str();
  app.add_option("--state-cap", cfg.state_cap,
                 "memoized-state budget for game solves")
      ->envname("GPGAME_STATE_CAP")
      ->capture_default_str();
  app.add_option("--cache", cfg.cache_dir,
                 "directory for solver cache files (solve and play)");
  app.add_flag("--restrict-first-move", cfg.restrict_first_move,
               "consider only vertex 0 as the opening move (sound on "
               "vertex-transitive graphs)");

  std::string solve_expr, solve_rule_pos, solve_rule_opt = "achievement";
  auto* solve_cmd =
      app.add_subcommand("solve", "decide the winner under optimal play");
  solve_cmd->add_option("expr", solve_expr, "family expression")->required();
  // Positional spelled RULE so its name cannot collide with --rule below;
  // when both are given the positional wins (see run_solve dispatch).
  solve_cmd->add_option("RULE", solve_rule_pos,
                        "achievement (default) or avoidance");
  solve_cmd->add_option("--rule", solve_rule_opt,
                        "achievement (default) or avoidance");

  std::string gp_expr;
  auto* gp_cmd =
      app.add_subcommand("gp", "compute the general position number");
  gp_cmd->add_option("expr", gp_expr, "family expression")->required();

  std::string playable_expr, playable_set_text;
  auto* playable_cmd = app.add_subcommand(
      "playable", "list the legal extensions of a played set");
  playable_cmd->add_option("expr", playable_expr, "family expression")
      ->required();
  playable_cmd->add_option("--set", playable_set_text,
                           "played vertices, comma separated (default empty)");

  std::string play_expr, play_rule = "achievement", play_as = "A";
  auto* play_cmd =
      app.add_subcommand("play", "interactive game against the engine");
  play_cmd->add_option("expr", play_expr, "family expression")->required();
  play_cmd->add_option("--rule", play_rule,
                       "achievement (default) or avoidance");
  play_cmd->add_option("--as", play_as, "your side: A (default) or B");

  std::string verify_suite;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  std::string suite_help = "suite name (all";
  for (const auto& name : suite_names()) suite_help += ", " + name;
  suite_help += ")";
  verify_cmd->add_option("suite", verify_suite, suite_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(solve_cmd)) {
      std::string rule_name =
          !solve_rule_pos.empty() ? solve_rule_pos : solve_rule_opt;
      return run_solve(cfg, solve_expr, parse_rule(rule_name));
    }
    if (app.got_subcommand(gp_cmd)) return run_gp(cfg, gp_expr);
    if (app.got_subcommand(playable_cmd))
      return run_playable(cfg, playable_expr, playable_set_text);
    if (app.got_subcommand(play_cmd)) {
      Player human;
      if (play_as == "A" || play_as == "a") {
        human = Player::kA;
      } else if (play_as == "B" || play_as == "b") {
        human = Player::kB;
      } else {
        throw ParameterError("unknown side: " + play_as +
                             " (expected A or B)");
      }
      return run_play(cfg, play_expr, parse_rule(play_rule), human);
    }
    if (app.got_subcommand(verify_cmd)) return run_verify(cfg, verify_suite);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotATreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
