#include "gpgame/game_engine.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"

namespace gpgame {

const char* to_string(Rule r) {
  return r == Rule::kAchievement ? "achievement" : "avoidance";
}

const char* to_string(Player p) { return p == Player::kA ? "A" : "B"; }

std::optional<Rule> rule_from_string(std::string_view s) {
  if (s == "achievement") return Rule::kAchievement;
  if (s == "avoidance") return Rule::kAvoidance;
  return std::nullopt;
}

GameState::GameState(std::shared_ptr<const Board> board, Rule rule)
    : board_(std::move(board)),
      rule_(rule),
      played_(board_->graph().order()) {}

GameState::GameState(std::shared_ptr<const Board> board, Rule rule,
                     VertexSet played)
    : board_(std::move(board)), rule_(rule), played_(std::move(played)) {
  if (played_.width() != board_->graph().order()) {
    throw PreconditionError("played set width does not match graph order");
  }
  if (!is_general_position(board_->dist(), played_)) {
    throw PreconditionError("played set is not in general position");
  }
}

GameState GameState::initial(Graph g, Rule rule) {
  return GameState(std::make_shared<Board>(std::move(g)), rule);
}

GameState apply_move(const GameState& state, int v) {
  const Board& board = *state.board();
  const DistMatrix& dist = board.dist();
  if (v < 0 || v >= board.graph().order()) {
    throw ParameterError("move " + std::to_string(v) +
                         " out of range for order " +
                         std::to_string(board.graph().order()));
  }
  const VertexSet& s = state.played();
  if (s.contains(v)) throw IllegalMoveError(v, MoveViolation::kAlreadyPlayed);
  for (int a = s.first(); a != -1; a = s.next_after(a)) {
    for (int b = s.next_after(a); b != -1; b = s.next_after(b)) {
      if (dist.on_geodesic(a, v, b)) {
        throw IllegalMoveError(v, MoveViolation::kConditionI);
      }
    }
  }
  for (int a = s.first(); a != -1; a = s.next_after(a)) {
    for (int b = s.first(); b != -1; b = s.next_after(b)) {
      if (b != a && dist.on_geodesic(v, b, a)) {
        throw IllegalMoveError(v, MoveViolation::kConditionII);
      }
    }
  }
  VertexSet next = s;
  next.add(v);
  return GameState(state.board(), state.rule(), std::move(next));
}

Solver::Solver(std::shared_ptr<const Board> board, Rule rule,
               SolveOptions opts)
    : board_(std::move(board)),
      rule_(rule),
      opts_(opts),
      conflicts_(board_->dist()) {}

VertexSet Solver::candidates_for(const VertexSet& played) const {
  return playable_set(board_->dist(), played);
}

void Solver::check_state_cap() const {
  if (memo_.size() > opts_.state_cap) {
    throw BudgetError("state cap of " + std::to_string(opts_.state_cap) +
                      " distinct positions exceeded");
  }
}

bool Solver::mover_wins(const VertexSet& played, const VertexSet& cand,
                        int depth) {
  auto it = memo_.find(played);
  if (it != memo_.end()) return it->second;

#ifdef NDEBUG
  if (opts_.paranoid)
#endif
  {
    if (!is_general_position(board_->dist(), played)) {
      throw std::logic_error("solver reached a set out of general position");
    }
  }

  bool win = false;
  if (cand.empty()) {
    win = (rule_ == Rule::kAvoidance);
  } else {
    for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
      VertexSet child_played = played;
      child_played.add(v);
      VertexSet child_cand = cand;
      child_cand.remove(v);
      for (int u = played.first(); u != -1; u = played.next_after(u)) {
        conflicts_.filter_pair(child_cand, u, v);
      }
      if (!mover_wins(child_played, child_cand, depth + 1)) {
        win = true;
        break;
      }
    }
  }
  memo_.emplace(played, win);
  check_state_cap();
  return win;
}

Outcome Solver::solve() {
  int n = board_->graph().order();
  VertexSet empty(n);
  bool win;
  if (opts_.restrict_first_move) {
    // Only the restriction itself is special-cased; the position after the
    // forced opening is solved with full candidate sets, so every memo
    // entry below the root keeps its true value (mover_wins requires cand
    // to be the complete playable set of its position).
    VertexSet first = VertexSet::of(n, {0});
    win = !mover_wins(first, candidates_for(first), 1);
    memo_.emplace(empty, win);
  } else {
    win = mover_wins(empty, VertexSet::full(n), 0);
  }
  Outcome out;
  out.winner = win ? Player::kA : Player::kB;
  out.best_first_move = opts_.restrict_first_move
                            ? 0
                            : best_move_in(empty, VertexSet::full(n));
  out.solved_states = memo_.size();

  // Self-check: the optimal-play trace length must agree with the winner
  // under the rule in force (odd trace => last move by A).
  std::vector<int> pv = principal_variation(empty);
  bool a_moved_last = pv.size() % 2 == 1;
  Player implied = rule_ == Rule::kAchievement
                       ? (a_moved_last ? Player::kA : Player::kB)
                       : (a_moved_last ? Player::kB : Player::kA);
  if (implied != out.winner) {
    throw std::logic_error(
        "optimal-play trace parity contradicts the computed winner");
  }
  return out;
}

Outcome Solver::solve_from(const VertexSet& played) {
  VertexSet cand = candidates_for(played);
  bool win = mover_wins(played, cand, 0);
  Player mover = played.size() % 2 == 0 ? Player::kA : Player::kB;
  Outcome out;
  out.winner = win ? mover : opponent(mover);
  if (!cand.empty()) out.best_first_move = best_move_in(played, cand);
  out.solved_states = memo_.size();
  return out;
}

int Solver::best_move_in(const VertexSet& played, const VertexSet& cand) {
  if (cand.empty()) return -1;
  for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
    VertexSet child_played = played;
    child_played.add(v);
    VertexSet child_cand = cand;
    child_cand.remove(v);
    for (int u = played.first(); u != -1; u = played.next_after(u)) {
      conflicts_.filter_pair(child_cand, u, v);
    }
    if (!mover_wins(child_played, child_cand, 0)) return v;
  }
  return cand.first();
}

int Solver::best_move(const VertexSet& played) {
  return best_move_in(played, candidates_for(played));
}

std::vector<int> Solver::principal_variation(const VertexSet& from) {
  VertexSet played = from;
  std::vector<int> moves;
  bool forced_opening = opts_.restrict_first_move && played.empty();
  while (true) {
    VertexSet cand = candidates_for(played);
    if (cand.empty()) break;
    // Under the restricted opening the first move is 0 by definition;
    // choosing it here keeps best_move_in's candidate-set contract intact.
    int v = forced_opening ? 0 : best_move_in(played, cand);
    forced_opening = false;
    moves.push_back(v);
    played.add(v);
  }
  return moves;
}

void Solver::export_cache(std::ostream& out) const {
  out << "gpcache 1 " << edge_list_hash(board_->graph()) << ' '
      << to_string(rule_) << '\n';
  std::vector<std::pair<std::string, bool>> lines;
  lines.reserve(memo_.size());
  for (const auto& [set, win] : memo_) {
    lines.emplace_back(set.to_hex(), win);
  }
  std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() < b.first.size();
    }
    return a.first < b.first;
  });
  for (const auto& [hex, win] : lines) {
    out << hex << ' ' << (win ? 'W' : 'L') << '\n';
  }
}

void Solver::import_cache(std::istream& in) {
  std::string magic;
  int version = 0;
  std::string hash;
  std::string rule_name;
  if (!(in >> magic >> version >> hash >> rule_name)) {
    throw CacheError("cache header is malformed");
  }
  if (magic != "gpcache") throw CacheError("not a gpcache file");
  if (version != 1) {
    throw CacheError("unsupported cache version " + std::to_string(version));
  }
  if (hash != edge_list_hash(board_->graph())) {
    throw CacheError("cache belongs to a different graph (hash mismatch)");
  }
  auto rule = rule_from_string(rule_name);
  if (!rule || *rule != rule_) {
    throw CacheError("cache belongs to rule '" + rule_name + "'");
  }
  int n = board_->graph().order();
  std::string hex;
  char verdict = 0;
  std::size_t line = 1;
  while (in >> hex >> verdict) {
    ++line;
    if (verdict != 'W' && verdict != 'L') {
      throw CacheError("bad verdict on cache line " + std::to_string(line));
    }
    VertexSet set(n);
    try {
      set = VertexSet::from_hex(n, hex);
    } catch (const Error& e) {
      throw CacheError("bad state on cache line " + std::to_string(line) +
                       ": " + e.what());
    }
#ifdef NDEBUG
    if (opts_.paranoid)
#endif
    {
      if (!is_general_position(board_->dist(), set)) {
        throw CacheError("cache line " + std::to_string(line) +
                         " holds a set out of general position");
      }
    }
    memo_[set] = (verdict == 'W');
  }
  check_state_cap();
}

std::string cache_file_name(const Graph& g, Rule rule) {
  return edge_list_hash(g) + "." + to_string(rule) + ".gpcache";
}

Outcome solve(const Graph& g, Rule rule, const SolveOptions& opts) {
  Solver solver(std::make_shared<Board>(g), rule, opts);
  return solver.solve();
}

Outcome solve_from(const GameState& state, const SolveOptions& opts) {
  Solver solver(state.board(), state.rule(), opts);
  return solver.solve_from(state.played());
}

namespace {

struct OracleSearch {
  const DistMatrix& dist;
  Rule rule;
  std::uint64_t nodes = 0;
  VertexSet played;

  bool mover_wins() {
    ++nodes;
    bool any_move = false;
    bool win = false;
    for (int v = 0; v < dist.order() && !win; ++v) {
      if (played.contains(v)) continue;
      played.add(v);
      if (is_general_position(dist, played)) {
        any_move = true;
        if (!mover_wins()) win = true;
      }
      played.remove(v);
    }
    if (!any_move) return rule == Rule::kAvoidance;
    return win;
  }
};

}  // namespace

Outcome oracle_solve(const Graph& g, Rule rule) {
  DistMatrix dist = bfs_distances(g);
  OracleSearch search{dist, rule, 0, VertexSet(g.order())};
  bool win = search.mover_wins();

  Outcome out;
  out.winner = win ? Player::kA : Player::kB;

  // Tie-break mirror of the memoized solver: lowest winning move, else the
  // lowest legal vertex (from the empty set, that is vertex 0).
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    search.played.add(v);
    bool child_wins = search.mover_wins();
    search.played.remove(v);
    if (!child_wins) {
      best = v;
      break;
    }
  }
  out.best_first_move = best;
  out.solved_states = search.nodes;
  return out;
}

bool parity_criterion_check(const GameState& state) {
  if (state.rule() != Rule::kAchievement) {
    throw PreconditionError("parity criterion applies to achievement states");
  }
  const DistMatrix& dist = state.board()->dist();
  VertexSet playable = playable_set(dist, state.played());
  if (playable.size() % 2 != 0) return false;
  return is_general_position(dist, playable | state.played());
}

bool even_clique_closure_condition(const Graph& g) {
  if (components(g).size() != 1) {
    throw PreconditionError(
        "even_clique_closure_condition needs a connected graph");
  }
  DistMatrix dist = bfs_distances(g);
  for (int u = 0; u < g.order(); ++u) {
    bool found = false;
    for (int v = 0; v < g.order() && !found; ++v) {
      if (v == u) continue;
      VertexSet closure = playable_set(dist, VertexSet::of(g.order(), {u, v}));
      closure.add(u);
      closure.add(v);
      if (closure.size() % 2 != 0) continue;
      bool clique = true;
      for (int a = closure.first(); clique && a != -1;
           a = closure.next_after(a)) {
        for (int b = closure.next_after(a); b != -1;
             b = closure.next_after(b)) {
          if (!g.adjacent(a, b)) {
            clique = false;
            break;
          }
        }
      }
      found = clique;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace gpgame
