#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gpgame/conflict_table.hpp"
#include "gpgame/distance.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/vertex_set.hpp"

namespace gpgame {

// kAchievement: the player who makes the last legal move wins.
// kAvoidance: the player who makes the last legal move loses.
enum class Rule { kAchievement, kAvoidance };

enum class Player { kA, kB };

const char* to_string(Rule r);
const char* to_string(Player p);
std::optional<Rule> rule_from_string(std::string_view s);
inline Player opponent(Player p) {
  return p == Player::kA ? Player::kB : Player::kA;
}

inline constexpr std::uint64_t kDefaultStateCap = 100'000'000;

// Immutable graph plus its distance matrix, shared by states and solvers.
class Board {
 public:
  explicit Board(Graph g) : graph_(std::move(g)), dist_(bfs_distances(graph_)) {}

  const Graph& graph() const { return graph_; }
  const DistMatrix& dist() const { return dist_; }

 private:
  Graph graph_;
  DistMatrix dist_;
};

// A position of the game: the set of played vertices plus the rule in
// force. The played set is in general position at all times (validated on
// construction); A is to move exactly when the played count is even.
class GameState {
 public:
  GameState(std::shared_ptr<const Board> board, Rule rule);
  GameState(std::shared_ptr<const Board> board, Rule rule, VertexSet played);
  static GameState initial(Graph g, Rule rule);

  const std::shared_ptr<const Board>& board() const { return board_; }
  const VertexSet& played() const { return played_; }
  Rule rule() const { return rule_; }
  Player to_move() const {
    return played_.size() % 2 == 0 ? Player::kA : Player::kB;
  }

 private:
  std::shared_ptr<const Board> board_;
  Rule rule_;
  VertexSet played_;
};

// Returns the successor state. Throws IllegalMoveError carrying the first
// violated playability condition (already played / (i) / (ii)).
GameState apply_move(const GameState& state, int v);

struct Outcome {
  Player winner = Player::kA;
  // Lowest-index winning move for the side to move, or — when every move
  // loses — the lowest-index playable vertex. Empty iff no move is legal.
  std::optional<int> best_first_move;
  // Memo entries held after the solve (oracle_solve: recursion nodes).
  std::uint64_t solved_states = 0;
};

struct SolveOptions {
  std::uint64_t state_cap = kDefaultStateCap;
  // Consider only vertex 0 as the opening move. Sound on vertex-transitive
  // graphs only, hence off by default.
  bool restrict_first_move = false;
  // Re-verify the general-position invariant on every memo insertion.
  // Unit tests enable it; debug builds always check.
  bool paranoid = false;
};

// Exact memoized solver for one (graph, rule) pair. Memo keys are packed
// played sets; the side to move is implied by set parity. Instances can be
// reused across queries and primed from cache files.
class Solver {
 public:
  Solver(std::shared_ptr<const Board> board, Rule rule, SolveOptions opts = {});

  const Board& board() const { return *board_; }
  Rule rule() const { return rule_; }

  // Winner from the empty position (honors restrict_first_move).
  Outcome solve();
  // Winner from an arbitrary general-position set; played sets of any
  // parity are fine. Throws PreconditionError when `played` is not in
  // general position.
  Outcome solve_from(const VertexSet& played);

  // Lowest-index winning move for the side to move, else lowest-index
  // playable vertex; -1 when no move is legal.
  int best_move(const VertexSet& played);

  // Optimal play trace (lowest winning move first, the tie-break above)
  // until no move is legal.
  std::vector<int> principal_variation(const VertexSet& from);

  std::uint64_t state_count() const { return memo_.size(); }

  // Cache file layout (text):
  //   gpcache 1 <edge-list-hash> <rule>
  //   <played-set-hex> <W|L>      one line per memoized state
  // W/L is from the perspective of the side to move. import_cache rejects
  // mismatched versions, graph hashes, or rules with CacheError.
  void export_cache(std::ostream& out) const;
  void import_cache(std::istream& in);

 private:
  bool mover_wins(const VertexSet& played, const VertexSet& cand, int depth);
  int best_move_in(const VertexSet& played, const VertexSet& cand);
  VertexSet candidates_for(const VertexSet& played) const;
  void check_state_cap() const;

  std::shared_ptr<const Board> board_;
  Rule rule_;
  SolveOptions opts_;
  ConflictTable conflicts_;
  std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
};

// "<edge-list-hash>.<rule>.gpcache"
std::string cache_file_name(const Graph& g, Rule rule);

// One-shot helpers over a temporary Solver.
Outcome solve(const Graph& g, Rule rule, const SolveOptions& opts = {});
Outcome solve_from(const GameState& state, const SolveOptions& opts = {});

// Reference solver: plain recursion over move sequences, no memo, no
// transposition sharing; legality is re-derived from the definition of
// general position at every step. Exponential — small graphs only.
Outcome oracle_solve(const Graph& g, Rule rule);

// True when playable_set(played) ∪ played is in general position and the
// playable set has even size. When this holds just after a move, the player
// who made that move wins the achievement game. Requires an achievement
// state (throws PreconditionError otherwise).
bool parity_criterion_check(const GameState& state);

// True when every vertex u has a partner v != u such that {u, v} together
// with its playable set induces a clique of even order. On a connected
// graph this predicts a win for the second player on every Cartesian
// product having this graph as a factor. Requires a connected graph.
bool even_clique_closure_condition(const Graph& g);

}  // namespace gpgame
