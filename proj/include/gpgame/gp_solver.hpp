#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/distance.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/vertex_set.hpp"

namespace gpgame {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct GpOptions {
  // Ceiling on candidate-extension steps across the whole search.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct GpReport {
  // Exact value when exact is true, otherwise the best lower bound found
  // before the budget ran out.
  int gp_number = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
  bool exact = true;
};

// Size of a largest general position set. Branch and bound over
// ascending-index extensions with playable-filtered candidates; prunes a
// branch when |current| + |candidates above| cannot beat the incumbent.
GpReport gp_number(const Graph& g, const GpOptions& opts = {});

// All inclusion-maximal general position sets with at most size_cap
// members. Maximality is graph-wide: a set qualifies iff its playable set
// is empty. Sorted by ascending member lists; throws BudgetError when the
// search exceeds opts.node_budget.
std::vector<VertexSet> enumerate_maximal_gp_sets(const Graph& g, int size_cap,
                                                 const GpOptions& opts = {});

// True when {u, v} extends to no larger general position set. u != v.
bool is_maximal_gp_pair(const DistMatrix& dist, int u, int v);

}  // namespace gpgame
