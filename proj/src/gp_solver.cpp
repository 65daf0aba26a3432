#include "gpgame/gp_solver.hpp"

#include <algorithm>
#include <unordered_set>

#include "gpgame/conflict_table.hpp"
#include "gpgame/errors.hpp"
#include "gpgame/general_position.hpp"

namespace gpgame {

ConflictTable::ConflictTable(const DistMatrix& dist)
    : dist_(dist), n_(dist.order()), use_masks_(dist.order() <= kMaskLimit) {
  if (!use_masks_) return;
  masks_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
                VertexSet(n_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      VertexSet mask(n_);
      for (int x = 0; x < n_; ++x) {
        if (x != u && x != v && conflicts(u, v, x)) mask.add(x);
      }
      masks_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(v)] = mask;
      masks_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(u)] = std::move(mask);
    }
  }
}

namespace {

struct GpSearch {
  const ConflictTable& table;
  std::uint64_t budget;
  GpReport report;
  VertexSet current;

  GpSearch(const ConflictTable& t, std::uint64_t b, int n)
      : table(t), budget(b), current(n) {
    report.witness = VertexSet(n);
  }

  // cand holds playable extensions with index above the last added vertex.
  void rec(const VertexSet& cand) {
    if (current.size() > report.gp_number) {
      report.gp_number = current.size();
      report.witness = current;
    }
    int remaining = cand.size();
    for (int v = cand.first(); v != -1; v = cand.next_after(v), --remaining) {
      if (current.size() + remaining <= report.gp_number) break;
      if (!report.exact) return;
      if (++report.explored > budget) {
        report.exact = false;
        return;
      }
      VertexSet child = cand;
      child.drop_upto(v);
      for (int u = current.first(); u != -1; u = current.next_after(u)) {
        table.filter_pair(child, u, v);
      }
      current.add(v);
      rec(child);
      current.remove(v);
    }
  }
};

}  // namespace

GpReport gp_number(const Graph& g, const GpOptions& opts) {
  DistMatrix dist = bfs_distances(g);
  ConflictTable table(dist);
  GpSearch search(table, opts.node_budget, g.order());
  search.rec(VertexSet::full(g.order()));
  return std::move(search.report);
}

namespace {

struct MaximalSearch {
  const ConflictTable& table;
  int size_cap;
  std::uint64_t budget;
  std::uint64_t explored = 0;
  std::unordered_set<VertexSet, VertexSetHash> visited;
  std::vector<VertexSet> out;
  VertexSet current;

  MaximalSearch(const ConflictTable& t, int cap, std::uint64_t b, int n)
      : table(t), size_cap(cap), budget(b), current(n) {}

  // cand is the full playable set of `current`; empty means maximal.
  void rec(const VertexSet& cand) {
    if (cand.empty()) {
      out.push_back(current);
      return;
    }
    if (current.size() >= size_cap) return;
    for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
      current.add(v);
      if (visited.insert(current).second) {
        if (++explored > budget) {
          throw BudgetError("maximal-set enumeration exceeded its budget of " +
                            std::to_string(budget) + " steps");
        }
        VertexSet child = cand;
        child.remove(v);
        for (int u = current.first(); u != -1; u = current.next_after(u)) {
          if (u != v) table.filter_pair(child, u, v);
        }
        rec(child);
      }
      current.remove(v);
    }
  }
};

}  // namespace

std::vector<VertexSet> enumerate_maximal_gp_sets(const Graph& g, int size_cap,
                                                 const GpOptions& opts) {
  if (size_cap < 1) throw ParameterError("size cap must be >= 1");
  DistMatrix dist = bfs_distances(g);
  ConflictTable table(dist);
  MaximalSearch search(table, size_cap, opts.node_budget, g.order());
  search.rec(VertexSet::full(g.order()));
  std::sort(search.out.begin(), search.out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return std::move(search.out);
}

bool is_maximal_gp_pair(const DistMatrix& dist, int u, int v) {
  dist.at(u, v);
  if (u == v) throw PreconditionError("is_maximal_gp_pair needs u != v");
  VertexSet pair = VertexSet::of(dist.order(), {u, v});
  return playable_set(dist, pair).empty();
}

}  // namespace gpgame
