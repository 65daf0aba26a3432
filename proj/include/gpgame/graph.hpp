#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpgame {

// Finite simple undirected graph on vertices 0..order-1. Neighbor lists are
// kept sorted; loops are rejected and duplicate insertions are no-ops.
class Graph {
 public:
  explicit Graph(int order);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // Pairs (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  // Canonical text form: "order edge_count\n" then one "u v\n" per edge,
  // u < v, edges sorted. Parsing accepts edges in any order but rejects
  // loops, duplicates, u >= v, and out-of-range endpoints.
  std::string to_edge_list_text() const;
  static Graph from_edge_list_text(std::string_view text);

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// FNV-1a (64-bit) over the canonical edge-list text, as 16 hex digits.
// Identifies a labeled graph in cache files and cache file names.
std::string edge_list_hash(const Graph& g);

}  // namespace gpgame
