#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/graph.hpp"

namespace gpgame {

// All-pairs unweighted hop distances. Vertex pairs in different components
// hold kUnreachable; callers must test reachable() before doing arithmetic
// on entries.
class DistMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  int order() const { return n_; }

  std::int32_t operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }

  // Bounds-checked access; throws ParameterError on out-of-range vertices.
  std::int32_t at(int u, int v) const;

  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

  // True when m lies on some shortest a,b-path (all legs finite). Holds
  // trivially for m == a or m == b when a,b are in the same component.
  bool on_geodesic(int a, int m, int b) const {
    std::int32_t am = (*this)(a, m);
    std::int32_t mb = (*this)(m, b);
    return am != kUnreachable && mb != kUnreachable && am + mb == (*this)(a, b);
  }

 private:
  friend DistMatrix bfs_distances(const Graph& g);
  DistMatrix(int n)
      : n_(n),
        d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
           kUnreachable) {}

  int n_;
  std::vector<std::int32_t> d_;
};

DistMatrix bfs_distances(const Graph& g);

}  // namespace gpgame
