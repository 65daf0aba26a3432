#include "gpgame/distance.hpp"

#include <vector>

#include "gpgame/errors.hpp"

namespace gpgame {

std::int32_t DistMatrix::at(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw ParameterError("vertex out of range in distance lookup");
  }
  return (*this)(u, v);
}

DistMatrix bfs_distances(const Graph& g) {
  int n = g.order();
  DistMatrix dist(n);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int src = 0; src < n; ++src) {
    auto* row = &dist.d_[static_cast<std::size_t>(src) *
                         static_cast<std::size_t>(n)];
    row[src] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      int u = queue[head++];
      std::int32_t du = row[u];
      for (int v : g.neighbors(u)) {
        if (row[v] == DistMatrix::kUnreachable) {
          row[v] = du + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return dist;
}

}  // namespace gpgame
