#pragma once

#include <vector>

#include "gpgame/distance.hpp"
#include "gpgame/vertex_set.hpp"

namespace gpgame {

// For each vertex pair (u, v), the third vertices x for which {u, v, x}
// fails general position — i.e. one of the three lies on a shortest path
// between the other two. Masks are precomputed for graphs up to kMaskLimit
// vertices; beyond that, queries fall back to direct distance tests.
//
// The referenced DistMatrix must outlive the table.
class ConflictTable {
 public:
  static constexpr int kMaskLimit = 512;

  explicit ConflictTable(const DistMatrix& dist);

  int order() const { return n_; }

  // True when the distinct triple {u, v, x} is not in general position.
  bool conflicts(int u, int v, int x) const {
    return dist_.on_geodesic(u, x, v) || dist_.on_geodesic(x, u, v) ||
           dist_.on_geodesic(u, v, x);
  }

  // cand := cand minus every x in conflict with the pair (u, v).
  // Never touches the bits of u or v themselves.
  void filter_pair(VertexSet& cand, int u, int v) const {
    if (use_masks_) {
      cand.subtract(masks_[static_cast<std::size_t>(u) *
                               static_cast<std::size_t>(n_) +
                           static_cast<std::size_t>(v)]);
      return;
    }
    for (int x = cand.first(); x != -1; x = cand.next_after(x)) {
      if (x != u && x != v && conflicts(u, v, x)) cand.remove(x);
    }
  }

 private:
  const DistMatrix& dist_;
  int n_;
  bool use_masks_;
  std::vector<VertexSet> masks_;
};

}  // namespace gpgame
