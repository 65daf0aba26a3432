#include "gpgame/general_position.hpp"

#include <vector>

#include "gpgame/errors.hpp"

namespace gpgame {

VertexSet interval(const DistMatrix& dist, int u, int v) {
  dist.at(u, v);
  VertexSet out(dist.order());
  if (!dist.reachable(u, v)) return out;
  for (int x = 0; x < dist.order(); ++x) {
    if (dist.on_geodesic(u, x, v)) out.add(x);
  }
  return out;
}

bool is_general_position(const DistMatrix& dist, const VertexSet& s) {
  std::vector<int> members = s.to_vector();
  std::size_t k = members.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j) continue;
        if (dist.on_geodesic(members[i], members[l], members[j])) return false;
      }
    }
  }
  return true;
}

VertexSet playable_set(const DistMatrix& dist, const VertexSet& s) {
  if (s.width() != dist.order()) {
    throw PreconditionError("set width does not match graph order");
  }
  if (!is_general_position(dist, s)) {
    throw PreconditionError("played set is not in general position");
  }
  std::vector<int> members = s.to_vector();
  VertexSet out(dist.order());
  for (int x = 0; x < dist.order(); ++x) {
    if (s.contains(x)) continue;
    bool ok = true;
    // (i) x must not lie between two members.
    for (std::size_t i = 0; ok && i < members.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < members.size(); ++j) {
        if (dist.on_geodesic(members[i], x, members[j])) ok = false;
      }
    }
    // (ii) no member may lie between x and a different member.
    for (std::size_t i = 0; ok && i < members.size(); ++i) {
      for (std::size_t j = 0; ok && j < members.size(); ++j) {
        if (j == i) continue;
        if (dist.on_geodesic(x, members[j], members[i])) ok = false;
      }
    }
    if (ok) out.add(x);
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.width() != g.order()) {
    throw PreconditionError("set width does not match graph order");
  }
  for (int u = s.first(); u != -1; u = s.next_after(u)) {
    for (int v = s.next_after(u); v != -1; v = s.next_after(v)) {
      if (g.adjacent(u, v)) return false;
    }
  }
  return true;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.add(v);
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue;
  for (int src = 0; src < g.order(); ++src) {
    if (color[static_cast<std::size_t>(src)] != -1) continue;
    color[static_cast<std::size_t>(src)] = 0;
    queue.assign(1, src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] =
              1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<VertexSet> out;
  std::vector<int> queue;
  for (int src = 0; src < g.order(); ++src) {
    if (seen[static_cast<std::size_t>(src)]) continue;
    VertexSet comp(g.order());
    seen[static_cast<std::size_t>(src)] = true;
    comp.add(src);
    queue.assign(1, src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int v : g.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          comp.add(v);
          queue.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gpgame
