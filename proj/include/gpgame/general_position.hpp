#pragma once

#include <vector>

#include "gpgame/distance.hpp"
#include "gpgame/graph.hpp"
#include "gpgame/vertex_set.hpp"

namespace gpgame {

// Vertices lying on some shortest u,v-path. {u} when u == v; empty when u
// and v are in different components.
VertexSet interval(const DistMatrix& dist, int u, int v);

// True when no three members lie on a common shortest path. Sets of size
// <= 2 always qualify; triples with an unreachable pair never violate.
bool is_general_position(const DistMatrix& dist, const VertexSet& s);

// Vertices whose addition keeps s in general position. x qualifies iff
//   (i)  x lies on no shortest path between two members of s, and
//   (ii) no member of s lies on a shortest path from x to a different member.
// Throws PreconditionError when s itself is not in general position.
VertexSet playable_set(const DistMatrix& dist, const VertexSet& s);

// True when no edge joins two members of s.
bool is_independent(const Graph& g, const VertexSet& s);

VertexSet isolated_vertices(const Graph& g);

bool is_bipartite(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

}  // namespace gpgame
