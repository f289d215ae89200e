#pragma once

#include "bipow/graph.hpp"

namespace bipow {

/// G^m: u ~ v iff u != v and d_G(u, v) <= m. Throws InvalidExponent for m < 1.
Graph graph_power(const Graph& g, int m);

/// G^[m]: u ~ v iff d_G(u, v) is odd and at most m. Requires g bipartite
/// (NotBipartite) and m odd and positive (EvenExponent / InvalidExponent).
/// The result keeps the input's bipartition.
Graph bipartite_power(const Graph& g, int m);

}  // namespace bipow
