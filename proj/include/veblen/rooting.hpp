#pragma once

#include <cstdint>
#include <vector>

#include "veblen/digraph.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

// A rooting assigns each copy of each edge a root vertex; copies of the same
// edge are indistinguishable, so only the per-(edge, vertex) counts matter.
// counts[i][j] = copies of edges[i] rooted at edges[i][j].
struct Rooting {
  std::vector<std::vector<std::int64_t>> counts;
};

// Union of rooted stars: each copy of edge e rooted at u contributes the arcs
// u -> v for every other v in e.
MultiDigraph rooted_digraph(const MultiHypergraph& h, const Rooting& r);

// Euler rootings: rootings whose rooted digraph is Eulerian. Balance forces
// each vertex v to root exactly deg(v)/k stars, so the enumeration runs over
// nonnegative integer matrices with row sums mult(e) and column sums deg(v)/k.
// Empty unless h is Veblen and connected. Deterministic order.
std::vector<Rooting> enumerate_euler_rootings(const MultiHypergraph& h);

// Number of distinct star orderings with non-decreasing roots:
// prod_v n_v! / prod_{e,v} r_{e,v}!  where n_v = total stars rooted at v.
BigInt rooting_multiplicity(const MultiHypergraph& h, const Rooting& r);

}  // namespace veblen
