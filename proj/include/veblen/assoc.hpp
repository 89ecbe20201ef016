#pragma once

#include "veblen/hypergraph.hpp"
#include "veblen/rooting.hpp"

namespace veblen {

// Associated coefficient of a Veblen k-graph:
//   C_H = sum over Euler rootings R of
//         rooting_multiplicity(R) * arborescence_count(D_R, min vertex)
//         / prod_v indeg_{D_R}(v),
// multiplicative over connected components. Memoized by canonical key.
// Throws std::invalid_argument when h is not Veblen.
Rational associated_coefficient(const MultiHypergraph& h);

// Closed form for connected Veblen 2-graphs:
//   C_G = euler_circuit_count_undirected(G) / prod_e mult(e)!.
Rational associated_coefficient_2graph(const MultiHypergraph& g);

// Signed sum over multiset partitions of the edge multiset into connected
// Veblen parts, with repeated identical parts carrying a symmetry weight:
//   sum over partitions P of prod_{types j} (-C_j)^{r_j} / r_j!.
// Vanishes on every connected Veblen 2-graph that is not a cycle (the
// indecomposable-Euler-circuit cancellation); -1 on the doubled edge and -2
// on longer cycles. Capped at 8 edges.
Rational partition_sum(const MultiHypergraph& g);
inline constexpr int kPartitionSumEdgeCap = 8;

}  // namespace veblen
