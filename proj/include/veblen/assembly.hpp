#pragma once

#include <cstdint>
#include <vector>

#include "veblen/enumerate.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

// Codegree coefficients c_0..c_d of the normalized adjacency characteristic
// polynomial: c_d is the coefficient of lambda^{N-d}, N = n (k-1)^{n-1}.
struct CoefficientVector {
  int k = 0;
  int n = 0;
  int valid_through = -1;   // last d the enumeration completed; < requested
                            // d_max only when a feasibility cap was hit
  std::vector<Rational> c;  // index d, size valid_through + 1
};

// Number of sub-edge-sets of the simple host isomorphic to the simple
// pattern (isolated vertices ignored on both sides).
BigInt simple_subgraph_count(const MultiHypergraph& host, const MultiHypergraph& pattern);

// (# H `subseteq` host) for a Veblen multi-hypergraph H with components G_i:
//   (1/|Aut(H)|) * prod_i |Aut(flatten G_i)| * simple_subgraph_count(host, flatten G_i).
// Components are placed independently (images may overlap), so the value may
// be non-integral, e.g. 25/2 for two disjoint triple edges in a 5-edge host.
Rational occurrence_count(const MultiHypergraph& host, const MultiHypergraph& h);

// Assembly: connected infragraph classes feed g_d = -(k-1)^n * sum C_H * (#H),
// then the exponential recurrence d*c_d = sum_j j*g_j*c_{d-j} builds c.
CoefficientVector codegree_coefficients(const MultiHypergraph& host, int d_max);

// Literal class-multiset sum over all (possibly disconnected) Veblen
// infragraph classes with d edges, using the occurrence-count route;
// independent cross-check of the convolution.
Rational codegree_direct_sum(const MultiHypergraph& host, int d);

// Classical coefficient theorem for simple 2-graphs: sum over elementary
// subgraphs on d vertices of (-1)^{components} 2^{cycles}.
Rational harary_sachs_2graph(const MultiHypergraph& host, int d);

// Same series as codegree_coefficients but with weight -(k-1)^v per
// component, v a free parameter.
Rational threshold_f(const MultiHypergraph& host, int v, int d);

struct ThresholdReport {
  int v = 0;
  int d_max = 0;
  int largest_nonzero = -1;             // -1 when all vanish
  std::vector<Rational> values;         // f(0)..f(d_max)
};
ThresholdReport threshold_search(const MultiHypergraph& host, int v, int d_max);

}  // namespace veblen
