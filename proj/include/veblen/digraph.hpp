#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

// Loopless directed multigraph on vertices 1..n.
struct MultiDigraph {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> arcs;  // (tail, head) -> multiplicity

  void add_arc(int u, int v, std::int64_t m = 1);
};

std::int64_t total_arc_count(const MultiDigraph& d);
std::vector<std::int64_t> out_degrees(const MultiDigraph& d);  // index v-1
std::vector<std::int64_t> in_degrees(const MultiDigraph& d);

// Balanced at every vertex and all arcs in one weakly connected component.
bool is_eulerian(const MultiDigraph& d);

// Spanning arborescences converging to root (every non-root vertex has
// out-degree 1, all paths lead to root), parallel arcs distinguishable.
// Matrix-tree: determinant of the out-degree Laplacian with the root row and
// column deleted, computed fraction-free (Bareiss). 0 when none exist.
BigInt arborescence_count(const MultiDigraph& d, int root);

// Euler circuits up to rotation, parallel arcs distinguishable.
// BEST theorem: count = arborescence_count(d, r) * prod_v (indeg(v) - 1)!.
// Throws std::invalid_argument on non-Eulerian input.
BigInt euler_circuit_count_best(const MultiDigraph& d);

// Independent oracle: exhaustive walk extension from a fixed canonical first
// arc. Non-Eulerian input gives 0. Capped at 12 arcs.
BigInt euler_circuit_count_brute(const MultiDigraph& d);
inline constexpr int kEulerBruteArcCap = 12;

// Euler circuits of a 2-uniform Veblen multigraph with distinguishable edge
// copies: sum over balanced orientations of binomial orientation weights
// times the directed circuit count.
BigInt euler_circuit_count_undirected(const MultiHypergraph& g);

}  // namespace veblen
