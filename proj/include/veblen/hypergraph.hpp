#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "veblen/exact.hpp"

namespace veblen {

// A hyperedge: k distinct vertex labels, sorted ascending, 1-based.
using Edge = std::vector<int>;

// k-uniform multi-hypergraph on vertices 1..n. Edges are stored sorted and
// deduplicated; parallel copies live in the multiplicity vector. Vertices
// with no incident edge are legal (n bounds the label range).
struct MultiHypergraph {
  int k = 2;
  int n = 0;
  std::vector<Edge> edges;          // strictly increasing lexicographically
  std::vector<std::int64_t> mult;   // parallel to edges, every entry >= 1
};

// Validates and normalizes raw (edge, multiplicity) pairs; merges duplicates.
// Throws std::invalid_argument on malformed input (bad k, labels out of range,
// repeated labels inside an edge, nonpositive multiplicity).
MultiHypergraph make_hypergraph(int k, int n,
                                std::vector<std::pair<Edge, std::int64_t>> raw);

std::int64_t total_edge_count(const MultiHypergraph& h);
std::int64_t degree(const MultiHypergraph& h, int v);
std::vector<std::int64_t> degrees(const MultiHypergraph& h);  // index v-1

// Multiplicities collapsed to 1.
MultiHypergraph flatten(const MultiHypergraph& h);

// True iff every vertex degree is divisible by k.
bool is_veblen(const MultiHypergraph& h);

// Maximal connected pieces of the edge multiset, vertices relabeled
// contiguously (preserving relative order), isolated vertices dropped.
// Ordered by smallest original vertex.
std::vector<MultiHypergraph> connected_components(const MultiHypergraph& h);

bool is_connected(const MultiHypergraph& h);

// Drops isolated vertices, relabeling the rest contiguously.
MultiHypergraph drop_isolated(const MultiHypergraph& h);

// Applies vertex permutation (old label v -> perm[v]). perm has size n + 1;
// entry 0 is unused so labels can be used as indices directly.
MultiHypergraph relabel(const MultiHypergraph& h, const std::vector<int>& perm);

// Text format:
//   k=<int> n=<int>
//   v1 v2 ... vk [x<mult>]
// '#' starts a comment, blank lines are skipped.
// Parse errors report line and column.
MultiHypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const MultiHypergraph& h);

}  // namespace veblen
