#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "veblen/canonical.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

// Isomorphism class of a Veblen k-graph, carried by a representative.
struct VeblenClass {
  MultiHypergraph representative;
  CanonicalKey key;
  std::int64_t edge_count = 0;
  int component_count = 1;
};

// Documented feasibility cap for free enumeration by edge count.
int veblen_enumeration_cap(int k);

// All connected Veblen k-graphs with exactly d edges, up to isomorphism,
// sorted by canonical key. Pruned multiset growth over at most d labels with
// canonical dedup.
std::vector<VeblenClass> connected_veblen_classes(int k, int d);

// Count of all (possibly disconnected) Veblen k-graph classes with d edges,
// via the Euler transform of the connected counts.
BigInt all_veblen_class_counts(int k, int d);

// Same count by direct enumeration and dedup; independent cross-check route.
BigInt all_veblen_class_counts_direct(int k, int d);

// One entry per multiset of host edges with total multiplicity d and all
// degrees divisible by k, decomposed into connected canonical classes.
struct InfragraphDecomposition {
  std::vector<std::int64_t> host_multiplicities;      // per host edge
  std::vector<std::pair<VeblenClass, int>> parts;     // class, component count
  std::int64_t total_edges = 0;
};

std::vector<InfragraphDecomposition> veblen_infragraphs(const MultiHypergraph& host, int d);

// Assembly workhorse: for each 1 <= d <= d_max, tallies the connected Veblen
// infragraphs of the host with d edges, keyed by class, counting labeled
// placements (= distinct multiplicity vectors in the class).
struct ConnectedClassTally {
  MultiHypergraph representative;
  BigInt placements = 0;
};
std::vector<std::map<CanonicalKey, ConnectedClassTally>> connected_infragraph_tally(
    const MultiHypergraph& host, int d_max);

}  // namespace veblen
