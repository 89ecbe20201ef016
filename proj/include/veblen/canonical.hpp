#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "veblen/hypergraph.hpp"

namespace veblen {

// Isomorphism certificate: equal keys iff isomorphic multi-hypergraphs
// (vertex count included, so isolated vertices are distinguished).
struct CanonicalKey {
  std::vector<std::int64_t> cert;
  auto operator<=>(const CanonicalKey&) const = default;
};

// Canonicalization searches vertex permutations inside invariant-refined
// classes; beyond this many active vertices the search is refused.
inline constexpr int kCanonicalVertexCap = 16;

CanonicalKey canonical_key(const MultiHypergraph& h);

// Order of the vertex-permutation group preserving the edge-multiplicity
// function (isolated vertices permute freely among themselves).
BigInt aut_order(const MultiHypergraph& h);

bool isomorphic(const MultiHypergraph& a, const MultiHypergraph& b);

}  // namespace veblen
