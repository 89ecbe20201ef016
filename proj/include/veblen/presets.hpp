#pragma once

#include <string>
#include <vector>

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

// 3-uniform example hosts on seven vertices. The five-edge host, its
// one-edge extension, and the full seven-line plane form a chain
// rowling ⊂ fano-minus-1 ⊂ fano used throughout the test corpus.
MultiHypergraph preset_rowling();
MultiHypergraph preset_fano();
MultiHypergraph preset_fano_minus_one();

// Complete k-graph on k+1 vertices (the simplex).
MultiHypergraph preset_simplex(int k);

// Single k-edge on vertices 1..k.
MultiHypergraph preset_single_edge(int k);

// 2-uniform cycle: len >= 3 gives the simple cycle, len == 2 the doubled edge.
MultiHypergraph cycle_graph(int len);

// Accepted names: rowling | fano | fano-minus-1 | simplex-<k> | single-edge-<k>.
// Throws std::invalid_argument for anything else.
MultiHypergraph preset_by_name(const std::string& name);
std::string preset_grammar();

// Compact edge-list notation: "(123)^3(145)" -> edges {1,2,3} x3, {1,4,5}.
// Single-character labels 1..9 only; n = largest label used.
MultiHypergraph compact_edges(int k, const std::string& text);

// Reference table of connected Veblen 3-graphs with published associated
// coefficients, plus the seven-line plane. `graph` is the class
// representative actually used by the library; where a published edge list
// fails the Veblen degree condition the representative was recovered from
// the d=6 enumeration and `note` documents the substitution.
struct CatalogEntry {
  std::string name;
  MultiHypergraph graph;
  std::string printed_edges;   // edge list as published
  Rational printed_value;      // published C
  BigInt printed_aut_ratio;    // published |Aut(flat)|/|Aut|
  std::string note;
};
const std::vector<CatalogEntry>& reference_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace veblen
