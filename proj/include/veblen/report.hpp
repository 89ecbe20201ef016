#pragma once

#include <string>
#include <vector>

#include "veblen/hypergraph.hpp"

namespace veblen {

struct ReportLine {
  bool discrepancy = false;
  std::string text;
};

struct Report {
  std::vector<ReportLine> lines;
  bool any_discrepancy() const;
};

// Evaluates the published closed-form displays for c_3..c_6 of a simple
// 3-graph: each display term is (published constant) x (published ratio)
// x (subgraph count of the class flattening). Emits one line per term
// comparing the published constant and ratio with the recomputed associated
// coefficient and automorphism ratio, and one line per codegree comparing
// the display total with the assembled coefficient.
Report formula_report_3graphs(const MultiHypergraph& host);

// Recomputes every reference-catalog row and flags published values or edge
// lists that disagree with first principles. Also checks that the catalog's
// d=6 rows plus the tripled edge cover the full d=6 connected enumeration.
Report catalog_report();

}  // namespace veblen
