// Command-line front end. Every subcommand prints deterministic plain text
// (exact integers or reduced p/q), or a machine-readable JSON document with
// --json. Exit codes: 0 success, 1 runtime errors (malformed input files and
// other failures), 2 usage errors (bad flags, unknown presets or catalog
// names), 3 feasibility cap or time budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "veblen/assembly.hpp"
#include "veblen/assoc.hpp"
#include "veblen/canonical.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/polynomial.hpp"
#include "veblen/presets.hpp"
#include "veblen/report.hpp"
#include "veblen/simplex.hpp"

using nlohmann::ordered_json;
using namespace veblen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long budget_ms = 0;  // 0 = unlimited

  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  }
  bool over() const { return budget_ms > 0 && elapsed_ms() > budget_ms; }
};

// Host selection shared by most subcommands: exactly one of --input/--preset.
struct HostSource {
  std::string input_path;
  std::string preset;

  void attach(CLI::App* cmd) {
    auto* i = cmd->add_option("--input", input_path, "hypergraph text file");
    auto* p = cmd->add_option("--preset", preset, preset_grammar());
    i->excludes(p);
    p->excludes(i);
  }

  MultiHypergraph load() const {
    if (!preset.empty()) return preset_by_name(preset);
    if (input_path.empty()) throw std::invalid_argument("no input: give --input or --preset");
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open '" + input_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
  }
};

std::string q_str(const Rational& q) { return rational_to_string(q); }
std::string z_str(const BigInt& z) { return z.str(); }

void print_report(const Report& report) {
  for (const ReportLine& line : report.lines)
    std::cout << (line.discrepancy ? "!! " : "   ") << line.text << "\n";
}

ordered_json report_json(const Report& report) {
  ordered_json lines = ordered_json::array();
  for (const ReportLine& line : report.lines)
    lines.push_back({{"discrepancy", line.discrepancy}, {"text", line.text}});
  return lines;
}

int run_coeffs(const HostSource& src, int dmax, bool withReport, bool asJson, Clock& clock) {
  MultiHypergraph host = src.load();
  CoefficientVector vec;
  if (clock.budget_ms == 0) {
    vec = codegree_coefficients(host, dmax);
  } else {
    // Staged evaluation so the budget can cut in between codegrees.
    for (int d = 0; d <= dmax; ++d) {
      if (clock.over()) break;
      CoefficientVector next = codegree_coefficients(host, d);
      vec = next;
      if (vec.valid_through < d) break;  // library cap: no point pushing on
    }
  }

  if (asJson) {
    ordered_json doc;
    doc["k"] = vec.k;
    doc["n"] = vec.n;
    doc["dmax"] = dmax;
    doc["valid_through"] = vec.valid_through;
    ordered_json cs = ordered_json::object();
    for (int d = 0; d <= vec.valid_through; ++d) cs[std::to_string(d)] = q_str(vec.c[static_cast<std::size_t>(d)]);
    doc["coefficients"] = cs;
    if (withReport && host.k == 3) doc["report"] = report_json(formula_report_3graphs(host));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (int d = 0; d <= vec.valid_through; ++d)
      std::cout << "c_" << d << " = " << q_str(vec.c[static_cast<std::size_t>(d)]) << "\n";
    if (withReport && host.k == 3) print_report(formula_report_3graphs(host));
  }
  if (vec.valid_through < dmax) {
    std::cerr << (clock.over() ? "time budget exceeded" : "feasibility cap reached") << " after d="
              << vec.valid_through << " (requested " << dmax << ")\n";
    return kExitCap;
  }
  return kExitOk;
}

int run_assoc(const HostSource& src, const std::string& catalogName, bool withPartitionSum, bool catalogOnly,
              bool asJson) {
  if (catalogOnly) {
    Report rep = catalog_report();
    if (asJson)
      std::cout << ordered_json{{"catalog_report", report_json(rep)}}.dump(2) << "\n";
    else
      print_report(rep);
    return kExitOk;
  }
  MultiHypergraph h = catalogName.empty() ? src.load() : catalog_entry(catalogName).graph;
  Rational c = associated_coefficient(h);
  ordered_json doc;
  doc["C"] = q_str(c);
  if (!asJson) std::cout << "C = " << q_str(c) << "\n";
  if (withPartitionSum) {
    Rational ps = partition_sum(h);
    doc["partition_sum"] = q_str(ps);
    if (!asJson) std::cout << "partition_sum = " << q_str(ps) << "\n";
  }
  if (asJson) std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int run_simplex(int k, bool direct, bool withRatio, bool asJson) {
  BigInt ck = direct ? simplex_Ck_direct(k) : simplex_Ck(k);
  std::string digits = z_str(ck);
  if (asJson) {
    ordered_json doc;
    doc["k"] = k;
    doc["C_k"] = digits;
    doc["digits"] = digits.size() - (digits[0] == '-' ? 1 : 0);
    if (withRatio) doc["ratio_to_(k+1)!k^{k+1}"] = q_str(asymptotic_ratio(k));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << digits << "\n";
    std::cout << "digits = " << (digits.size() - (digits[0] == '-' ? 1 : 0)) << "\n";
    if (withRatio) std::cout << "ratio = " << q_str(asymptotic_ratio(k)) << "\n";
  }
  return kExitOk;
}

int run_enum(int k, int d, bool connectedOnly, bool withReps, bool asJson) {
  if (connectedOnly) {
    auto classes = connected_veblen_classes(k, d);
    if (asJson) {
      ordered_json doc;
      doc["k"] = k;
      doc["d"] = d;
      doc["connected"] = true;
      doc["count"] = classes.size();
      if (withReps) {
        ordered_json reps = ordered_json::array();
        for (const auto& c : classes) reps.push_back(format_hypergraph(c.representative));
        doc["representatives"] = reps;
      }
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << classes.size() << "\n";
      if (withReps)
        for (const auto& c : classes) std::cout << format_hypergraph(c.representative) << "\n";
    }
  } else {
    BigInt count = all_veblen_class_counts(k, d);
    if (asJson)
      std::cout << ordered_json{{"k", k}, {"d", d}, {"connected", false}, {"count", z_str(count)}}.dump(2)
                << "\n";
    else
      std::cout << z_str(count) << "\n";
  }
  return kExitOk;
}

int run_count(const HostSource& hostSrc, const HostSource& patSrc, const std::string& patCatalog, bool asJson) {
  MultiHypergraph host = hostSrc.load();
  MultiHypergraph pattern = patCatalog.empty() ? patSrc.load() : catalog_entry(patCatalog).graph;
  BigInt sub = simple_subgraph_count(host, flatten(drop_isolated(pattern)));
  Rational occ = occurrence_count(host, pattern);
  if (asJson) {
    std::cout << ordered_json{{"flat_subgraph_count", z_str(sub)}, {"occurrence", q_str(occ)}}.dump(2) << "\n";
  } else {
    std::cout << "flat_subgraph_count = " << z_str(sub) << "\n";
    std::cout << "occurrence = " << q_str(occ) << "\n";
  }
  return kExitOk;
}

int run_threshold(const HostSource& src, int v, int dmax, bool asJson) {
  MultiHypergraph host = src.load();
  ThresholdReport rep = threshold_search(host, v, dmax);
  if (asJson) {
    ordered_json doc;
    doc["v"] = v;
    doc["dmax"] = dmax;
    ordered_json vals = ordered_json::object();
    for (int d = 0; d <= dmax; ++d) vals[std::to_string(d)] = q_str(rep.values[static_cast<std::size_t>(d)]);
    doc["values"] = vals;
    doc["largest_nonzero"] = rep.largest_nonzero;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (int d = 0; d <= dmax; ++d)
      std::cout << "f_" << d << " = " << q_str(rep.values[static_cast<std::size_t>(d)]) << "\n";
    std::cout << "largest_nonzero = " << rep.largest_nonzero << "\n";
  }
  return kExitOk;
}

int run_expand_poly(const std::string& preset, int dmax, bool asJson) {
  if (preset != "rowling") throw std::invalid_argument("expand-poly: only --preset rowling is defined");
  SparsePolynomial phi = expand_phi_rowling();
  const int deg = poly_degree(phi);
  if (dmax < 0 || dmax > deg) throw std::invalid_argument("expand-poly: --dmax must lie in 0..deg");
  if (asJson) {
    ordered_json doc;
    doc["degree"] = deg;
    ordered_json cs = ordered_json::object();
    for (int d = 0; d <= dmax; ++d) cs[std::to_string(d)] = z_str(codegree_coefficient_of(phi, d));
    doc["coefficients"] = cs;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree = " << deg << "\n";
    for (int d = 0; d <= dmax; ++d)
      std::cout << "c_" << d << " = " << z_str(codegree_coefficient_of(phi, d)) << "\n";
  }
  return kExitOk;
}

int run_show(const HostSource& src, const std::string& catalogName) {
  MultiHypergraph h = catalogName.empty() ? src.load() : catalog_entry(catalogName).graph;
  std::cout << format_hypergraph(h);
  return kExitOk;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  MultiHypergraph rowling = preset_rowling();
  check("parse/format round trip", isomorphic(parse_hypergraph(format_hypergraph(rowling)), rowling));

  CoefficientVector c6 = codegree_coefficients(rowling, 6);
  check("5-edge host c_3 = -240", c6.c[3] == Rational(-240));
  check("5-edge host c_6 = 28320", c6.c[6] == Rational(28320));

  check("simplex constants 2,21,588,28230",
        simplex_Ck(2) == 2 && simplex_Ck(3) == 21 && simplex_Ck(4) == 588 && simplex_Ck(5) == 28230);

  check("connected Veblen counts d=3..6", connected_veblen_classes(3, 3).size() == 1 &&
                                              connected_veblen_classes(3, 4).size() == 1 &&
                                              connected_veblen_classes(3, 5).size() == 2 &&
                                              connected_veblen_classes(3, 6).size() == 11);
  check("all-class count d=6 = 12", all_veblen_class_counts(3, 6) == 12);

  ThresholdReport th = threshold_search(preset_single_edge(3), 3, 12);
  check("single-edge threshold v=3 is 9", th.largest_nonzero == 9);

  SparsePolynomial phi = expand_phi_rowling();
  check("phi degree 448", poly_degree(phi) == 448);
  check("phi codegree 12 = 125012034", codegree_coefficient_of(phi, 12) == BigInt(125012034));
  check("phi matches assembly through d=6", [&] {
    for (int d = 0; d <= 6; ++d)
      if (Rational(codegree_coefficient_of(phi, d)) != c6.c[static_cast<std::size_t>(d)]) return false;
    return true;
  }());

  std::cout << (failures == 0 ? "selftest OK" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact codegree coefficients of k-uniform hypergraphs"};
  app.require_subcommand(1);

  Clock clock;
  if (const char* env = std::getenv("VEBLEN_TIME_BUDGET_MS")) clock.budget_ms = std::atoll(env);
  app.add_option("--time-budget-ms", clock.budget_ms,
                 "soft time budget; 0 = unlimited (env VEBLEN_TIME_BUDGET_MS)");

  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output");

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "codegree coefficients of a host");
  HostSource coeffsSrc;
  int coeffsDmax = 6;
  bool coeffsReport = false;
  coeffsSrc.attach(coeffs);
  coeffs->add_option("--dmax", coeffsDmax, "largest codegree")->required();
  coeffs->add_flag("--report", coeffsReport, "closed-form display comparison (3-graphs)");

  // assoc
  auto* assoc = app.add_subcommand("assoc", "associated coefficient of a Veblen graph");
  HostSource assocSrc;
  std::string assocCatalog;
  bool assocPartition = false, assocCatalogReport = false;
  assocSrc.attach(assoc);
  assoc->add_option("--catalog", assocCatalog, "reference-catalog entry name");
  assoc->add_flag("--partition-sum", assocPartition, "also print the signed partition sum (2-graphs)");
  assoc->add_flag("--catalog-report", assocCatalogReport, "recompute the whole reference catalog");

  // simplex-ck
  auto* simplex = app.add_subcommand("simplex-ck", "simplex constant C_k");
  int simplexK = 3;
  bool simplexDirect = false, simplexRatio = false;
  simplex->add_option("--k", simplexK, "uniformity")->required();
  simplex->add_flag("--direct", simplexDirect, "derangement-enumeration route (k <= 7)");
  simplex->add_flag("--ratio", simplexRatio, "also print C_k / ((k+1)! k^{k+1})");

  // enum-veblen
  auto* enumCmd = app.add_subcommand("enum-veblen", "count Veblen classes with d edges");
  int enumK = 3, enumD = 3;
  bool enumConnected = false, enumReps = false;
  enumCmd->add_option("--k", enumK)->required();
  enumCmd->add_option("--d", enumD)->required();
  enumCmd->add_flag("--connected", enumConnected, "connected classes only");
  enumCmd->add_flag("--reps", enumReps, "print representatives (with --connected)");

  // count
  auto* count = app.add_subcommand("count", "subgraph and occurrence counts");
  HostSource countHost, countPattern;
  std::string countCatalog;
  countHost.attach(count);
  count->add_option("--pattern", countPattern.input_path, "pattern hypergraph file");
  count->add_option("--pattern-preset", countPattern.preset, "pattern preset");
  count->add_option("--pattern-catalog", countCatalog, "pattern from the reference catalog");

  // threshold
  auto* threshold = app.add_subcommand("threshold", "coefficient v-threshold search");
  HostSource thresholdSrc;
  int thresholdV = 3, thresholdDmax = 12;
  thresholdSrc.attach(threshold);
  threshold->add_option("--v", thresholdV)->required();
  threshold->add_option("--dmax", thresholdDmax)->required();

  // expand-poly
  auto* expand = app.add_subcommand("expand-poly", "expand the stored factored characteristic polynomial");
  std::string expandPreset = "rowling";
  int expandDmax = 15;
  expand->add_option("--preset", expandPreset, "rowling");
  expand->add_option("--dmax", expandDmax, "largest codegree to print");

  // show
  auto* show = app.add_subcommand("show", "print a hypergraph in the text format");
  HostSource showSrc;
  std::string showCatalog;
  showSrc.attach(show);
  show->add_option("--catalog", showCatalog, "reference-catalog entry name");

  // selftest
  app.add_subcommand("selftest", "quick end-to-end battery");

  // App-level flags (--json, --time-budget-ms) may appear after the
  // subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help text or the diagnostic
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(coeffsSrc, coeffsDmax, coeffsReport, asJson, clock);
    if (assoc->parsed())
      return run_assoc(assocSrc, assocCatalog, assocPartition, assocCatalogReport, asJson);
    if (simplex->parsed()) return run_simplex(simplexK, simplexDirect, simplexRatio, asJson);
    if (enumCmd->parsed()) return run_enum(enumK, enumD, enumConnected, enumReps, asJson);
    if (count->parsed()) return run_count(countHost, countPattern, countCatalog, asJson);
    if (threshold->parsed()) return run_threshold(thresholdSrc, thresholdV, thresholdDmax, asJson);
    if (expand->parsed()) return run_expand_poly(expandPreset, expandDmax, asJson);
    if (show->parsed()) return run_show(showSrc, showCatalog);
    return run_selftest();
  } catch (const CapExceeded& e) {
    std::cerr << "cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
