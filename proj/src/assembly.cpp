#include "veblen/assembly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "veblen/assoc.hpp"
#include "veblen/canonical.hpp"

namespace veblen {

namespace {

void require_simple(const MultiHypergraph& host, const char* who) {
  for (std::int64_t m : host.mult)
    if (m != 1) throw std::invalid_argument(std::string(who) + ": host must be simple");
}

// S_d = sum over connected Veblen infragraph classes with d edges of
// C_H * (labeled placement count). Shared by the coefficient and threshold
// assemblies; only the per-component weight differs between them.
std::vector<Rational> class_sums(const MultiHypergraph& host, int d_max) {
  auto tallies = connected_infragraph_tally(host, d_max);
  std::vector<Rational> s(static_cast<std::size_t>(d_max) + 1, Rational(0));
  for (int d = 1; d <= d_max; ++d) {
    Rational total(0);
    for (const auto& [key, tally] : tallies[static_cast<std::size_t>(d)])
      total += associated_coefficient(tally.representative) * Rational(tally.placements);
    s[static_cast<std::size_t>(d)] = total;
  }
  return s;
}

// c_0 = 1, d*c_d = sum_{j=1..d} j*g_j*c_{d-j} with g_d = -weight * s_d.
std::vector<Rational> convolve(const std::vector<Rational>& s, const Rational& weight) {
  const int d_max = static_cast<int>(s.size()) - 1;
  std::vector<Rational> g(s.size()), c(s.size());
  for (int d = 1; d <= d_max; ++d) g[static_cast<std::size_t>(d)] = -weight * s[static_cast<std::size_t>(d)];
  c[0] = 1;
  for (int d = 1; d <= d_max; ++d) {
    Rational acc(0);
    for (int j = 1; j <= d; ++j)
      acc += Rational(j) * g[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(d - j)];
    c[static_cast<std::size_t>(d)] = acc / d;
  }
  return c;
}

Rational rational_pow(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

BigInt simple_subgraph_count(const MultiHypergraph& host, const MultiHypergraph& pattern) {
  require_simple(host, "simple_subgraph_count");
  MultiHypergraph pat = drop_isolated(pattern);
  if (pat.k != host.k) throw std::invalid_argument("simple_subgraph_count: uniformity mismatch");
  for (std::int64_t m : pat.mult)
    if (m != 1) throw std::invalid_argument("simple_subgraph_count: pattern must be simple");
  const std::size_t want = pat.edges.size();
  const std::size_t total = host.edges.size();
  if (want == 0) return 1;
  if (want > total) return 0;

  std::vector<std::int64_t> patDegrees = degrees(pat);
  std::sort(patDegrees.begin(), patDegrees.end());
  const CanonicalKey wantKey = canonical_key(pat);

  BigInt count = 0;
  std::vector<std::size_t> chosen;
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == want) {
      MultiHypergraph sub;
      sub.k = host.k;
      sub.n = host.n;
      for (std::size_t i : chosen) {
        sub.edges.push_back(host.edges[i]);
        sub.mult.push_back(1);
      }
      MultiHypergraph core = drop_isolated(sub);
      // Degree-multiset prefilter keeps canonicalization off obvious misses.
      std::vector<std::int64_t> deg = degrees(core);
      std::sort(deg.begin(), deg.end());
      if (deg == patDegrees && canonical_key(core) == wantKey) ++count;
      return;
    }
    // Not enough edges left to finish the subset.
    if (total - next < want - chosen.size()) return;
    for (std::size_t i = next; i < total; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return count;
}

Rational occurrence_count(const MultiHypergraph& host, const MultiHypergraph& h) {
  require_simple(host, "occurrence_count");
  MultiHypergraph core = drop_isolated(h);
  Rational out(1, 1);
  for (const MultiHypergraph& comp : connected_components(core)) {
    MultiHypergraph flat = flatten(comp);
    out *= Rational(aut_order(flat) * simple_subgraph_count(host, flat));
  }
  return out / Rational(aut_order(core));
}

CoefficientVector codegree_coefficients(const MultiHypergraph& host, int d_max) {
  require_simple(host, "codegree_coefficients");
  if (d_max < 0) throw std::invalid_argument("codegree_coefficients: d_max < 0");
  CoefficientVector out;
  out.k = host.k;
  out.n = host.n;
  const Rational weight(int_pow(BigInt(host.k - 1), host.n));
  // On a cap violation, back off to the largest d the enumeration can finish
  // so callers still get every coefficient below the cap.
  for (int bound = d_max; bound >= 0; --bound) {
    try {
      out.c = convolve(class_sums(host, bound), weight);
      out.valid_through = bound;
      return out;
    } catch (const CapExceeded&) {
      if (bound == 0) throw;
    }
  }
  return out;  // unreachable
}

Rational codegree_direct_sum(const MultiHypergraph& host, int d) {
  require_simple(host, "codegree_direct_sum");
  if (d < 0) throw std::invalid_argument("codegree_direct_sum: d < 0");
  if (d == 0) return Rational(1);
  const Rational minusLambda(-int_pow(BigInt(host.k - 1), host.n));

  // Connected classes that occur in the host, by edge count; representatives
  // only — occurrence counts are recomputed from the definition below.
  auto tallies = connected_infragraph_tally(host, d);
  struct ClassRep {
    MultiHypergraph rep;  // relabeled to its own active vertices
    int edges = 0;
  };
  std::vector<ClassRep> classes;
  for (int j = 1; j <= d; ++j)
    for (const auto& [key, tally] : tallies[static_cast<std::size_t>(j)])
      classes.push_back({drop_isolated(tally.representative), j});

  // Every multiset of connected classes with edge counts summing to d gives
  // one Veblen class H; its term is (-lambda)^{components} * C_H * (#H).
  Rational total(0);
  std::vector<int> take(classes.size(), 0);
  auto place = [&](auto&& self, std::size_t at, int left) -> void {
    if (left == 0) {
      MultiHypergraph uni;
      uni.k = host.k;
      uni.n = 0;
      int comps = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        for (int c = 0; c < take[i]; ++c) {
          const MultiHypergraph& part = classes[i].rep;
          for (std::size_t e = 0; e < part.edges.size(); ++e) {
            Edge shifted = part.edges[e];
            for (int& v : shifted) v += uni.n;
            uni.edges.push_back(std::move(shifted));
            uni.mult.push_back(part.mult[e]);
          }
          uni.n += part.n;
          ++comps;
        }
      }
      std::vector<std::pair<Edge, std::int64_t>> raw;
      for (std::size_t e = 0; e < uni.edges.size(); ++e) raw.emplace_back(uni.edges[e], uni.mult[e]);
      MultiHypergraph h = make_hypergraph(uni.k, uni.n, std::move(raw));
      total += rational_pow(minusLambda, comps) * associated_coefficient(h) * occurrence_count(host, h);
      return;
    }
    if (at == classes.size()) return;
    const int step = classes[at].edges;
    for (int c = 0; c * step <= left; ++c) {
      take[at] = c;
      self(self, at + 1, left - c * step);
    }
    take[at] = 0;
  };
  place(place, 0, d);
  return total;
}

Rational harary_sachs_2graph(const MultiHypergraph& host, int d) {
  if (host.k != 2) throw std::invalid_argument("harary_sachs_2graph: host must be a 2-graph");
  require_simple(host, "harary_sachs_2graph");
  const std::size_t m = host.edges.size();
  if (m > 24) throw CapExceeded("harary_sachs_2graph: more than 24 edges");

  BigInt sum = 0;
  std::vector<std::size_t> chosen;
  std::vector<int> deg(static_cast<std::size_t>(host.n) + 1, 0);
  auto leaf = [&]() {
    // Components of the chosen edge set; elementary means every component is
    // a single edge or a cycle (#edges == #vertices).
    std::vector<int> parent(static_cast<std::size_t>(host.n) + 1);
    for (int v = 0; v <= host.n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (std::size_t i : chosen) {
      int a = find(host.edges[i][0]), b = find(host.edges[i][1]);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::map<int, std::pair<int, int>> comp;  // root -> (#vertices, #edges)
    for (int v = 1; v <= host.n; ++v)
      if (deg[static_cast<std::size_t>(v)] > 0) comp[find(v)].first++;
    for (std::size_t i : chosen) comp[find(host.edges[i][0])].second++;
    int verts = 0, cycles = 0;
    for (const auto& [root, ve] : comp) {
      if (ve.second == ve.first)
        ++cycles;  // connected with #edges == #vertices
      else if (ve.second != 1)
        return;  // a path or denser non-cycle piece: not elementary
      verts += ve.first;
    }
    if (verts != d) return;
    BigInt term = int_pow(BigInt(2), cycles);
    if (comp.size() % 2 != 0) term = -term;
    sum += term;
  };
  auto visit = [&](auto&& self, std::size_t next) -> void {
    leaf();
    for (std::size_t i = next; i < m; ++i) {
      int a = host.edges[i][0], b = host.edges[i][1];
      if (deg[static_cast<std::size_t>(a)] >= 2 || deg[static_cast<std::size_t>(b)] >= 2) continue;
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      --deg[static_cast<std::size_t>(a)];
      --deg[static_cast<std::size_t>(b)];
    }
  };
  if (d == 0) return Rational(1);
  visit(visit, 0);
  return Rational(sum);
}

Rational threshold_f(const MultiHypergraph& host, int v, int d) {
  if (d < 0) throw std::invalid_argument("threshold_f: d < 0");
  ThresholdReport rep = threshold_search(host, v, d);
  return rep.values[static_cast<std::size_t>(d)];
}

ThresholdReport threshold_search(const MultiHypergraph& host, int v, int d_max) {
  require_simple(host, "threshold_search");
  if (v < 0) throw std::invalid_argument("threshold_search: v < 0");
  if (d_max < 0) throw std::invalid_argument("threshold_search: d_max < 0");
  ThresholdReport rep;
  rep.v = v;
  rep.d_max = d_max;
  const Rational weight(int_pow(BigInt(host.k - 1), v));
  rep.values = convolve(class_sums(host, d_max), weight);
  for (int d = d_max; d >= 0; --d) {
    if (rep.values[static_cast<std::size_t>(d)] != 0) {
      rep.largest_nonzero = d;
      break;
    }
  }
  return rep;
}

}  // namespace veblen
