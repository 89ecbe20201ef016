#include "veblen/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace veblen {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, int r) {
  if (r < 0) return 0;
  BigInt num = 1;
  for (int i = 0; i < r; ++i) num *= n - i;
  return exact_div(num, factorial(r));
}

BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt r = 1, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div: zero divisor");
  BigInt q = num / den;
  if (q * den != num) throw std::logic_error("exact_div: inexact division");
  return q;
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

MultiHypergraph make_hypergraph(int k, int n,
                                std::vector<std::pair<Edge, std::int64_t>> raw) {
  if (k < 2) throw std::invalid_argument("hypergraph: k must be >= 2");
  if (n < 0) throw std::invalid_argument("hypergraph: n must be >= 0");
  std::map<Edge, std::int64_t> merged;
  for (auto& [e, m] : raw) {
    if ((int)e.size() != k)
      throw std::invalid_argument("hypergraph: edge arity differs from k");
    if (m <= 0) throw std::invalid_argument("hypergraph: multiplicity must be >= 1");
    Edge s = e;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < k; ++i) {
      if (s[i] < 1 || s[i] > n)
        throw std::invalid_argument("hypergraph: vertex label out of range");
      if (i > 0 && s[i] == s[i - 1])
        throw std::invalid_argument("hypergraph: repeated vertex inside an edge");
    }
    merged[s] += m;
  }
  MultiHypergraph h;
  h.k = k;
  h.n = n;
  h.edges.reserve(merged.size());
  h.mult.reserve(merged.size());
  for (auto& [e, m] : merged) {
    h.edges.push_back(e);
    h.mult.push_back(m);
  }
  return h;
}

std::int64_t total_edge_count(const MultiHypergraph& h) {
  return std::accumulate(h.mult.begin(), h.mult.end(), std::int64_t{0});
}

std::vector<std::int64_t> degrees(const MultiHypergraph& h) {
  std::vector<std::int64_t> d(h.n, 0);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) d[v - 1] += h.mult[i];
  return d;
}

std::int64_t degree(const MultiHypergraph& h, int v) {
  if (v < 1 || v > h.n) throw std::invalid_argument("degree: vertex out of range");
  std::int64_t d = 0;
  for (size_t i = 0; i < h.edges.size(); ++i)
    if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), v)) d += h.mult[i];
  return d;
}

MultiHypergraph flatten(const MultiHypergraph& h) {
  MultiHypergraph f = h;
  std::fill(f.mult.begin(), f.mult.end(), 1);
  return f;
}

bool is_veblen(const MultiHypergraph& h) {
  for (auto d : degrees(h))
    if (d % h.k != 0) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MultiHypergraph drop_isolated(const MultiHypergraph& h) {
  std::vector<int> newLabel(h.n + 1, 0);
  int next = 0;
  auto deg = degrees(h);
  for (int v = 1; v <= h.n; ++v)
    if (deg[v - 1] > 0) newLabel[v] = ++next;
  std::vector<std::pair<Edge, std::int64_t>> raw;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    Edge e;
    for (int v : h.edges[i]) e.push_back(newLabel[v]);
    raw.emplace_back(std::move(e), h.mult[i]);
  }
  return make_hypergraph(h.k, next, std::move(raw));
}

std::vector<MultiHypergraph> connected_components(const MultiHypergraph& h) {
  UnionFind uf(h.n + 1);
  for (const auto& e : h.edges)
    for (size_t j = 1; j < e.size(); ++j) uf.unite(e[0], e[j]);

  // Group edge indices by component root, ordered by smallest member vertex.
  std::map<int, std::vector<size_t>> byRoot;
  for (size_t i = 0; i < h.edges.size(); ++i) byRoot[uf.find(h.edges[i][0])].push_back(i);

  std::map<int, int> rootMinVertex;
  for (int v = 1; v <= h.n; ++v) {
    int r = uf.find(v);
    if (!rootMinVertex.count(r)) rootMinVertex[r] = v;
  }

  std::vector<std::pair<int, std::vector<size_t>>> ordered;
  for (auto& [root, idxs] : byRoot) ordered.emplace_back(rootMinVertex[root], idxs);
  std::sort(ordered.begin(), ordered.end());

  std::vector<MultiHypergraph> out;
  for (auto& [minV, idxs] : ordered) {
    std::map<int, int> newLabel;
    for (size_t i : idxs)
      for (int v : h.edges[i]) newLabel.emplace(v, 0);
    int next = 0;
    for (auto& [v, lab] : newLabel) lab = ++next;
    std::vector<std::pair<Edge, std::int64_t>> raw;
    for (size_t i : idxs) {
      Edge e;
      for (int v : h.edges[i]) e.push_back(newLabel[v]);
      raw.emplace_back(std::move(e), h.mult[i]);
    }
    out.push_back(make_hypergraph(h.k, next, std::move(raw)));
  }
  return out;
}

bool is_connected(const MultiHypergraph& h) {
  if (h.edges.empty()) return total_edge_count(h) == 0 && h.n <= 1;
  return connected_components(h).size() == 1;
}

MultiHypergraph relabel(const MultiHypergraph& h, const std::vector<int>& perm) {
  if ((int)perm.size() != h.n + 1)
    throw std::invalid_argument("relabel: permutation size must be n + 1 (index 0 unused)");
  std::vector<std::pair<Edge, std::int64_t>> raw;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    Edge e;
    for (int v : h.edges[i]) e.push_back(perm[v]);
    raw.emplace_back(std::move(e), h.mult[i]);
  }
  return make_hypergraph(h.k, h.n, std::move(raw));
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  std::ostringstream os;
  os << "parse error at line " << line << ", column " << col << ": " << what;
  throw ParseError(os.str());
}

}  // namespace

MultiHypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string lineBuf;
  int lineNo = 0;
  bool haveHeader = false;
  int k = 0, n = 0;
  std::vector<std::pair<Edge, std::int64_t>> raw;

  while (std::getline(in, lineBuf)) {
    ++lineNo;
    std::string_view line{lineBuf};
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;

    if (!haveHeader) {
      // Header: k=<int> n=<int>
      std::istringstream hs{std::string(line)};
      std::string tk, tn;
      hs >> tk >> tn;
      if (tk.rfind("k=", 0) != 0 || tn.rfind("n=", 0) != 0)
        parse_fail(lineNo, (int)first + 1, "expected header 'k=<int> n=<int>'");
      try {
        k = std::stoi(tk.substr(2));
        n = std::stoi(tn.substr(2));
      } catch (const std::exception&) {
        parse_fail(lineNo, (int)first + 1, "header values must be integers");
      }
      std::string extra;
      if (hs >> extra) parse_fail(lineNo, (int)first + 1, "trailing tokens after header");
      haveHeader = true;
      continue;
    }

    std::istringstream es{std::string(line)};
    Edge e;
    std::int64_t m = 1;
    std::string tok;
    while (es >> tok) {
      if (tok[0] == 'x') {
        try {
          m = std::stoll(tok.substr(1));
        } catch (const std::exception&) {
          parse_fail(lineNo, 1, "bad multiplicity token '" + tok + "'");
        }
        std::string extra;
        if (es >> extra) parse_fail(lineNo, 1, "tokens after multiplicity");
        break;
      }
      int v = 0;
      try {
        size_t pos = 0;
        v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        parse_fail(lineNo, 1, "bad vertex token '" + tok + "'");
      }
      if (v < 1 || v > n)
        parse_fail(lineNo, 1, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      e.push_back(v);
    }
    if ((int)e.size() != k)
      parse_fail(lineNo, 1, "edge has " + std::to_string(e.size()) +
                                " vertices, expected " + std::to_string(k));
    raw.emplace_back(std::move(e), m);
  }
  if (!haveHeader) parse_fail(lineNo, 1, "missing header 'k=<int> n=<int>'");
  try {
    return make_hypergraph(k, n, std::move(raw));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("parse error: ") + ex.what());
  }
}

std::string format_hypergraph(const MultiHypergraph& h) {
  std::ostringstream os;
  os << "k=" << h.k << " n=" << h.n << "\n";
  for (size_t i = 0; i < h.edges.size(); ++i) {
    for (size_t j = 0; j < h.edges[i].size(); ++j) {
      if (j) os << ' ';
      os << h.edges[i][j];
    }
    if (h.mult[i] > 1) os << " x" << h.mult[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace veblen
