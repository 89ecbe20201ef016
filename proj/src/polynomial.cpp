#include "veblen/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace veblen {

SparsePolynomial poly_term(const BigInt& c, int exp) {
  SparsePolynomial p;
  if (c != 0) p.coeff[exp] = c;
  return p;
}

int poly_degree(const SparsePolynomial& p) {
  return p.coeff.empty() ? -1 : p.coeff.rbegin()->first;
}

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out = a;
  for (const auto& [e, c] : b.coeff) {
    BigInt& slot = out.coeff[e];
    slot += c;
    if (slot == 0) out.coeff.erase(e);
  }
  return out;
}

SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  for (const auto& [ea, ca] : a.coeff)
    for (const auto& [eb, cb] : b.coeff) {
      BigInt& slot = out.coeff[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.coeff.erase(ea + eb);
    }
  return out;
}

SparsePolynomial poly_pow(const SparsePolynomial& a, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  SparsePolynomial result = poly_term(1, 0);
  SparsePolynomial base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

BigInt codegree_coefficient_of(const SparsePolynomial& p, int d) {
  const int deg = poly_degree(p);
  if (d < 0 || d > deg) throw std::out_of_range("codegree_coefficient_of: d outside 0..deg");
  auto it = p.coeff.find(deg - d);
  return it == p.coeff.end() ? BigInt(0) : it->second;
}

SparsePolynomial expand_phi_rowling() {
  auto from_terms = [](std::initializer_list<std::pair<int, long>> terms) {
    SparsePolynomial p;
    for (const auto& [e, c] : terms) p.coeff[e] = c;
    return p;
  };
  SparsePolynomial phi = poly_term(1, 133);
  phi = poly_mul(phi, poly_pow(from_terms({{3, 1}, {0, -1}}), 27));
  phi = poly_mul(phi, poly_pow(from_terms({{15, 1}, {12, -13}, {9, 65}, {6, -147}, {3, 157}, {0, -64}}), 12));
  phi = poly_mul(phi, poly_pow(from_terms({{6, 1}, {3, -1}, {0, 2}}), 6));
  phi = poly_mul(phi, poly_pow(from_terms({{6, 1}, {3, -17}, {0, 64}}), 3));
  return phi;
}

}  // namespace veblen
