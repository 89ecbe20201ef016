#pragma once

#include <map>

#include "veblen/exact.hpp"

namespace veblen {

// Univariate polynomial with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
struct SparsePolynomial {
  std::map<int, BigInt> coeff;  // exponent -> coefficient, all nonzero

  bool operator==(const SparsePolynomial& o) const = default;
};

SparsePolynomial poly_term(const BigInt& c, int exp);
int poly_degree(const SparsePolynomial& p);  // -1 for the zero polynomial

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_pow(const SparsePolynomial& a, int e);  // repeated squaring

// Coefficient of x^{deg(p) - d}; throws std::out_of_range unless 0 <= d <= deg(p).
BigInt codegree_coefficient_of(const SparsePolynomial& p, int d);

// Characteristic polynomial of the 5-edge example host in factored form,
// expanded exactly:
//   x^133 (x^3-1)^27 (x^15-13x^12+65x^9-147x^6+157x^3-64)^12
//         (x^6-x^3+2)^6 (x^6-17x^3+64)^3
// Degree 448 = 7 * 2^6; an independent oracle for the assembled coefficients.
SparsePolynomial expand_phi_rowling();

}  // namespace veblen
