#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace veblen {

// All kernel arithmetic is exact. No floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an input exceeds a documented feasibility cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed input data (text-format files). Derives from
// invalid_argument so generic handlers still work, but lets the CLI separate
// data errors from usage errors.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigInt factorial(int n);
BigInt binomial(const BigInt& n, int r);
BigInt int_pow(const BigInt& base, int exp);

// Quotient that must be exact; throws std::logic_error on a nonzero remainder.
// Used where a theorem guarantees divisibility, so a remainder means a bug.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Canonical text form: reduced "p/q" with q > 0, plain "p" for integers.
std::string rational_to_string(const Rational& q);

}  // namespace veblen
