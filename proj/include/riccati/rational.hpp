#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace riccati {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0, or just "p" when q == 1.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

double rational_to_double(const Rational& q);

// n = square * square_free with square_free square-free; n > 0.
struct SquareFreeSplit {
  BigInt root;        // sqrt of the square part
  BigInt square_free;
};
SquareFreeSplit square_free_split(const BigInt& n);

bool is_square_free(const BigInt& n);

// q = coeff^2 * radicand, radicand square-free; radicand == 1 means sqrt(q)
// is rational. Requires q > 0.
struct SqrtDecomposition {
  Rational coeff;
  BigInt radicand;
};
SqrtDecomposition sqrt_decompose(const Rational& q);

// Number of bits in numerator plus denominator; used for growth caps.
long rational_bits(const Rational& q);

}  // namespace riccati
