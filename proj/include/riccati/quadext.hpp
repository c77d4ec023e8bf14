#pragma once

#include "riccati/rational.hpp"

#include <string>

namespace riccati {

// Element rat + irr*sqrt(radicand) of the real quadratic field Q(sqrt(d)).
// radicand is square-free and >= 2; values from different fields cannot be
// combined unless one of them is purely rational.
struct QuadExt {
  Rational rat;
  Rational irr;
  BigInt radicand;

  QuadExt(Rational rational_part, Rational irrational_part, BigInt d);

  // Validates square-freeness of d (the plain constructor only checks d >= 2).
  static QuadExt checked(Rational rational_part, Rational irrational_part, BigInt d);

  bool is_rational() const { return irr == 0; }
};

QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
QuadExt operator/(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);

bool operator==(const QuadExt& x, const QuadExt& y);

QuadExt conjugate(const QuadExt& x);
Rational quad_norm(const QuadExt& x);  // rat^2 - irr^2 * d
QuadExt quad_inverse(const QuadExt& x);
QuadExt quad_pow(QuadExt base, unsigned long exp);

// Sign of the real value, decided exactly by squaring case analysis.
int quad_sign(const QuadExt& x);

double quad_to_double(const QuadExt& x);

// "r+c*sqrt(d)" with r omitted when zero; round-trips through parsing.
std::string format_quadext(const QuadExt& x);

}  // namespace riccati
