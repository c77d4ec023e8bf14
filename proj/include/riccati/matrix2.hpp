#pragma once

#include "riccati/scalar.hpp"

#include <string>

namespace riccati {

// Invertible 2x2 matrix [[a,b],[c,d]] acting as the linear-fractional map
// x -> (a*x + b) / (c*x + d).
struct Matrix2 {
  Scalar a, b, c, d;

  Scalar trace() const { return a + d; }
  Scalar det() const { return a * d - b * c; }
  bool is_float() const { return a.is_float(); }

  static Matrix2 identity(bool float_mode = false);
  Matrix2 identity_like() const { return identity(is_float()); }

  std::string str() const;
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
bool operator==(const Matrix2& x, const Matrix2& y);

// True when the two matrices induce the same map, i.e. differ by a nonzero
// scalar factor.
bool projectively_equal(const Matrix2& x, const Matrix2& y);

// Adjugate over determinant, so det(inverse(m)) == 1/det(m). Throws on
// singular input.
Matrix2 inverse(const Matrix2& m);

// Result of a Mobius application: a finite value or the pole marker hit when
// the denominator c*x + d vanishes.
class MobiusValue {
 public:
  static MobiusValue finite(Scalar v) { return MobiusValue(std::move(v), false); }
  static MobiusValue pole() { return MobiusValue(Scalar(), true); }

  bool is_pole() const { return pole_; }
  bool is_finite() const { return !pole_; }
  const Scalar& value() const;

 private:
  MobiusValue(Scalar v, bool pole) : value_(std::move(v)), pole_(pole) {}
  Scalar value_;
  bool pole_;
};

// f_M(x). Exact zero test for the denominator in exact mode; in float mode a
// scale-aware tolerance |c*x+d| <= 1e-12 * max(|c*x|, |d|, 1).
MobiusValue apply(const Matrix2& m, const Scalar& x);

// M^n by repeated multiplication; n >= 0.
Matrix2 power_iterative(const Matrix2& m, long n);

// M^n through the characteristic roots: for discriminant >= 0 (with rational
// trace and determinant) via the eigenvalue formula in Q(sqrt(d)), otherwise
// via the trace/determinant linear recurrence, which stays in the ground
// field. Agrees with power_iterative exactly.
Matrix2 power_closed_form(const Matrix2& m, long n);

}  // namespace riccati
