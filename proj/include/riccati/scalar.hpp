#pragma once

#include "riccati/quadext.hpp"
#include "riccati/rational.hpp"

#include <string>
#include <variant>

namespace riccati {

// Relative tolerance for pole/zero tests in float mode.
inline constexpr double kFloatZeroTolerance = 1e-12;

// One scalar value: exact rational, exact quadratic-field element, or double.
// Exact and float variants never mix in arithmetic; combining them throws.
// Quadratic values with zero irrational part collapse to the rational variant,
// so equality is canonical across representations.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}
  Scalar(const QuadExt& x) { assign(x); }
  explicit Scalar(double f) : v_(f) {}
  static Scalar integer(long long n) { return Scalar(Rational(n)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_quadratic() const { return std::holds_alternative<QuadExt>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }
  bool is_exact() const { return !is_float(); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadExt& quadratic() const { return std::get<QuadExt>(v_); }
  double real() const { return std::get<double>(v_); }

  double to_double() const;

  int sign() const;
  bool is_zero() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Canonical text form: "p/q", "r+c*sqrt(d)", or a shortest round-trip double.
  std::string str() const;
  static Scalar parse(const std::string& text, bool float_mode);

  // Matching-kind constants (exact 1/0 vs double 1.0/0.0).
  Scalar one_like() const { return is_float() ? Scalar(1.0) : Scalar(Rational(1)); }
  Scalar zero_like() const { return is_float() ? Scalar(0.0) : Scalar(Rational(0)); }

 private:
  void assign(const QuadExt& x);
  std::variant<Rational, QuadExt, double> v_;
};

// Total order on the real embedding: -1, 0, +1. Throws on exact/float mixes
// and on quadratic values from incompatible fields.
int compare(const Scalar& x, const Scalar& y);

Scalar abs(const Scalar& x);
Scalar pow(const Scalar& base, long exp);

// sqrt(q) as a Scalar: coeff*sqrt(radicand), collapsing to a Rational when
// the radicand is 1. Exact input must be a positive rational.
Scalar scalar_sqrt(const Scalar& q);

// |x| <= tol * scale for floats; exact zero otherwise.
bool nearly_zero(double x, double scale);

}  // namespace riccati
