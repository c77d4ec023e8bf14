#include "riccati/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace riccati {

namespace {

BigInt common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.radicand == y.radicand) return x.radicand;
  if (x.irr == 0) return y.radicand;
  if (y.irr == 0) return x.radicand;
  throw std::domain_error("mismatched radicands: sqrt(" + x.radicand.str() +
                          ") vs sqrt(" + y.radicand.str() + ")");
}

}  // namespace

QuadExt::QuadExt(Rational rational_part, Rational irrational_part, BigInt d)
    : rat(std::move(rational_part)), irr(std::move(irrational_part)), radicand(std::move(d)) {
  if (radicand < 2) throw std::domain_error("quadratic radicand must be >= 2");
}

QuadExt QuadExt::checked(Rational rational_part, Rational irrational_part, BigInt d) {
  if (d < 2 || !is_square_free(d))
    throw std::domain_error("quadratic radicand must be square-free and >= 2");
  return QuadExt(std::move(rational_part), std::move(irrational_part), std::move(d));
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.rat + y.rat, x.irr + y.irr, common_radicand(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.rat - y.rat, x.irr - y.irr, common_radicand(x, y));
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const BigInt d = common_radicand(x, y);
  return QuadExt(x.rat * y.rat + x.irr * y.irr * Rational(d),
                 x.rat * y.irr + x.irr * y.rat, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  const BigInt d = common_radicand(x, y);
  const Rational n = quad_norm(QuadExt(y.rat, y.irr, d));
  if (n == 0) throw std::domain_error("quadratic division by zero");
  // x / y = x * conj(y) / norm(y)
  const QuadExt num = x * QuadExt(y.rat, -y.irr, d);
  return QuadExt(num.rat / n, num.irr / n, d);
}

QuadExt operator-(const QuadExt& x) { return QuadExt(-x.rat, -x.irr, x.radicand); }

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.irr == 0 && y.irr == 0) return x.rat == y.rat;
  return x.rat == y.rat && x.irr == y.irr && x.radicand == y.radicand;
}

QuadExt conjugate(const QuadExt& x) { return QuadExt(x.rat, -x.irr, x.radicand); }

Rational quad_norm(const QuadExt& x) {
  return x.rat * x.rat - x.irr * x.irr * Rational(x.radicand);
}

QuadExt quad_inverse(const QuadExt& x) {
  const Rational n = quad_norm(x);
  if (n == 0) throw std::domain_error("quadratic inverse of zero");
  return QuadExt(x.rat / n, -x.irr / n, x.radicand);
}

QuadExt quad_pow(QuadExt base, unsigned long exp) {
  QuadExt result(1, 0, base.radicand);
  while (exp > 0) {
    if (exp & 1UL) result = result * base;
    base = base * base;
    exp >>= 1UL;
  }
  return result;
}

int quad_sign(const QuadExt& x) {
  const int sr = x.rat == 0 ? 0 : (x.rat > 0 ? 1 : -1);
  const int si = x.irr == 0 ? 0 : (x.irr > 0 ? 1 : -1);
  if (si == 0) return sr;
  if (sr == 0 || sr == si) return si;
  // Opposite signs: compare rat^2 against irr^2 * d.
  const Rational lhs = x.rat * x.rat;
  const Rational rhs = x.irr * x.irr * Rational(x.radicand);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sr : si;
}

double quad_to_double(const QuadExt& x) {
  return rational_to_double(x.rat) +
         rational_to_double(x.irr) * std::sqrt(x.radicand.convert_to<double>());
}

std::string format_quadext(const QuadExt& x) {
  if (x.irr == 0) return format_rational(x.rat);
  std::string out;
  if (x.rat != 0) out += format_rational(x.rat);
  out += x.irr > 0 ? (x.rat != 0 ? "+" : "") : "-";
  const Rational mag = abs(x.irr);
  if (mag != 1) out += format_rational(mag) + "*";
  out += "sqrt(" + x.radicand.str() + ")";
  return out;
}

}  // namespace riccati
