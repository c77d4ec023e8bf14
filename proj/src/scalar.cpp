#include "riccati/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace riccati {

namespace {

[[noreturn]] void throw_mixed() {
  throw std::domain_error("mixed exact/float arithmetic is not allowed");
}

QuadExt promote(const Rational& q, const BigInt& radicand) {
  return QuadExt(q, 0, radicand);
}

template <typename Op>
Scalar binop(const Scalar& x, const Scalar& y, Op op) {
  if (x.is_float() != y.is_float()) throw_mixed();
  if (x.is_float()) return Scalar(op(x.real(), y.real()));
  if (x.is_rational() && y.is_rational()) return Scalar(op(x.rational(), y.rational()));
  if (x.is_quadratic() && y.is_quadratic()) return Scalar(op(x.quadratic(), y.quadratic()));
  if (x.is_rational())
    return Scalar(op(promote(x.rational(), y.quadratic().radicand), y.quadratic()));
  return Scalar(op(x.quadratic(), promote(y.rational(), x.quadratic().radicand)));
}

std::string format_double(double f) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", f);
  return buf;
}

}  // namespace

void Scalar::assign(const QuadExt& x) {
  if (x.irr == 0)
    v_ = x.rat;
  else
    v_ = x;
}

double Scalar::to_double() const {
  if (is_rational()) return rational_to_double(rational());
  if (is_quadratic()) return quad_to_double(quadratic());
  return real();
}

int Scalar::sign() const {
  if (is_rational()) return rational() == 0 ? 0 : (rational() > 0 ? 1 : -1);
  if (is_quadratic()) return quad_sign(quadratic());
  return real() == 0.0 ? 0 : (real() > 0 ? 1 : -1);
}

bool Scalar::is_zero() const {
  if (is_float()) return nearly_zero(real(), 1.0);
  return sign() == 0;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return binop(x, y, [](const auto& a, const auto& b) { return a + b; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return binop(x, y, [](const auto& a, const auto& b) { return a - b; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return binop(x, y, [](const auto& a, const auto& b) { return a * b; });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_exact() && y.sign() == 0) throw std::domain_error("scalar division by zero");
  return binop(x, y, [](const auto& a, const auto& b) { return a / b; });
}

Scalar operator-(const Scalar& x) {
  if (x.is_rational()) return Scalar(Rational(-x.rational()));
  if (x.is_quadratic()) return Scalar(-x.quadratic());
  return Scalar(-x.real());
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_float() != y.is_float()) throw_mixed();
  if (x.is_float()) return x.real() == y.real();
  if (x.is_rational() && y.is_rational()) return x.rational() == y.rational();
  // A quadratic value with nonzero irrational part is irrational, so it can
  // never equal a rational; across distinct square-free radicands the
  // components must match exactly.
  if (x.is_rational() || y.is_rational()) return false;
  return x.quadratic() == y.quadratic();
}

int compare(const Scalar& x, const Scalar& y) {
  if (x.is_float() != y.is_float()) throw_mixed();
  if (x.is_float()) {
    if (x.real() == y.real()) return 0;
    return x.real() < y.real() ? -1 : 1;
  }
  return (x - y).sign();
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& base, long exp) {
  if (exp < 0) return base.one_like() / pow(base, -exp);
  Scalar result = base.one_like();
  Scalar acc = base;
  long e = exp;
  while (e > 0) {
    if (e & 1L) result = result * acc;
    acc = acc * acc;
    e >>= 1L;
  }
  return result;
}

Scalar scalar_sqrt(const Scalar& q) {
  if (q.is_float()) {
    if (q.real() < 0) throw std::domain_error("sqrt of negative value");
    return Scalar(std::sqrt(q.real()));
  }
  if (!q.is_rational())
    throw std::domain_error("sqrt of a quadratic value would leave the field");
  const SqrtDecomposition dec = sqrt_decompose(q.rational());
  if (dec.radicand == 1) return Scalar(dec.coeff);
  return Scalar(QuadExt(0, dec.coeff, dec.radicand));
}

bool nearly_zero(double x, double scale) {
  return std::fabs(x) <= kFloatZeroTolerance * std::max(scale, 1.0);
}

std::string Scalar::str() const {
  if (is_rational()) return format_rational(rational());
  if (is_quadratic()) return format_quadext(quadratic());
  return format_double(real());
}

Scalar Scalar::parse(const std::string& text, bool float_mode) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  const auto sqrt_pos = text.find("sqrt(");
  if (sqrt_pos != std::string::npos) {
    if (float_mode) throw std::invalid_argument("quadratic literals require exact mode");
    const auto close = text.find(')', sqrt_pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated sqrt()");
    const BigInt d(text.substr(sqrt_pos + 5, close - sqrt_pos - 5));
    std::string head = text.substr(0, sqrt_pos);
    // head is "", "-", "rat+", "rat-", "coeff*", "rat+coeff*", "rat-coeff*".
    Rational rat = 0;
    Rational coeff = 1;
    int coeff_sign = 1;
    if (!head.empty() && head.back() == '*') head.pop_back();
    std::size_t split = head.npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
        split = i;
        break;
      }
    }
    if (head.empty()) {
      // bare sqrt(d)
    } else if (head == "-") {
      coeff_sign = -1;
    } else if (split == head.npos) {
      coeff = parse_rational(head);
    } else {
      rat = parse_rational(head.substr(0, split));
      coeff_sign = head[split] == '-' ? -1 : 1;
      const std::string tail = head.substr(split + 1);
      coeff = tail.empty() ? Rational(1) : parse_rational(tail);
    }
    return Scalar(QuadExt::checked(rat, coeff_sign * coeff, d));
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos || text == "inf" || text == "-inf") {
    return Scalar(std::stod(text));
  }
  const Rational q = parse_rational(text);
  if (float_mode) return Scalar(rational_to_double(q));
  return Scalar(q);
}

}  // namespace riccati
