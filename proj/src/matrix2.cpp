#include "riccati/matrix2.hpp"

#include <cmath>
#include <stdexcept>

namespace riccati {

Matrix2 Matrix2::identity(bool float_mode) {
  if (float_mode) return {Scalar(1.0), Scalar(0.0), Scalar(0.0), Scalar(1.0)};
  return {Scalar::integer(1), Scalar::integer(0), Scalar::integer(0), Scalar::integer(1)};
}

std::string Matrix2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

bool operator==(const Matrix2& x, const Matrix2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool projectively_equal(const Matrix2& x, const Matrix2& y) {
  // Cross-ratios of all entry pairs must agree: x = alpha*y.
  const Scalar* xs[4] = {&x.a, &x.b, &x.c, &x.d};
  const Scalar* ys[4] = {&y.a, &y.b, &y.c, &y.d};
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    if (!ys[i]->is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;
  if (xs[pivot]->is_zero()) return false;
  for (int i = 0; i < 4; ++i) {
    if (i == pivot) continue;
    if (!(*xs[i] * *ys[pivot] == *xs[pivot] * *ys[i])) return false;
  }
  return true;
}

Matrix2 inverse(const Matrix2& m) {
  const Scalar det = m.det();
  if (det.is_zero()) throw std::domain_error("singular matrix has no inverse");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

const Scalar& MobiusValue::value() const {
  if (pole_) throw std::logic_error("value() on a pole");
  return value_;
}

MobiusValue apply(const Matrix2& m, const Scalar& x) {
  if (m.is_float() != x.is_float())
    throw std::domain_error("matrix and argument must share the numeric mode");
  const Scalar cx = m.c * x;
  const Scalar den = cx + m.d;
  if (m.is_float()) {
    const double scale = std::max({std::fabs(cx.real()), std::fabs(m.d.real()), 1.0});
    if (nearly_zero(den.real(), scale)) return MobiusValue::pole();
  } else if (den.sign() == 0) {
    return MobiusValue::pole();
  }
  return MobiusValue::finite((m.a * x + m.b) / den);
}

Matrix2 power_iterative(const Matrix2& m, long n) {
  if (n < 0) throw std::domain_error("negative matrix power");
  Matrix2 acc = m.identity_like();
  for (long i = 0; i < n; ++i) acc = acc * m;
  return acc;
}

namespace {

// Divided power sums u_n = (l1^n - l2^n) / (l1 - l2) for the roots of
// X^2 - T X + D, via u_{n+1} = T u_n - D u_{n-1}. Valid for any discriminant.
void power_sums_recurrence(const Scalar& t, const Scalar& d, long n, Scalar& u_prev,
                           Scalar& u_n) {
  u_prev = t.zero_like();  // u_0
  u_n = t.one_like();      // u_1
  for (long i = 1; i < n; ++i) {
    const Scalar next = t * u_n - d * u_prev;
    u_prev = u_n;
    u_n = next;
  }
}

Scalar constant_like(long v, const Scalar& like) {
  return like.is_float() ? Scalar(static_cast<double>(v)) : Scalar::integer(v);
}

}  // namespace

Matrix2 power_closed_form(const Matrix2& m, long n) {
  if (n < 0) throw std::domain_error("negative matrix power");
  if (n == 0) return m.identity_like();
  if (n == 1) return m;

  const Scalar t = m.trace();
  const Scalar d = m.det();
  Scalar u_prev, u_n;

  const Scalar disc = t * t - constant_like(4, t) * d;

  bool used_roots = false;
  if (!m.is_float() && t.is_rational() && d.is_rational() && disc.sign() >= 0) {
    // Eigenvalue route: l1,2 = (T +- s*sqrt(r)) / 2 in Q(sqrt(r)).
    const Scalar root = scalar_sqrt(disc);  // s*sqrt(r), possibly rational
    const Scalar two = Scalar::integer(2);
    const Scalar l1 = (t + root) / two;
    const Scalar l2 = (t - root) / two;
    if (!(l1 == l2)) {
      const Scalar diff = l1 - l2;
      u_n = (pow(l1, n) - pow(l2, n)) / diff;
      u_prev = (pow(l1, n - 1) - pow(l2, n - 1)) / diff;
      used_roots = true;
    } else {
      // Double root l = T/2: M^n = l^(n-1) * (n*M + l*(1-n)*I).
      const Scalar l = t / two;
      const Scalar ln1 = pow(l, n - 1);
      u_n = ln1 * Scalar::integer(n);
      u_prev = n >= 2 ? pow(l, n - 2) * Scalar::integer(n - 1) : t.one_like();
      used_roots = true;
    }
  }
  if (!used_roots) power_sums_recurrence(t, d, n, u_prev, u_n);

  // M^n = u_n * M - D * u_{n-1} * I.
  const Scalar k = d * u_prev;
  return {u_n * m.a - k, u_n * m.b, u_n * m.c, u_n * m.d - k};
}

}  // namespace riccati
