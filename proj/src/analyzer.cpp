#include "riccati/analyzer.hpp"

#include "riccati/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace riccati {

namespace {

Scalar constant_like(long v, const Scalar& like) {
  return like.is_float() ? Scalar(static_cast<double>(v)) : Scalar::integer(v);
}

// Mode-aware equality: exact values compare exactly, floats with a relative
// tolerance.
bool same_value(const Scalar& x, const Scalar& y) {
  if (x.is_float() && y.is_float()) {
    const double scale = std::max({std::fabs(x.real()), std::fabs(y.real()), 1.0});
    return nearly_zero(x.real() - y.real(), scale);
  }
  return x == y;
}

bool matrix_c_zero(const Matrix2& m) {
  if (!m.is_float()) return m.c.sign() == 0;
  const double scale = std::max({std::fabs(m.a.real()), std::fabs(m.b.real()),
                                 std::fabs(m.c.real()), std::fabs(m.d.real()), 1.0});
  return nearly_zero(m.c.real(), scale);
}

}  // namespace

std::vector<Matrix2> reduce(const PeriodicSystem& system) {
  const long k = system.period();
  std::vector<Matrix2> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) {
    Matrix2 acc = Matrix2::identity(system.float_mode());
    // A_{i-1} ... A_0
    for (long j = i - 1; j >= 0; --j) acc = acc * system.matrix(j);
    // ... A_{k-1} ... A_i
    for (long j = k - 1; j >= i; --j) acc = acc * system.matrix(j);
    out.push_back(acc);
  }
  return out;
}

CharacteristicData characteristic(const Matrix2& b0) {
  CharacteristicData out;
  out.trace = b0.trace();
  out.det = b0.det();
  out.delta = out.trace * out.trace - constant_like(4, out.trace) * out.det;
  if (out.det.is_zero()) throw std::domain_error("characteristic of a singular matrix");

  const int delta_sign = out.delta.is_float()
                             ? (out.delta.real() > 0 ? 1 : (out.delta.real() < 0 ? -1 : 0))
                             : out.delta.sign();
  if (delta_sign > 0) {
    out.kind = CharacteristicData::RootKind::RealDistinct;
    const Scalar two = constant_like(2, out.trace);
    if (out.delta.is_float()) {
      const double root = std::sqrt(out.delta.real());
      const double t = out.trace.real();
      const double l1 = (t + root) / 2.0;
      const double l2 = (t - root) / 2.0;
      out.lambda = Scalar(std::fabs(l1) >= std::fabs(l2) ? l1 : l2);
      out.mu = Scalar(std::fabs(l1) >= std::fabs(l2) ? l2 : l1);
    } else if (out.delta.is_rational()) {
      const Scalar root = scalar_sqrt(out.delta);
      const Scalar l1 = (out.trace + root) / two;
      const Scalar l2 = (out.trace - root) / two;
      if (compare(abs(l1), abs(l2)) >= 0) {
        out.lambda = l1;
        out.mu = l2;
      } else {
        out.lambda = l2;
        out.mu = l1;
      }
    }
    // A quadratic discriminant would need a nested radical; the root fields
    // stay empty and classification reports the gap.
  } else if (delta_sign == 0) {
    out.kind = CharacteristicData::RootKind::RealDouble;
    out.lambda = out.trace / constant_like(2, out.trace);
  } else {
    out.kind = CharacteristicData::RootKind::ComplexPair;
    out.r_squared = out.det;
    out.cos2_theta = out.trace * out.trace / (constant_like(4, out.trace) * out.det);
  }
  return out;
}

namespace {

ThetaClass theta_heuristic(double trace, double det) {
  const double cosv = std::clamp(trace / (2.0 * std::sqrt(det)), -1.0, 1.0);
  const double x = std::acos(cosv) / std::acos(-1.0);  // theta/pi in (0,1)
  // Continued fraction of x; a huge partial quotient means an earlier
  // convergent already nailed the value.
  double frac = x;
  long long p_prev = 1, q_prev = 0, p = 0, q = 1;  // convergents of [0; a1, a2, ...]
  for (int depth = 0; depth < 20; ++depth) {
    if (frac < 1e-12) break;
    const double inv = 1.0 / frac;
    if (inv > 1e9) break;
    const long long a = static_cast<long long>(std::floor(inv));
    const long long pn = a * p + p_prev;
    const long long qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    if (q > 1000000) return {ThetaClass::Kind::HeuristicIrrational, 0};
    if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) < 1e-10 && q >= 2)
      return {ThetaClass::Kind::HeuristicFiniteOrder, q};
    frac = inv - static_cast<double>(a);
  }
  if (q >= 2 && std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) < 1e-10)
    return {ThetaClass::Kind::HeuristicFiniteOrder, q};
  return {ThetaClass::Kind::HeuristicIrrational, 0};
}

}  // namespace

ThetaClass theta_rationality(const Scalar& trace, const Scalar& det) {
  const Scalar delta = trace * trace - constant_like(4, trace) * det;
  const int ds = delta.is_float() ? (delta.real() < 0 ? -1 : 1) : delta.sign();
  if (ds >= 0) throw std::domain_error("rotation analysis needs a negative discriminant");
  if (trace.is_zero()) throw std::domain_error("trace zero is the plain 2-periodic case");

  if (trace.is_rational() && det.is_rational()) {
    // theta in pi*Q forces cos(2*theta) = trace^2/(2*det) - 1 into
    // {0, +-1/2, +-1}; with 0 < trace^2 < 4*det that leaves trace^2/det in
    // {1, 2, 3}, i.e. theta in {pi/3, 2pi/3}, {pi/4, 3pi/4}, {pi/6, 5pi/6}.
    const Rational ratio = trace.rational() * trace.rational() / det.rational();
    if (ratio == 1) return {ThetaClass::Kind::FiniteOrder, 3};
    if (ratio == 2) return {ThetaClass::Kind::FiniteOrder, 4};
    if (ratio == 3) return {ThetaClass::Kind::FiniteOrder, 6};
    return {ThetaClass::Kind::Irrational, 0};
  }
  return theta_heuristic(trace.to_double(), det.to_double());
}

namespace {

// Walks the poles of m^n for n = 1, 2, ...; calls sink(n, pole_of_m_to_n) for
// every n whose power has one. sink returns false to stop. Stops on its own
// when m^n becomes a scalar multiple of the identity (the pole pattern then
// repeats) or at a hard scan cap.
void scan_power_poles(const Matrix2& m, long quota,
                      const std::function<bool(long, const Scalar&)>& sink) {
  if (matrix_c_zero(m)) return;
  const long cap = std::max<long>(64, 8 * quota + 16);
  Matrix2 pow = m;
  for (long n = 1; n <= cap; ++n) {
    if (!matrix_c_zero(pow)) {
      if (!sink(n, -pow.d / pow.c)) return;
    } else if (projectively_equal(pow, m.identity_like())) {
      return;
    }
    pow = pow * m;
  }
}

FamilyKind family_kind_of(const Matrix2& m) {
  if (matrix_c_zero(m)) return FamilyKind::Empty;
  const Scalar t = m.trace();
  const Scalar delta = t * t - constant_like(4, t) * m.det();
  return delta.is_zero() ? FamilyKind::DoubleRoot : FamilyKind::DistinctRoots;
}

bool family_contains(const std::vector<ForbiddenPoint>& points, const Scalar& value) {
  for (const ForbiddenPoint& p : points)
    if (same_value(p.point, value)) return true;
  return false;
}

}  // namespace

ForbiddenSetDescription autonomous_forbidden(const Matrix2& m, long depth) {
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  ForbiddenSetDescription out;
  ForbiddenFamily family;
  family.branch = 0;
  family.transform = m.identity_like();
  family.kind = family_kind_of(m);
  scan_power_poles(m, depth, [&](long n, const Scalar& point) {
    if (!family_contains(family.points, point))
      family.points.push_back({point, n, n});
    return static_cast<long>(family.points.size()) < depth;
  });
  out.families.push_back(std::move(family));
  return out;
}

ForbiddenSetDescription forbidden_set(const PeriodicSystem& system, long depth) {
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  const long k = system.period();
  const std::vector<Matrix2> bs = reduce(system);
  ForbiddenSetDescription out;

  for (long i = 0; i + 1 < k; ++i) {
    // x_0 with x_i = -d_i/c_i; the step from x_i to x_{i+1} divides by zero.
    const CoefficientRow& r = system.row(i);
    const Matrix2 back = inverse(partial_product(system, i));
    const MobiusValue pre = apply(back, -r.d / r.c);
    if (pre.is_finite() && !family_contains(out.prefix, pre.value()))
      out.prefix.push_back({pre.value(), i + 1, 0});
  }

  for (long i = 0; i < k; ++i) {
    ForbiddenFamily family;
    family.branch = i;
    family.transform = inverse(partial_product(system, i));
    family.kind = family_kind_of(bs[static_cast<std::size_t>(i)]);
    scan_power_poles(bs[static_cast<std::size_t>(i)], depth,
                     [&](long n, const Scalar& point) {
                       const MobiusValue pre = apply(family.transform, point);
                       if (pre.is_finite() && !family_contains(family.points, pre.value()))
                         family.points.push_back({pre.value(), n * k + i, n});
                       return static_cast<long>(family.points.size()) < depth;
                     });
    out.families.push_back(std::move(family));
  }
  return out;
}

std::vector<ForbiddenPoint> ForbiddenSetDescription::flatten() const {
  std::vector<ForbiddenPoint> merged;
  auto add = [&](const ForbiddenPoint& p) {
    for (ForbiddenPoint& q : merged) {
      if (same_value(q.point, p.point)) {
        if (p.pole_step < q.pole_step) q = p;
        return;
      }
    }
    merged.push_back(p);
  };
  for (const ForbiddenPoint& p : prefix) add(p);
  for (const ForbiddenFamily& f : families)
    for (const ForbiddenPoint& p : f.points) add(p);
  std::stable_sort(merged.begin(), merged.end(),
                   [](const ForbiddenPoint& x, const ForbiddenPoint& y) {
                     if (x.pole_step != y.pole_step) return x.pole_step < y.pole_step;
                     return x.point.to_double() < y.point.to_double();
                   });
  return merged;
}

const char* behavior_kind_name(BehaviorClass::Kind kind) {
  switch (kind) {
    case BehaviorClass::Kind::PeriodicAll: return "periodic_all";
    case BehaviorClass::Kind::AttractingFixedPoint: return "attracting_fixed_point";
    case BehaviorClass::Kind::AttractingCycle: return "attracting_cycle";
    case BehaviorClass::Kind::UnstableAttractorPoint: return "unstable_attractor_point";
    case BehaviorClass::Kind::UnstableAttractorCycle: return "unstable_attractor_cycle";
    case BehaviorClass::Kind::PeriodicAllRotation: return "periodic_all_rotation";
    case BehaviorClass::Kind::DenseOrbits: return "dense_orbits";
    case BehaviorClass::Kind::Oscillating: return "oscillating";
    case BehaviorClass::Kind::NotCoveredByPaper: return "not_covered";
  }
  return "unknown";
}

namespace {

void add_excluded(std::vector<Scalar>& excluded, const Scalar& value) {
  for (const Scalar& e : excluded)
    if (same_value(e, value)) return;
  excluded.push_back(value);
}

}  // namespace

BehaviorClass classify(const PeriodicSystem& system) {
  const long k = system.period();
  const std::vector<Matrix2> bs = reduce(system);
  const CharacteristicData ch = characteristic(bs.front());

  BehaviorClass out;
  if (ch.trace.is_zero()) {
    out.kind = BehaviorClass::Kind::PeriodicAll;
    out.period = 2 * k;
    return out;
  }

  std::vector<long> zero_c;
  for (long i = 0; i < k; ++i)
    if (matrix_c_zero(bs[static_cast<std::size_t>(i)])) zero_c.push_back(i);

  if (!zero_c.empty()) {
    if (system.b_identically_zero()) return classify_b0(normalize_b0(system));
    out.kind = BehaviorClass::Kind::NotCoveredByPaper;
    out.reason = "reduced map " + std::to_string(zero_c.front()) +
                 " is affine (zero lower-left entry) while b is not identically zero";
    return out;
  }

  switch (ch.kind) {
    case CharacteristicData::RootKind::RealDistinct: {
      if (!ch.lambda.has_value()) {
        out.kind = BehaviorClass::Kind::NotCoveredByPaper;
        out.reason = "eigenvalues lie outside the coefficient field (nested radical)";
        return out;
      }
      std::vector<Scalar> rho;
      for (long i = 0; i < k; ++i) {
        const Matrix2& b = bs[static_cast<std::size_t>(i)];
        rho.push_back((*ch.lambda - b.d) / b.c);
      }
      bool all_equal = true;
      for (long i = 1; i < k; ++i)
        if (!same_value(rho[static_cast<std::size_t>(i)], rho.front())) all_equal = false;
      for (long i = 0; i < k; ++i) {
        const Matrix2& b = bs[static_cast<std::size_t>(i)];
        const Scalar mu_point = (*ch.mu - b.d) / b.c;
        const MobiusValue pre = apply(inverse(partial_product(system, i)), mu_point);
        if (pre.is_finite()) add_excluded(out.excluded, pre.value());
      }
      out.stable = true;
      if (all_equal) {
        out.kind = BehaviorClass::Kind::AttractingFixedPoint;
        out.fixed_point = rho.front();
      } else {
        out.kind = BehaviorClass::Kind::AttractingCycle;
        out.cycle = std::move(rho);
      }
      return out;
    }
    case CharacteristicData::RootKind::RealDouble: {
      std::vector<Scalar> rho;
      for (long i = 0; i < k; ++i) {
        const Matrix2& b = bs[static_cast<std::size_t>(i)];
        rho.push_back((b.a - b.d) / (constant_like(2, b.a) * b.c));
      }
      bool all_equal = true;
      for (long i = 1; i < k; ++i)
        if (!same_value(rho[static_cast<std::size_t>(i)], rho.front())) all_equal = false;
      out.stable = false;
      if (all_equal) {
        out.kind = BehaviorClass::Kind::UnstableAttractorPoint;
        out.fixed_point = rho.front();
      } else {
        out.kind = BehaviorClass::Kind::UnstableAttractorCycle;
        out.cycle = std::move(rho);
      }
      return out;
    }
    case CharacteristicData::RootKind::ComplexPair: {
      const ThetaClass theta = theta_rationality(ch.trace, ch.det);
      out.heuristic_rotation = theta.heuristic();
      if (theta.finite_order()) {
        out.kind = BehaviorClass::Kind::PeriodicAllRotation;
        out.period = k * theta.q;
      } else {
        out.kind = BehaviorClass::Kind::DenseOrbits;
      }
      return out;
    }
  }
  out.kind = BehaviorClass::Kind::NotCoveredByPaper;
  out.reason = "unreachable";
  return out;
}

}  // namespace riccati
