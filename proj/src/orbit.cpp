#include "riccati/orbit.hpp"

#include "riccati/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riccati {

namespace {

bool values_close(const Scalar& x, const Scalar& y, std::optional<double> tolerance) {
  if (tolerance) return std::fabs(x.to_double() - y.to_double()) < *tolerance;
  return x == y;
}

long scalar_bits(const Scalar& s) {
  if (s.is_rational()) return rational_bits(s.rational());
  if (s.is_quadratic())
    return rational_bits(s.quadratic().rat) + rational_bits(s.quadratic().irr);
  return 64;
}

Matrix2 to_float_matrix(const Matrix2& m) {
  if (m.is_float()) return m;
  return {Scalar(m.a.to_double()), Scalar(m.b.to_double()), Scalar(m.c.to_double()),
          Scalar(m.d.to_double())};
}

}  // namespace

OrbitTrace iterate(const PeriodicSystem& system, const Scalar& x0, long steps,
                   const IterateOptions& options) {
  if (steps < 0) throw std::domain_error("steps must be >= 0");
  if (system.float_mode() != x0.is_float())
    throw std::invalid_argument("initial value must match the system's numeric mode");

  OrbitTrace trace;
  trace.x0 = x0;
  trace.values.reserve(static_cast<std::size_t>(steps) + 1);
  trace.values.push_back(x0);

  Scalar x = x0;
  bool floating = x0.is_float();
  for (long n = 0; n < steps; ++n) {
    if (!floating &&
        (n >= options.max_exact_steps || scalar_bits(x) > options.max_bits)) {
      floating = true;
      trace.degraded_to_float = true;
      trace.warning = "exact orbit exceeded the step/bit budget at step " +
                      std::to_string(n) + "; continuing in float";
      x = Scalar(x.to_double());
    }
    const Matrix2 a = floating ? to_float_matrix(system.matrix(n)) : system.matrix(n);
    const MobiusValue next = apply(a, x);
    if (next.is_pole()) {
      trace.pole_at = n + 1;
      break;
    }
    x = next.value();
    trace.values.push_back(x);
  }
  return trace;
}

OrbitTrace iterate_sum_model(const SumModel& model, const Scalar& x0, long steps) {
  if (steps < 0) throw std::domain_error("steps must be >= 0");
  OrbitTrace trace;
  trace.x0 = x0;
  trace.values.push_back(x0);
  const Scalar one = x0.one_like();
  Scalar x = x0;
  for (long n = 0; n < steps; ++n) {
    const Scalar c = model.coefficient(n);
    const Scalar den = c * x + one;
    bool pole;
    if (x.is_float()) {
      const double scale = std::max({std::fabs((c * x).real()), 1.0});
      pole = nearly_zero(den.real(), scale);
    } else {
      pole = den.sign() == 0;
    }
    if (pole) {
      trace.pole_at = n + 1;
      break;
    }
    x = x / den;
    trace.values.push_back(x);
  }
  return trace;
}

CrossCheck cross_check_closed_form(const PeriodicSystem& system, const Scalar& x0, long n) {
  IterateOptions options;
  options.max_exact_steps = std::max(options.max_exact_steps, n + 1);
  const OrbitTrace trace = iterate(system, x0, n, options);

  // First n with a vanishing one-shot denominator; matches the first pole of
  // the stepwise orbit because the denominators factor through each other.
  std::optional<long> product_pole;
  for (long m = 1; m <= n; ++m) {
    const Matrix2 abar = partial_product(system, m);
    const Scalar den = abar.c * x0 + abar.d;
    const bool zero = den.is_float()
                          ? nearly_zero(den.real(),
                                        std::max({std::fabs((abar.c * x0).real()),
                                                  std::fabs(abar.d.real()), 1.0}))
                          : den.sign() == 0;
    if (zero) {
      product_pole = m;
      break;
    }
  }

  if (trace.pole_at || product_pole) {
    if (trace.pole_at == product_pole) return {true, ""};
    return {false,
            "pole mismatch: iteration at step " +
                (trace.pole_at ? std::to_string(*trace.pole_at) : std::string("none")) +
                ", product map at step " +
                (product_pole ? std::to_string(*product_pole) : std::string("none"))};
  }

  const MobiusValue direct = apply(partial_product(system, n), x0);
  if (direct.is_pole()) return {false, "product map poles where iteration survives"};
  const Scalar& iterated = trace.values[static_cast<std::size_t>(n)];
  const bool equal =
      iterated.is_float()
          ? std::fabs(iterated.real() - direct.value().real()) <=
                1e-9 * std::max({std::fabs(iterated.real()), std::fabs(direct.value().real()), 1.0})
          : iterated == direct.value();
  if (equal) return {true, ""};
  return {false, "value mismatch at step " + std::to_string(n) + ": iterated " +
                     iterated.str() + " vs product " + direct.value().str()};
}

std::optional<long> detect_period(const OrbitTrace& trace, std::optional<double> tolerance) {
  if (trace.pole_at) return std::nullopt;
  const long len = static_cast<long>(trace.values.size());
  for (long p = 1; 3 * p <= len; ++p) {
    bool ok = true;
    for (long m = 0; m + p < len && ok; ++m)
      ok = values_close(trace.values[static_cast<std::size_t>(m + p)],
                        trace.values[static_cast<std::size_t>(m)], tolerance);
    if (ok) return p;
  }
  return std::nullopt;
}

std::optional<double> detect_convergence(const OrbitTrace& trace, double eps, long window,
                                         long burn_in) {
  const long len = static_cast<long>(trace.values.size());
  if (trace.pole_at || len < burn_in + window || window < 1) return std::nullopt;
  double mean = 0;
  for (long i = len - window; i < len; ++i)
    mean += trace.values[static_cast<std::size_t>(i)].to_double();
  mean /= static_cast<double>(window);
  for (long i = len - window; i < len; ++i)
    if (std::fabs(trace.values[static_cast<std::size_t>(i)].to_double() - mean) >= eps)
      return std::nullopt;
  return mean;
}

std::vector<std::optional<double>> residue_class_limits(const OrbitTrace& trace, long k,
                                                        double eps, long window) {
  std::vector<std::optional<double>> out(static_cast<std::size_t>(k));
  if (trace.pole_at || k < 1) return out;
  const long len = static_cast<long>(trace.values.size());
  for (long i = 0; i < k; ++i) {
    std::vector<double> tail;
    for (long n = i; n < len; n += k)
      tail.push_back(trace.values[static_cast<std::size_t>(n)].to_double());
    if (static_cast<long>(tail.size()) < 2 * window) continue;
    double mean = 0;
    for (long j = static_cast<long>(tail.size()) - window;
         j < static_cast<long>(tail.size()); ++j)
      mean += tail[static_cast<std::size_t>(j)];
    mean /= static_cast<double>(window);
    bool ok = true;
    for (long j = static_cast<long>(tail.size()) - window;
         j < static_cast<long>(tail.size()) && ok; ++j)
      ok = std::fabs(tail[static_cast<std::size_t>(j)] - mean) < eps;
    if (ok) out[static_cast<std::size_t>(i)] = mean;
  }
  return out;
}

EquidistributionStat equidistribution_stat(const OrbitTrace& trace, long bins) {
  if (bins < 1) throw std::domain_error("bins must be >= 1");
  if (trace.pole_at) throw std::invalid_argument("equidistribution needs a pole-free trace");
  const long samples = static_cast<long>(trace.values.size());
  if (samples < 100 * bins)
    throw std::invalid_argument("trace too short: need at least 100 values per bin");

  const double pi = std::acos(-1.0);
  std::vector<long> counts(static_cast<std::size_t>(bins), 0);
  for (const Scalar& v : trace.values) {
    const double angle = 2.0 * std::atan(v.to_double());  // (-pi, pi)
    long idx = static_cast<long>(std::floor((angle + pi) / (2.0 * pi) *
                                            static_cast<double>(bins)));
    idx = std::clamp<long>(idx, 0, bins - 1);
    ++counts[static_cast<std::size_t>(idx)];
  }
  long occupied = 0;
  const double expected = static_cast<double>(samples) / static_cast<double>(bins);
  double chi2 = 0;
  for (long c : counts) {
    if (c > 0) ++occupied;
    const double diff = static_cast<double>(c) - expected;
    chi2 += diff * diff / expected;
  }
  return {static_cast<double>(occupied) / static_cast<double>(bins), chi2, bins, samples};
}

}  // namespace riccati
