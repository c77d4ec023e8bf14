#pragma once

#include "riccati/special.hpp"
#include "riccati/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riccati {

// Direct iteration record. values[n] = x_n; nothing follows a pole, and
// pole_at indexes the step whose value is undefined.
struct OrbitTrace {
  Scalar x0;
  std::vector<Scalar> values;
  std::optional<long> pole_at;
  std::optional<long> detected_period;
  std::optional<Scalar> limit_estimate;
  bool degraded_to_float = false;
  std::string warning;

  long last_step() const { return static_cast<long>(values.size()) - 1; }
};

struct IterateOptions {
  long max_exact_steps = 10000;  // beyond this the exact orbit switches to float
  long max_bits = 1000000;       // numerator+denominator bit budget per value
};

// x_{n+1} = f applied with the step-n coefficient row; stops at the first
// pole. Exact orbits whose rationals outgrow the bit budget degrade to float
// with a warning.
OrbitTrace iterate(const PeriodicSystem& system, const Scalar& x0, long steps,
                   const IterateOptions& options = {});

OrbitTrace iterate_sum_model(const SumModel& model, const Scalar& x0, long steps);

struct CrossCheck {
  bool agree;
  std::string detail;
};

// Compares the step-n iterate against the one-shot partial-product map; exact
// equality in exact mode, shared pole step when the orbit dies early.
CrossCheck cross_check_closed_form(const PeriodicSystem& system, const Scalar& x0, long n);

// Smallest p with x_{m+p} = x_m for every examined m, requiring at least
// three full periods of evidence in the trace. Exact comparison when
// tolerance is absent.
std::optional<long> detect_period(const OrbitTrace& trace,
                                  std::optional<double> tolerance = std::nullopt);

// Limit estimate when the last `window` values sit within eps of their mean.
std::optional<double> detect_convergence(const OrbitTrace& trace, double eps = 1e-9,
                                         long window = 50, long burn_in = 500);

// Per-residue-class limits of x_{nk+i}, for cycle verdicts.
std::vector<std::optional<double>> residue_class_limits(const OrbitTrace& trace, long k,
                                                        double eps = 1e-9, long window = 50);

struct EquidistributionStat {
  double occupancy;  // fraction of nonempty bins
  double chi2;       // Pearson statistic against the uniform bin law
  long bins;
  long samples;
};

// Maps each value onto the circle through the angle 2*atan(x) and bins into
// equal arcs. Occupancy, not chi2, is the density check. Needs a pole-free
// trace of at least 100 values per bin.
EquidistributionStat equidistribution_stat(const OrbitTrace& trace, long bins);

}  // namespace riccati
