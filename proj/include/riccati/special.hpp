#pragma once

#include "riccati/analyzer.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace riccati {

// Reduced data of a b == 0, d == 1 system: the cyclic product a~ of the a
// coefficients and the per-branch entries c~_i, i.e. the nontrivial entries
// of the reduced maps B_i = [[a~, 0], [c~_i, 1]].
struct B0ReducedData {
  Scalar a_tilde;
  std::vector<Scalar> c_tilde;
};

// Closed-form c~_i from the coefficient products and sums; matches the direct
// matrix products exactly. Requires b == 0, d == 1 form.
B0ReducedData tilde_coeffs(const PeriodicSystem& system);

// B_i^n = [[a~^n, 0], [(a~^n - 1)/(a~ - 1) * c~_i, 1]], reading the quotient
// as n when a~ == 1.
Matrix2 bi_power_closed_form(const B0ReducedData& data, long i, long n);

// Forbidden set of a b == 0, d == 1 system through the closed forms: poles
// -1/(cbar_i + c_i*abar_i) for the first k-1 steps, and
// -1/(cbar_i + (a~^n-1)/(a~-1)*c~_i*abar_i) for the pulled-back families over
// branches with c~_i != 0.
ForbiddenSetDescription forbidden_b0(const PeriodicSystem& system, long depth);

// Asymptotic behavior of a b == 0, d == 1 system, covering the oscillating
// regime |a~| >= 1 with some c~_i == 0 that the general classification
// leaves open.
BehaviorClass classify_b0(const PeriodicSystem& system);

// k-by-k matrix mapping (c_0..c_{k-1}) to (c~_0..c~_{k-1}), with its exact
// determinant. |det| equals |a~ - 1|^(k-1).
struct MBuildResult {
  std::vector<std::vector<Scalar>> m;
  Scalar det;
};
MBuildResult build_M(const PeriodicSystem& system);

// Exact determinant by Gaussian elimination over the scalar field.
Scalar matrix_det(std::vector<std::vector<Scalar>> m);

// x_{n+1} = x_n / (c_n x_n + 1) with an arbitrary (not necessarily periodic)
// nonzero coefficient stream. Solutions close to x_n = x_0/(x_0 S_n + 1)
// where S_n is the n-th partial sum of the stream.
class SumModel {
 public:
  using Generator = std::function<Scalar(long)>;

  SumModel(Generator gen, bool float_mode, std::optional<long> length = std::nullopt);

  static SumModel geometric(const Scalar& ratio);
  static SumModel constant(const Scalar& value);
  static SumModel alternating(bool float_mode);
  static SumModel from_list(std::vector<Scalar> values);

  bool float_mode() const { return float_mode_; }
  std::optional<long> length() const { return length_; }

  Scalar coefficient(long n) const;   // c_n; throws past the end of a finite list
  Scalar partial_sum(long n) const;   // S_n = sum of c_0..c_{n-1}; S_0 = 0

 private:
  Generator gen_;
  bool float_mode_;
  std::optional<long> length_;
  // Append-only cache of partial sums; one writer, many readers.
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const std::vector<Scalar>> sums_;
};

struct SumModelValue {
  MobiusValue value;              // x_n, or pole when the orbit dies by step n
  std::optional<long> pole_at;    // first m <= n with x_0 * S_m + 1 == 0
};

SumModelValue sum_model_solve(const SumModel& model, const Scalar& x0, long n);

// The first `depth` distinct points -1/S_n over n >= 1 with S_n != 0, each
// with its earliest pole step.
std::vector<ForbiddenPoint> sum_model_forbidden(const SumModel& model, long depth);

}  // namespace riccati
