#include "riccati/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riccati {

namespace {

Scalar constant_like(long v, const Scalar& like) {
  return like.is_float() ? Scalar(static_cast<double>(v)) : Scalar::integer(v);
}

bool same_value(const Scalar& x, const Scalar& y) {
  if (x.is_float() && y.is_float()) {
    const double scale = std::max({std::fabs(x.real()), std::fabs(y.real()), 1.0});
    return nearly_zero(x.real() - y.real(), scale);
  }
  return x == y;
}

void require_b0_form(const PeriodicSystem& system, const char* who) {
  if (!system.is_b0_normal_form())
    throw std::invalid_argument(std::string(who) + " requires the b == 0, d == 1 form");
}

// (a~^n - 1) / (a~ - 1), read as n when a~ == 1.
Scalar geometric_quotient(const Scalar& a_tilde, long n) {
  const Scalar one = a_tilde.one_like();
  if (same_value(a_tilde, one)) return constant_like(n, a_tilde);
  return (pow(a_tilde, n) - one) / (a_tilde - one);
}

}  // namespace

B0ReducedData tilde_coeffs(const PeriodicSystem& system) {
  require_b0_form(system, "tilde_coeffs");
  const long k = system.period();
  const Scalar zero = system.row(0).a.zero_like();

  Scalar a_tilde = system.row(0).a.one_like();
  for (long j = 0; j < k; ++j) a_tilde = a_tilde * system.row(j).a;

  std::vector<Scalar> c_tilde;
  for (long i = 0; i < k; ++i) {
    // prod_{j=i}^{k-1} a_j * sum_{l<i} c_l prod_{r<l} a_r  +
    // sum_{s=i}^{k-1} c_s prod_{t=i}^{s-1} a_t
    Scalar tail_prod = zero.one_like();
    for (long j = i; j < k; ++j) tail_prod = tail_prod * system.row(j).a;

    Scalar head_sum = zero;
    Scalar prefix = zero.one_like();
    for (long l = 0; l < i; ++l) {
      head_sum = head_sum + system.row(l).c * prefix;
      prefix = prefix * system.row(l).a;
    }

    Scalar tail_sum = zero;
    Scalar run = zero.one_like();
    for (long s = i; s < k; ++s) {
      tail_sum = tail_sum + system.row(s).c * run;
      run = run * system.row(s).a;
    }
    c_tilde.push_back(tail_prod * head_sum + tail_sum);
  }
  return {a_tilde, std::move(c_tilde)};
}

Matrix2 bi_power_closed_form(const B0ReducedData& data, long i, long n) {
  if (n < 0) throw std::domain_error("negative matrix power");
  if (i < 0 || static_cast<std::size_t>(i) >= data.c_tilde.size())
    throw std::out_of_range("branch index out of range");
  const Scalar zero = data.a_tilde.zero_like();
  const Scalar one = data.a_tilde.one_like();
  return {pow(data.a_tilde, n), zero,
          geometric_quotient(data.a_tilde, n) * data.c_tilde[static_cast<std::size_t>(i)],
          one};
}

ForbiddenSetDescription forbidden_b0(const PeriodicSystem& system, long depth) {
  require_b0_form(system, "forbidden_b0");
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  const long k = system.period();
  const B0ReducedData data = tilde_coeffs(system);
  ForbiddenSetDescription out;

  // abar_i = prod_{j<i} a_j and cbar_i = sum_{j<i} c_j prod_{r<j} a_r are the
  // nontrivial entries of the step-i partial product.
  std::vector<Scalar> abar{system.row(0).a.one_like()};
  std::vector<Scalar> cbar{system.row(0).a.zero_like()};
  for (long i = 0; i < k; ++i) {
    cbar.push_back(cbar.back() + system.row(i).c * abar.back());
    abar.push_back(abar.back() * system.row(i).a);
  }

  auto contains = [&](const std::vector<ForbiddenPoint>& pts, const Scalar& v) {
    for (const ForbiddenPoint& p : pts)
      if (same_value(p.point, v)) return true;
    return false;
  };

  for (long i = 0; i + 1 < k; ++i) {
    const Scalar den = cbar[static_cast<std::size_t>(i)] +
                       system.row(i).c * abar[static_cast<std::size_t>(i)];
    if (den.is_zero()) continue;
    const Scalar point = -den.one_like() / den;
    if (!contains(out.prefix, point)) out.prefix.push_back({point, i + 1, 0});
  }

  for (long i = 0; i < k; ++i) {
    ForbiddenFamily family;
    family.branch = i;
    family.transform = inverse(partial_product(system, i));
    const Scalar& ct = data.c_tilde[static_cast<std::size_t>(i)];
    if (ct.is_zero()) {
      family.kind = FamilyKind::Empty;
      out.families.push_back(std::move(family));
      continue;
    }
    family.kind = same_value(data.a_tilde, data.a_tilde.one_like())
                      ? FamilyKind::DoubleRoot
                      : FamilyKind::DistinctRoots;
    const long cap = std::max<long>(64, 8 * depth + 16);
    for (long n = 1; n <= cap && static_cast<long>(family.points.size()) < depth; ++n) {
      const Scalar q = geometric_quotient(data.a_tilde, n);
      if (!q.is_zero()) {  // q == 0 means a~^n == 1: that power of B_i has no pole
        const Scalar den = cbar[static_cast<std::size_t>(i)] +
                           q * ct * abar[static_cast<std::size_t>(i)];
        if (!den.is_zero()) {
          const Scalar point = -den.one_like() / den;
          if (!contains(family.points, point)) family.points.push_back({point, n * k + i, n});
        }
      }
      if (same_value(pow(data.a_tilde, n), data.a_tilde.one_like())) break;  // poles repeat
    }
    out.families.push_back(std::move(family));
  }
  return out;
}

BehaviorClass classify_b0(const PeriodicSystem& system) {
  require_b0_form(system, "classify_b0");
  const long k = system.period();
  const B0ReducedData data = tilde_coeffs(system);
  const Scalar one = data.a_tilde.one_like();
  const Scalar zero = data.a_tilde.zero_like();

  BehaviorClass out;
  if (same_value(data.a_tilde, -one)) {
    out.kind = BehaviorClass::Kind::PeriodicAll;
    out.period = 2 * k;
    return out;
  }

  std::vector<long> zero_branches;
  for (long i = 0; i < k; ++i)
    if (data.c_tilde[static_cast<std::size_t>(i)].is_zero()) zero_branches.push_back(i);

  const int mag = compare(abs(data.a_tilde), one);  // |a~| vs 1

  if (mag < 0) {
    // 0 attracts everything; the basin drops the preimages of the repelling
    // fixed points (a~ - 1)/c~_i of the branches that have one.
    out.kind = BehaviorClass::Kind::AttractingFixedPoint;
    out.fixed_point = zero;
    out.stable = true;
    for (long i = 0; i < k; ++i) {
      const Scalar& ct = data.c_tilde[static_cast<std::size_t>(i)];
      if (ct.is_zero()) continue;
      const MobiusValue pre =
          apply(inverse(partial_product(system, i)), (data.a_tilde - one) / ct);
      if (pre.is_finite()) {
        bool seen = false;
        for (const Scalar& e : out.excluded) seen = seen || same_value(e, pre.value());
        if (!seen) out.excluded.push_back(pre.value());
      }
    }
    return out;
  }

  if (same_value(data.a_tilde, one)) {
    if (zero_branches.empty()) {
      out.kind = BehaviorClass::Kind::UnstableAttractorPoint;
      out.fixed_point = zero;
      out.stable = false;
      return out;
    }
    out.kind = BehaviorClass::Kind::Oscillating;
    for (long i = 0; i < k; ++i) {
      const Scalar& ct = data.c_tilde[static_cast<std::size_t>(i)];
      if (ct.is_zero())
        out.branches.push_back({i, OscillationBranch::Kind::Frozen, std::nullopt});
      else
        out.branches.push_back({i, OscillationBranch::Kind::Converges, zero});
    }
    return out;
  }

  // |a~| > 1.
  if (!zero_branches.empty()) {
    out.kind = BehaviorClass::Kind::Oscillating;
    for (long i = 0; i < k; ++i) {
      const Scalar& ct = data.c_tilde[static_cast<std::size_t>(i)];
      if (ct.is_zero())
        out.branches.push_back({i, OscillationBranch::Kind::Diverges, std::nullopt});
      else
        out.branches.push_back(
            {i, OscillationBranch::Kind::Converges, (data.a_tilde - one) / ct});
    }
    return out;
  }

  std::vector<Scalar> rho;
  for (long i = 0; i < k; ++i)
    rho.push_back((data.a_tilde - one) / data.c_tilde[static_cast<std::size_t>(i)]);
  bool all_equal = true;
  for (long i = 1; i < k; ++i)
    if (!same_value(rho[static_cast<std::size_t>(i)], rho.front())) all_equal = false;
  out.stable = true;
  out.excluded.push_back(zero);  // 0 is the repelling fixed point of every branch
  if (all_equal) {
    out.kind = BehaviorClass::Kind::AttractingFixedPoint;
    out.fixed_point = rho.front();
  } else {
    out.kind = BehaviorClass::Kind::AttractingCycle;
    out.cycle = std::move(rho);
  }
  return out;
}

MBuildResult build_M(const PeriodicSystem& system) {
  require_b0_form(system, "build_M");
  const long k = system.period();
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(k), system.row(0).a.zero_like());
    for (long l = 0; l < k; ++l) {
      Scalar entry = system.row(0).a.one_like();
      if (l < i) {
        for (long j = i; j < k; ++j) entry = entry * system.row(j).a;
        for (long r = 0; r < l; ++r) entry = entry * system.row(r).a;
      } else {
        for (long t = i; t < l; ++t) entry = entry * system.row(t).a;
      }
      row[static_cast<std::size_t>(l)] = entry;
    }
  }
  Scalar det = matrix_det(m);
  return {std::move(m), std::move(det)};
}

Scalar matrix_det(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  Scalar det = m[0][0].one_like();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return m[0][0].zero_like();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

SumModel::SumModel(Generator gen, bool float_mode, std::optional<long> length)
    : gen_(std::move(gen)),
      float_mode_(float_mode),
      length_(length),
      sums_(std::make_shared<const std::vector<Scalar>>(
          std::vector<Scalar>{float_mode ? Scalar(0.0) : Scalar::integer(0)})) {}

SumModel SumModel::geometric(const Scalar& ratio) {
  if (ratio.is_zero()) throw std::invalid_argument("geometric stream needs a nonzero ratio");
  return SumModel([ratio](long n) { return pow(ratio, n); }, ratio.is_float());
}

SumModel SumModel::constant(const Scalar& value) {
  if (value.is_zero()) throw std::invalid_argument("constant stream must be nonzero");
  return SumModel([value](long) { return value; }, value.is_float());
}

SumModel SumModel::alternating(bool float_mode) {
  return SumModel(
      [float_mode](long n) {
        const long v = n % 2 == 0 ? 1 : -1;
        return float_mode ? Scalar(static_cast<double>(v)) : Scalar::integer(v);
      },
      float_mode);
}

SumModel SumModel::from_list(std::vector<Scalar> values) {
  if (values.empty()) throw std::invalid_argument("coefficient list must be nonempty");
  for (const Scalar& v : values)
    if (v.is_zero()) throw std::invalid_argument("coefficient stream values must be nonzero");
  const bool mode = values.front().is_float();
  const long len = static_cast<long>(values.size());
  auto shared = std::make_shared<std::vector<Scalar>>(std::move(values));
  return SumModel([shared](long n) { return (*shared)[static_cast<std::size_t>(n)]; }, mode,
                  len);
}

Scalar SumModel::coefficient(long n) const {
  if (n < 0) throw std::out_of_range("coefficient index must be >= 0");
  if (length_ && n >= *length_)
    throw std::out_of_range("coefficient stream exhausted at n = " + std::to_string(n));
  return gen_(n);
}

Scalar SumModel::partial_sum(long n) const {
  if (n < 0) throw std::out_of_range("partial sum index must be >= 0");
  if (length_ && n > *length_)
    throw std::out_of_range("partial sums beyond the end of a finite stream");
  std::lock_guard<std::mutex> lock(mutex_);
  if (static_cast<std::size_t>(n) < sums_->size())
    return (*sums_)[static_cast<std::size_t>(n)];
  auto grown = std::make_shared<std::vector<Scalar>>(*sums_);
  while (static_cast<long>(grown->size()) <= n)
    grown->push_back(grown->back() + gen_(static_cast<long>(grown->size()) - 1));
  sums_ = grown;
  return (*sums_)[static_cast<std::size_t>(n)];
}

SumModelValue sum_model_solve(const SumModel& model, const Scalar& x0, long n) {
  if (n < 0) throw std::domain_error("step index must be >= 0");
  const Scalar one = x0.one_like();
  for (long m = 1; m <= n; ++m) {
    const Scalar den = x0 * model.partial_sum(m) + one;
    if (den.is_zero()) return {MobiusValue::pole(), m};
  }
  const Scalar den = x0 * model.partial_sum(n) + one;
  return {MobiusValue::finite(x0 / den), std::nullopt};
}

std::vector<ForbiddenPoint> sum_model_forbidden(const SumModel& model, long depth) {
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  std::vector<ForbiddenPoint> out;
  const long cap = model.length().value_or(std::max<long>(64, 8 * depth + 16));
  for (long n = 1; n <= cap && static_cast<long>(out.size()) < depth; ++n) {
    const Scalar s = model.partial_sum(n);
    if (s.is_zero()) continue;
    const Scalar point = -s.one_like() / s;
    bool seen = false;
    for (const ForbiddenPoint& p : out) seen = seen || same_value(p.point, point);
    if (!seen) out.push_back({point, n, n});
  }
  return out;
}

}  // namespace riccati
