#include "riccati/system.hpp"

#include <stdexcept>

namespace riccati {

PeriodicSystem::PeriodicSystem(std::vector<CoefficientRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("a periodic system needs at least one row");
  const bool mode = rows_.front().a.is_float();
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const CoefficientRow& r = rows_[n];
    for (const Scalar* s : {&r.a, &r.b, &r.c, &r.d}) {
      if (s->is_float() != mode)
        throw std::invalid_argument("coefficient rows mix exact and float values");
    }
    if (r.c.is_zero())
      throw std::invalid_argument("c_" + std::to_string(n) + " must be nonzero");
    if ((r.a * r.d - r.b * r.c).is_zero())
      throw std::invalid_argument("a_n*d_n - b_n*c_n vanishes at n = " + std::to_string(n));
  }
}

Matrix2 PeriodicSystem::matrix(long n) const {
  const CoefficientRow& r = row(n);
  return {r.a, r.b, r.c, r.d};
}

bool PeriodicSystem::b_identically_zero() const {
  for (const CoefficientRow& r : rows_)
    if (!r.b.is_zero()) return false;
  return true;
}

bool PeriodicSystem::is_b0_normal_form() const {
  for (const CoefficientRow& r : rows_)
    if (!r.b.is_zero() || !(r.d == r.d.one_like())) return false;
  return true;
}

Matrix2 partial_product(const PeriodicSystem& system, long n) {
  if (n < 0) throw std::domain_error("partial product needs n >= 0");
  Matrix2 acc = Matrix2::identity(system.float_mode());
  for (long i = 0; i < n; ++i) acc = system.matrix(i) * acc;
  return acc;
}

PeriodicSystem normalize_b0(const PeriodicSystem& system) {
  if (!system.b_identically_zero())
    throw std::invalid_argument("normalize_b0 requires b == 0 on every row");
  std::vector<CoefficientRow> rows;
  rows.reserve(static_cast<std::size_t>(system.period()));
  for (long n = 0; n < system.period(); ++n) {
    const CoefficientRow& r = system.row(n);
    // b == 0 and a*d != 0 force d != 0.
    rows.push_back({r.a / r.d, r.b.zero_like(), r.c / r.d, r.d.one_like()});
  }
  return PeriodicSystem(std::move(rows));
}

}  // namespace riccati
