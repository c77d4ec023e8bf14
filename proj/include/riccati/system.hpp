#pragma once

#include "riccati/matrix2.hpp"

#include <vector>

namespace riccati {

struct CoefficientRow {
  Scalar a, b, c, d;
};

// The k-periodic coefficient tuple of x_{n+1} = (a_n x_n + b_n)/(c_n x_n + d_n).
// Construction enforces c_n != 0 and a_n d_n - b_n c_n != 0 for every row, and
// a uniform numeric mode across rows.
class PeriodicSystem {
 public:
  explicit PeriodicSystem(std::vector<CoefficientRow> rows);

  long period() const { return static_cast<long>(rows_.size()); }
  bool float_mode() const { return rows_.front().a.is_float(); }

  const CoefficientRow& row(long n) const { return rows_[index(n)]; }
  Matrix2 matrix(long n) const;

  bool b_identically_zero() const;
  // b == 0 and d == 1 on every row.
  bool is_b0_normal_form() const;

 private:
  std::size_t index(long n) const { return static_cast<std::size_t>(n) % rows_.size(); }
  std::vector<CoefficientRow> rows_;
};

// Partial product of the coefficient matrices: A_{n-1} * ... * A_1 * A_0,
// the empty product (identity) for n == 0. The orbit solves as
// x_n = f applied through this product.
Matrix2 partial_product(const PeriodicSystem& system, long n);

// Divides each row by d_n, reducing a b == 0 system to the (a, 0, c, 1) form.
// Row scaling leaves the induced maps unchanged. Requires b identically zero.
PeriodicSystem normalize_b0(const PeriodicSystem& system);

}  // namespace riccati
