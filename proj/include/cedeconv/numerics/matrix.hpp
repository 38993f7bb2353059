#pragma once

#include "cedeconv/numerics/cbig.hpp"
#include "cedeconv/numerics/precision.hpp"

#include <vector>

namespace cedeconv::numerics {

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  /// Zero matrix of the given order.
  CMatrix(size_t order, mpfr_prec_t bits);

  size_t order() const { return order_; }
  CBig& at(size_t row, size_t col) { return entries_[row * order_ + col]; }
  const CBig& at(size_t row, size_t col) const { return entries_[row * order_ + col]; }
  void swap_rows(size_t a, size_t b);

 private:
  size_t order_ = 0;
  std::vector<CBig> entries_;
};

/// Determinant by LU factorization with partial pivoting. Returns an exact
/// zero when a pivot column has nothing above ctx.trim_tol * max|entry|.
CBig det(const CMatrix& m, const PrecisionContext& ctx);

}  // namespace cedeconv::numerics
