#pragma once

#include "cedeconv/numerics/big_real.hpp"

namespace cedeconv::numerics {

/// Working precision and tolerances for all transform-domain math.
///
/// `root_tol` bounds the normalized residual a computed root must reach;
/// `trim_tol` is the relative size below which a leading coefficient or a
/// pivot column counts as vanished.
struct PrecisionContext {
  int digits = 120;
  double root_tol = 1e-100;
  double trim_tol = 1e-90;

  /// Context at `digits` with tolerances scaled the same way as the defaults
  /// (root_tol = 10^-(5d/6), trim_tol = 10^-(3d/4)).
  static PrecisionContext for_digits(int digits);

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  /// Binary precision used for every value created under this context.
  mpfr_prec_t bits() const;

  BigReal real(double value) const { return BigReal(value, bits()); }
  /// 10^exponent at working precision.
  BigReal pow10(long exponent) const { return BigReal::pow10(exponent, bits()); }
  BigReal root_tolerance() const { return real(root_tol); }
  BigReal trim_tolerance() const { return real(trim_tol); }
  /// Radius under which two roots are treated as one cluster: 10^-(digits/4).
  BigReal cluster_radius() const { return pow10(-(digits / 4)); }
};

}  // namespace cedeconv::numerics
