#include "cedeconv/numerics/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cedeconv::numerics {

PrecisionContext PrecisionContext::for_digits(int digits) {
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.root_tol = std::pow(10.0, -(5.0 * digits) / 6.0);
  ctx.trim_tol = std::pow(10.0, -(3.0 * digits) / 4.0);
  return ctx;
}

void PrecisionContext::validate() const {
  if (digits < 30) throw std::invalid_argument("precision: digits must be >= 30, got " + std::to_string(digits));
  // Tolerances are carried as doubles.
  if (digits > 360) throw std::invalid_argument("precision: digits must be <= 360, got " + std::to_string(digits));
  if (!(root_tol > 0.0) || !(trim_tol > 0.0)) throw std::invalid_argument("precision: tolerances must be positive");
  if (!(root_tol < std::pow(10.0, -digits / 2.0))) {
    throw std::invalid_argument("precision: root_tol must be below 10^-(digits/2)");
  }
  if (!(trim_tol > root_tol)) throw std::invalid_argument("precision: trim_tol must exceed root_tol");
}

mpfr_prec_t PrecisionContext::bits() const {
  // log2(10) = 3.3219..., plus a few guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

}  // namespace cedeconv::numerics
