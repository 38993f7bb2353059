#pragma once

#include "cedeconv/numerics/big_real.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace cedeconv::numerics {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("complex division by a zero-magnitude value") {}
};

/// Extended-precision complex scalar.
struct CBig {
  BigReal re;
  BigReal im;

  CBig() = default;
  CBig(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}
  CBig(double real, double imag, mpfr_prec_t bits) : re(real, bits), im(imag, bits) {}
  CBig(std::complex<double> z, mpfr_prec_t bits) : re(z.real(), bits), im(z.imag(), bits) {}

  /// e^{i*theta}.
  static CBig expi(const BigReal& theta);
  /// radius * e^{i*theta}.
  static CBig polar(const BigReal& radius, const BigReal& theta);

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  CBig& operator+=(const CBig& rhs);
  CBig& operator-=(const CBig& rhs);
  CBig& operator*=(const CBig& rhs);
  CBig& operator/=(const CBig& rhs);
  CBig& operator*=(const BigReal& rhs);

  CBig operator-() const { return {-re, -im}; }

  friend CBig operator+(const CBig& a, const CBig& b) { return {a.re + b.re, a.im + b.im}; }
  friend CBig operator-(const CBig& a, const CBig& b) { return {a.re - b.re, a.im - b.im}; }
  friend CBig operator*(const CBig& a, const CBig& b);
  friend CBig operator/(const CBig& a, const CBig& b);
  friend CBig operator*(const CBig& a, const BigReal& b) { return {a.re * b, a.im * b}; }
  friend CBig operator/(const CBig& a, const BigReal& b);

  friend bool operator==(const CBig& a, const CBig& b) { return a.re == b.re && a.im == b.im; }
};

/// |z|.
BigReal abs(const CBig& z);
/// |z|^2.
BigReal norm(const CBig& z);
CBig conj(const CBig& z);
/// 1/z; throws DivisionByZero for z = 0.
CBig reciprocal(const CBig& z);
/// z^exponent by repeated squaring; z^0 = 1 (including 0^0).
CBig pow_int(const CBig& z, unsigned exponent);

enum class ArithOp { add, sub, mul, div, pow_int };

/// Dispatches one field operation. For pow_int, `b` must be a non-negative
/// integer on the real axis.
CBig cplx_arith(const CBig& a, const CBig& b, ArithOp op);

}  // namespace cedeconv::numerics
