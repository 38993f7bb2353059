#include "cedeconv/numerics/cbig.hpp"

namespace cedeconv::numerics {

CBig CBig::expi(const BigReal& theta) { return {cos(theta), sin(theta)}; }

CBig CBig::polar(const BigReal& radius, const BigReal& theta) {
  return {radius * cos(theta), radius * sin(theta)};
}

CBig& CBig::operator+=(const CBig& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

CBig& CBig::operator-=(const CBig& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

CBig& CBig::operator*=(const CBig& rhs) {
  *this = *this * rhs;
  return *this;
}

CBig& CBig::operator/=(const CBig& rhs) {
  *this = *this / rhs;
  return *this;
}

CBig& CBig::operator*=(const BigReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

CBig operator*(const CBig& a, const CBig& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CBig operator/(const CBig& a, const CBig& b) {
  BigReal den = norm(b);
  if (den.is_zero()) throw DivisionByZero();
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

CBig operator/(const CBig& a, const BigReal& b) {
  if (b.is_zero()) throw DivisionByZero();
  return {a.re / b, a.im / b};
}

BigReal abs(const CBig& z) { return hypot(z.re, z.im); }

BigReal norm(const CBig& z) { return z.re * z.re + z.im * z.im; }

CBig conj(const CBig& z) { return {z.re, -z.im}; }

CBig reciprocal(const CBig& z) {
  BigReal den = norm(z);
  if (den.is_zero()) throw DivisionByZero();
  return {z.re / den, -(z.im / den)};
}

CBig pow_int(const CBig& z, unsigned exponent) {
  mpfr_prec_t bits = z.precision();
  CBig result(1.0, 0.0, bits);
  CBig base = z;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

CBig cplx_arith(const CBig& a, const CBig& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
    case ArithOp::pow_int: {
      if (!b.im.is_zero() || b.re < 0.0 || !(floor(b.re) == b.re)) {
        throw std::invalid_argument("pow_int exponent must be a non-negative integer");
      }
      return pow_int(a, static_cast<unsigned>(b.re.to_double()));
    }
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace cedeconv::numerics
