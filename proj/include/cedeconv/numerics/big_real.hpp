#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace cedeconv::numerics {

/// Extended-precision real backed by an MPFR value.
///
/// Every value carries its own precision. Binary operations produce a result
/// at the larger of the two operand precisions, and compound assignment raises
/// the left operand's precision when the right one is wider. A default
/// constructed value is an exact zero at minimal precision, so accumulating
/// into it adopts the precision of whatever is added.
class BigReal {
 public:
  BigReal();
  BigReal(double value, mpfr_prec_t bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_string(const std::string& text, mpfr_prec_t bits);
  static BigReal pi(mpfr_prec_t bits);
  /// 10^exponent rounded to the given precision.
  static BigReal pow10(long exponent, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with `significant` significant digits.
  std::string str(int significant) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(double rhs);

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, double b);
  friend BigReal operator*(double a, const BigReal& b) { return b * a; }

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, double b);

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal hypot(const BigReal& a, const BigReal& b);
  friend BigReal log10(const BigReal& x);
  friend BigReal sin(const BigReal& x);
  friend BigReal cos(const BigReal& x);
  friend BigReal floor(const BigReal& x);

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  struct Uninit {};
  explicit BigReal(Uninit, mpfr_prec_t bits);
  void widen_to(mpfr_prec_t bits);
  bool live() const { return value_->_mpfr_d != nullptr; }

  mpfr_t value_;
};

}  // namespace cedeconv::numerics
