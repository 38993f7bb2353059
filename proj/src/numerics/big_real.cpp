#include "cedeconv/numerics/big_real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace cedeconv::numerics {

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;
}

BigReal::BigReal() {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_d(value_, value, kRound);
}

BigReal::BigReal(Uninit, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (!live()) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, kRound);
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() {
  if (live()) mpfr_clear(value_);
}

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t bits) {
  BigReal r(Uninit{}, bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, kRound) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
  BigReal r(Uninit{}, bits);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

BigReal BigReal::pow10(long exponent, mpfr_prec_t bits) {
  BigReal r(Uninit{}, bits);
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), kRound);
  if (exponent < 0) mpfr_ui_div(r.value_, 1, r.value_, kRound);
  return r;
}

double BigReal::to_double() const { return mpfr_get_d(value_, kRound); }

std::string BigReal::str(int significant) const {
  if (significant < 1) significant = 1;
  // mpfr_snprintf with %.*Re gives significant-1 digits after the point.
  int len = mpfr_snprintf(nullptr, 0, "%.*Re", significant - 1, value_);
  std::vector<char> buf(static_cast<size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant - 1, value_);
  return std::string(buf.data(), static_cast<size_t>(len));
}

void BigReal::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, kRound);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, kRound);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(Uninit{}, precision());
  mpfr_neg(r.value_, value_, kRound);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}

BigReal operator*(const BigReal& a, double b) {
  BigReal r(BigReal::Uninit{}, a.precision());
  mpfr_mul_d(r.value_, a.value_, b, kRound);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_abs(r.value_, x.value_, kRound);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_sqrt(r.value_, x.value_, kRound);
  return r;
}

BigReal hypot(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_hypot(r.value_, a.value_, b.value_, kRound);
  return r;
}

BigReal log10(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_log10(r.value_, x.value_, kRound);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_sin(r.value_, x.value_, kRound);
  return r;
}

BigReal cos(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_cos(r.value_, x.value_, kRound);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r(BigReal::Uninit{}, x.precision());
  mpfr_floor(r.value_, x.value_);
  return r;
}

}  // namespace cedeconv::numerics
