#pragma once

#include "cedeconv/imagez/image.hpp"
#include "cedeconv/numerics/cbig.hpp"
#include "cedeconv/numerics/matrix.hpp"
#include "cedeconv/numerics/poly.hpp"
#include "cedeconv/numerics/precision.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace cedeconv::testing {

using numerics::BigReal;
using numerics::CBig;
using numerics::CMatrix;
using numerics::CPoly;
using numerics::PrecisionContext;

inline PrecisionContext default_ctx() { return PrecisionContext::for_digits(120); }

// log10 of |a - b|, or a large negative number when they are identical.
inline double log10_diff(const CBig& a, const CBig& b) {
  const BigReal d = numerics::abs(a - b);
  if (d.is_zero()) return -1e9;
  return log10(d).to_double();
}

inline double log10_abs(const CBig& z) {
  const BigReal d = numerics::abs(z);
  if (d.is_zero()) return -1e9;
  return log10(d).to_double();
}

// log10 of |a - b| / |b|.
inline double log10_rel(const CBig& a, const CBig& b) {
  const BigReal d = numerics::abs(a - b);
  if (d.is_zero()) return -1e9;
  return (log10(d) - log10(numerics::abs(b))).to_double();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  // Uniform in the closed unit disc, promoted exactly from doubles.
  CBig in_disc(mpfr_prec_t bits) {
    for (;;) {
      const double re = uniform(-1, 1), im = uniform(-1, 1);
      if (re * re + im * im <= 1.0) return CBig(re, im, bits);
    }
  }

  CBig on_circle(mpfr_prec_t bits) { return CBig::expi(BigReal(uniform(0, 2 * std::numbers::pi), bits)); }

  imagez::Image image(size_t rows, size_t cols, int lo = 0, int hi = 255) {
    imagez::Image img(rows, cols);
    for (size_t x = 0; x < rows; ++x) {
      for (size_t y = 0; y < cols; ++y) img.at(x, y) = integer(lo, hi);
    }
    return img;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Cofactor expansion along the first row.
inline CBig laplace_det(const CMatrix& m) {
  const size_t n = m.order();
  const mpfr_prec_t bits = m.at(0, 0).precision();
  if (n == 1) return m.at(0, 0);
  CBig total(0.0, 0.0, bits);
  for (size_t c = 0; c < n; ++c) {
    CMatrix minor(n - 1, bits);
    for (size_t r = 1; r < n; ++r) {
      for (size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, kk++) = m.at(r, k);
      }
    }
    CBig term = m.at(0, c) * laplace_det(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Coefficients of prod (z - r_k), expanded exactly at working precision.
inline CPoly from_roots(const std::vector<CBig>& roots, mpfr_prec_t bits) {
  CPoly p(std::vector<CBig>{CBig(1.0, 0.0, bits)});
  for (const auto& r : roots) p = numerics::poly_mul(p, CPoly(std::vector<CBig>{-r, CBig(1.0, 0.0, bits)}));
  return p;
}

// Largest distance between two root sets, pairing each wanted root with the
// nearest unused computed one. Adequate for well separated sets.
inline double log10_root_set_distance(const std::vector<CBig>& got, const std::vector<CBig>& want) {
  std::vector<bool> used(got.size(), false);
  double worst = -1e9;
  for (const auto& w : want) {
    size_t best = got.size();
    double best_d = 1e300;
    for (size_t i = 0; i < got.size(); ++i) {
      if (used[i]) continue;
      const double d = log10_diff(got[i], w);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == got.size()) return 1e9;
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace cedeconv::testing
