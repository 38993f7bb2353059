#pragma once

#include "cedeconv/numerics/poly.hpp"

#include <vector>

namespace cedeconv::imagez {

using numerics::BigReal;
using numerics::CBig;
using numerics::CPoly;

/// Real 2-D pixel grid. Rows run along x (paired with u), columns along y
/// (paired with v); storage is row-major.
class Image {
 public:
  Image() = default;
  Image(size_t rows, size_t cols, double fill = 0.0);
  Image(size_t rows, size_t cols, std::vector<double> pixels);
  static Image from_rows(const std::vector<std::vector<double>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double& at(size_t x, size_t y) { return pixels_[x * cols_ + y]; }
  double at(size_t x, size_t y) const { return pixels_[x * cols_ + y]; }
  const std::vector<double>& pixels() const { return pixels_; }

  double sum() const;
  double max() const;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> pixels_;
};

/// Extended-precision complex grid, used for intermediate deflation products.
class ComplexImage {
 public:
  ComplexImage() = default;
  ComplexImage(size_t rows, size_t cols, mpfr_prec_t bits);
  ComplexImage(const Image& img, mpfr_prec_t bits);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  CBig& at(size_t x, size_t y) { return pixels_[x * cols_ + y]; }
  const CBig& at(size_t x, size_t y) const { return pixels_[x * cols_ + y]; }

  /// Real parts as doubles.
  Image real_part() const;
  /// Largest |imaginary part|.
  double max_abs_imag() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<CBig> pixels_;
};

/// Full linear convolution, (M+m-1) x (N+n-1).
Image convolve(const Image& f, const Image& h);

/// Polynomial in v at fixed u: coefficient of v^y is sum_x img(x,y) u^x.
CPoly vslice(const ComplexImage& img, const CBig& u);
CPoly vslice(const Image& img, const CBig& u);
/// Polynomial in u at fixed v: coefficient of u^x is sum_y img(x,y) v^y.
CPoly uslice(const ComplexImage& img, const CBig& v);
CPoly uslice(const Image& img, const CBig& v);

}  // namespace cedeconv::imagez
