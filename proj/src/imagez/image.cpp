#include "cedeconv/imagez/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cedeconv::imagez {

Image::Image(size_t rows, size_t cols, double fill) : rows_(rows), cols_(cols), pixels_(rows * cols, fill) {}

Image::Image(size_t rows, size_t cols, std::vector<double> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  if (pixels_.size() != rows * cols) throw std::invalid_argument("image: pixel count does not match dimensions");
  for (double v : pixels_) {
    if (!std::isfinite(v)) throw std::invalid_argument("image: non-finite pixel");
  }
}

Image Image::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const size_t cols = rows.front().size();
  std::vector<double> px;
  px.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("image: ragged rows");
    px.insert(px.end(), r.begin(), r.end());
  }
  return Image(rows.size(), cols, std::move(px));
}

double Image::sum() const {
  double s = 0.0;
  for (double v : pixels_) s += v;
  return s;
}

double Image::max() const {
  if (pixels_.empty()) return 0.0;
  return *std::max_element(pixels_.begin(), pixels_.end());
}

ComplexImage::ComplexImage(size_t rows, size_t cols, mpfr_prec_t bits) : rows_(rows), cols_(cols) {
  pixels_.reserve(rows * cols);
  for (size_t k = 0; k < rows * cols; ++k) pixels_.emplace_back(0.0, 0.0, bits);
}

ComplexImage::ComplexImage(const Image& img, mpfr_prec_t bits) : rows_(img.rows()), cols_(img.cols()) {
  pixels_.reserve(rows_ * cols_);
  for (double v : img.pixels()) pixels_.emplace_back(v, 0.0, bits);
}

Image ComplexImage::real_part() const {
  std::vector<double> px;
  px.reserve(pixels_.size());
  for (const auto& z : pixels_) px.push_back(z.re.to_double());
  return Image(rows_, cols_, std::move(px));
}

double ComplexImage::max_abs_imag() const {
  double worst = 0.0;
  for (const auto& z : pixels_) worst = std::max(worst, std::abs(z.im.to_double()));
  return worst;
}

Image convolve(const Image& f, const Image& h) {
  if (f.rows() == 0 || h.rows() == 0 || f.cols() == 0 || h.cols() == 0) {
    throw std::invalid_argument("convolve: empty operand");
  }
  Image g(f.rows() + h.rows() - 1, f.cols() + h.cols() - 1);
  for (size_t x = 0; x < f.rows(); ++x) {
    for (size_t y = 0; y < f.cols(); ++y) {
      const double fv = f.at(x, y);
      for (size_t s = 0; s < h.rows(); ++s) {
        for (size_t t = 0; t < h.cols(); ++t) g.at(x + s, y + t) += fv * h.at(s, t);
      }
    }
  }
  return g;
}

CPoly vslice(const ComplexImage& img, const CBig& u) {
  std::vector<CBig> coeffs(img.cols());
  for (size_t y = 0; y < img.cols(); ++y) {
    CBig acc = img.at(img.rows() - 1, y);
    for (size_t x = img.rows() - 1; x-- > 0;) {
      acc = acc * u;
      acc += img.at(x, y);
    }
    coeffs[y] = std::move(acc);
  }
  return CPoly(std::move(coeffs));
}

CPoly uslice(const ComplexImage& img, const CBig& v) {
  std::vector<CBig> coeffs(img.rows());
  for (size_t x = 0; x < img.rows(); ++x) {
    CBig acc = img.at(x, img.cols() - 1);
    for (size_t y = img.cols() - 1; y-- > 0;) {
      acc = acc * v;
      acc += img.at(x, y);
    }
    coeffs[x] = std::move(acc);
  }
  return CPoly(std::move(coeffs));
}

CPoly vslice(const Image& img, const CBig& u) { return vslice(ComplexImage(img, u.precision()), u); }

CPoly uslice(const Image& img, const CBig& v) { return uslice(ComplexImage(img, v.precision()), v); }

}  // namespace cedeconv::imagez
