#include "cedeconv/imagez/transform.hpp"

#include <stdexcept>
#include <string>

namespace cedeconv::imagez {

BigReal grid_angle(size_t index, size_t len, mpfr_prec_t bits) {
  BigReal angle = BigReal::pi(bits) * 2.0;
  angle *= BigReal(static_cast<double>(index % len), bits);
  angle /= BigReal(static_cast<double>(len), bits);
  return angle;
}

CBig unit_root(size_t index, size_t len, mpfr_prec_t bits) { return CBig::expi(grid_angle(index, len, bits)); }

std::vector<CBig> idft_axis(const std::vector<CBig>& values, size_t axis_len, const PrecisionContext& ctx) {
  if (values.size() != axis_len || axis_len == 0) {
    throw std::invalid_argument("idft_axis: expected " + std::to_string(axis_len) + " samples, got " +
                                std::to_string(values.size()));
  }
  const mpfr_prec_t bits = ctx.bits();
  // Conjugate twiddles w^{-t}, t = j*k mod L.
  std::vector<CBig> twiddle;
  twiddle.reserve(axis_len);
  for (size_t t = 0; t < axis_len; ++t) twiddle.push_back(numerics::conj(unit_root(t, axis_len, bits)));

  const BigReal inv_len = BigReal(1.0, bits) / BigReal(static_cast<double>(axis_len), bits);
  std::vector<CBig> out;
  out.reserve(axis_len);
  for (size_t k = 0; k < axis_len; ++k) {
    CBig acc(0.0, 0.0, bits);
    for (size_t j = 0; j < axis_len; ++j) acc += values[j] * twiddle[(j * k) % axis_len];
    out.push_back(acc * inv_len);
  }
  return out;
}

}  // namespace cedeconv::imagez
