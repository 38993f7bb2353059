#include "cedeconv/imagez/transform.hpp"
#include "cedeconv/parallel.hpp"
#include "cedeconv/restore/restore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cedeconv::restore {

const char* zero_axis_name(ZeroAxis axis) { return axis == ZeroAxis::v_zeros ? "v_zeros" : "u_zeros"; }

namespace {

CEForm form_for(ZeroAxis axis) { return axis == ZeroAxis::v_zeros ? CEForm::u_form : CEForm::v_form; }

}  // namespace

BlurZeroSet collect_zeros(const ComplexImage& img, const CEConfig& cfg, ZeroAxis axis, int expected_count,
                          const PrecisionContext& ctx, size_t grid_len) {
  cfg.validate();
  if (expected_count < 1) throw std::invalid_argument("collect_zeros: expected zero count must be >= 1");
  if (cfg.plan.stepping == zerotrack::Stepping::rotational && cfg.plan.rho != 1.0) {
    throw std::invalid_argument("collect_zeros: rotational sampling needs rho = 1 to start on the DFT grid");
  }
  if (grid_len == 0) grid_len = axis == ZeroAxis::v_zeros ? img.rows() : img.cols();

  const mpfr_prec_t bits = ctx.bits();
  const CEForm form = form_for(axis);
  BlurZeroSet set;
  set.axis = axis;
  set.expected_count = expected_count;
  set.zeros.resize(grid_len);
  std::vector<char> coerced(grid_len, 0);

  parallel_for(grid_len, [&](size_t j) {
    auto eval = cedetect::evaluate_angle(img, imagez::grid_angle(j, grid_len, bits), cfg, form, ctx);
    const auto& scores = eval.scores;
    if (scores.size() < static_cast<size_t>(expected_count)) {
      std::ostringstream msg;
      msg << "collect_zeros: only " << scores.size() << " branches at grid point " << j << ", need "
          << expected_count;
      throw RestoreError(msg.str());
    }
    std::vector<size_t> order(scores.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return scores[a].abs_e < scores[b].abs_e; });
    const auto flagged = std::count_if(scores.begin(), scores.end(), [](const auto& s) { return s.flagged; });
    if (flagged != expected_count) coerced[j] = 1;
    auto& out = set.zeros[j];
    for (int k = 0; k < expected_count; ++k) out.push_back(eval.branches[order[static_cast<size_t>(k)]].values[0]);
  });

  for (size_t j = 0; j < grid_len; ++j) {
    if (coerced[j]) set.coerced_points.push_back(static_cast<int>(j));
  }
  return set;
}

BlurZeroSet collect_zeros(const Image& img, const CEConfig& cfg, ZeroAxis axis, int expected_count,
                          const PrecisionContext& ctx, size_t grid_len) {
  return collect_zeros(ComplexImage(img, ctx.bits()), cfg, axis, expected_count, ctx, grid_len);
}

ComplexImage deflate_axis(const ComplexImage& img, const BlurZeroSet& zeros, const PrecisionContext& ctx) {
  const bool v_axis = zeros.axis == ZeroAxis::v_zeros;
  const size_t grid = v_axis ? img.rows() : img.cols();
  const size_t kept_src = v_axis ? img.cols() : img.rows();
  const size_t k = static_cast<size_t>(zeros.expected_count);
  if (k == 0) return img;
  if (zeros.zeros.size() != grid) {
    throw std::invalid_argument("deflate_axis: zero set covers " + std::to_string(zeros.zeros.size()) +
                                " grid points, image axis has " + std::to_string(grid));
  }
  if (k >= kept_src) throw std::invalid_argument("deflate_axis: more zeros than the slice degree allows");
  const size_t kept = kept_src - k;
  const mpfr_prec_t bits = ctx.bits();

  // quotient[j][c]: coefficient c of the deflated slice at grid point j.
  std::vector<std::vector<CBig>> quotient(grid);
  parallel_for(grid, [&](size_t j) {
    const CBig point = imagez::unit_root(j, grid, bits);
    numerics::CPoly p = v_axis ? imagez::vslice(img, point) : imagez::uslice(img, point);
    const auto& at_j = zeros.zeros[j];
    if (at_j.size() != k) throw std::invalid_argument("deflate_axis: zero count mismatch at grid point " + std::to_string(j));
    for (const auto& z : at_j) {
      try {
        p = numerics::poly_deflate(p, z, ctx);
      } catch (const numerics::DeflationError& e) {
        throw RestoreError(std::string("deflate_axis: grid point ") + std::to_string(j) + ": " + e.what());
      }
    }
    auto& q = quotient[j];
    q = p.coeffs();
    q.resize(kept, CBig(0.0, 0.0, bits));
  });

  ComplexImage out(v_axis ? grid : kept, v_axis ? kept : grid, bits);
  for (size_t c = 0; c < kept; ++c) {
    std::vector<CBig> column;
    column.reserve(grid);
    for (size_t j = 0; j < grid; ++j) column.push_back(quotient[j][c]);
    std::vector<CBig> line = imagez::idft_axis(column, grid, ctx);
    for (size_t t = 0; t < grid; ++t) {
      if (v_axis) {
        out.at(t, c) = std::move(line[t]);
      } else {
        out.at(c, t) = std::move(line[t]);
      }
    }
  }
  return out;
}

Image deflate_axis(const Image& img, const BlurZeroSet& zeros, const PrecisionContext& ctx) {
  ComplexImage out = deflate_axis(ComplexImage(img, ctx.bits()), zeros, ctx);
  Image real = out.real_part();
  double peak = 0.0;
  for (double v : real.pixels()) peak = std::max(peak, std::abs(v));
  const double imag = out.max_abs_imag();
  if (imag > 1e-6 * peak) {
    std::ostringstream msg;
    msg << "deflate_axis: imaginary residual " << imag << " exceeds 1e-6 of peak " << peak;
    throw RestoreError(msg.str());
  }
  return real;
}

}  // namespace cedeconv::restore
