#include "cedeconv/imagez/transform.hpp"
#include "cedeconv/parallel.hpp"
#include "cedeconv/restore/restore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cedeconv::restore {

const char* mode_name(RestoreMode mode) { return mode == RestoreMode::sequential ? "sequential" : "literal"; }

namespace {

void note_skipped(RestorationResult& result, const cedetect::CEReport& report, const std::string& stage) {
  for (int idx : report.skipped_angles) result.skipped_points.push_back({stage, idx});
}

void note_coerced(RestorationResult& result, const BlurZeroSet& zeros, const std::string& stage) {
  for (int idx : zeros.coerced_points) result.coerced_points.push_back({stage, idx});
}

// Literal division on the output-size grid followed by a 2-D inverse DFT.
ComplexImage literal_restore(const ComplexImage& img, const BlurZeroSet* v_zeros, const BlurZeroSet* u_zeros,
                             size_t out_rows, size_t out_cols, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  std::vector<CBig> u_grid, v_grid;
  for (size_t j = 0; j < out_rows; ++j) u_grid.push_back(imagez::unit_root(j, out_rows, bits));
  for (size_t k = 0; k < out_cols; ++k) v_grid.push_back(imagez::unit_root(k, out_cols, bits));

  // spectrum[j][k] = G(u_j, v_k) / (prod (v_k - beta(u_j)) * prod (u_j - gamma(v_k)))
  std::vector<std::vector<CBig>> spectrum(out_rows);
  parallel_for(out_rows, [&](size_t j) {
    const numerics::CPoly slice = imagez::vslice(img, u_grid[j]);
    auto& row = spectrum[j];
    row.reserve(out_cols);
    for (size_t k = 0; k < out_cols; ++k) {
      CBig value = numerics::poly_eval(slice, v_grid[k]);
      CBig divisor(1.0, 0.0, bits);
      if (v_zeros) {
        for (const auto& beta : v_zeros->zeros[j]) divisor *= v_grid[k] - beta;
      }
      if (u_zeros) {
        for (const auto& gamma : u_zeros->zeros[k]) divisor *= u_grid[j] - gamma;
      }
      if (divisor.is_zero() || numerics::abs(divisor) < ctx.cluster_radius()) {
        std::ostringstream msg;
        msg << "literal restore: blur zero lies on grid point (" << j << ", " << k << ")";
        throw RestoreError(msg.str());
      }
      row.push_back(value / divisor);
    }
  });

  for (auto& row : spectrum) row = imagez::idft_axis(row, out_cols, ctx);
  ComplexImage out(out_rows, out_cols, bits);
  for (size_t k = 0; k < out_cols; ++k) {
    std::vector<CBig> column;
    column.reserve(out_rows);
    for (size_t j = 0; j < out_rows; ++j) column.push_back(spectrum[j][k]);
    std::vector<CBig> line = imagez::idft_axis(column, out_rows, ctx);
    for (size_t x = 0; x < out_rows; ++x) out.at(x, k) = std::move(line[x]);
  }
  return out;
}

}  // namespace

RestorationResult restore(const Image& img, const CEConfig& cfg, RestoreMode mode, const PrecisionContext& ctx) {
  cfg.validate();
  ctx.validate();
  const mpfr_prec_t bits = ctx.bits();
  RestorationResult result;
  result.mode = mode;

  const ComplexImage observed(img, bits);
  ComplexImage unnormalized;

  if (mode == RestoreMode::sequential) {
    ComplexImage current = observed;
    const auto v_report = cedetect::detect(current, cfg, CEForm::u_form, ctx);
    note_skipped(result, v_report, "detect_u_form");
    result.v_zero_count = v_report.consensus_count;
    if (result.v_zero_count > 0) {
      BlurZeroSet zs = collect_zeros(current, cfg, ZeroAxis::v_zeros, result.v_zero_count, ctx);
      note_coerced(result, zs, "collect_v_zeros");
      current = deflate_axis(current, zs, ctx);
    }
    // The remaining u zeros belong to a purely x-directional residual kernel.
    const auto u_report = cedetect::detect(current, cfg, CEForm::v_form, ctx);
    note_skipped(result, u_report, "detect_v_form");
    result.u_zero_count = u_report.consensus_count;
    if (result.u_zero_count > 0) {
      BlurZeroSet zs = collect_zeros(current, cfg, ZeroAxis::u_zeros, result.u_zero_count, ctx);
      note_coerced(result, zs, "collect_u_zeros");
      current = deflate_axis(current, zs, ctx);
    }
    unnormalized = std::move(current);
  } else {
    const auto v_report = cedetect::detect(observed, cfg, CEForm::u_form, ctx);
    const auto u_report = cedetect::detect(observed, cfg, CEForm::v_form, ctx);
    note_skipped(result, v_report, "detect_u_form");
    note_skipped(result, u_report, "detect_v_form");
    result.v_zero_count = v_report.consensus_count;
    result.u_zero_count = u_report.consensus_count;
    const size_t kv = static_cast<size_t>(result.v_zero_count), ku = static_cast<size_t>(result.u_zero_count);
    if (kv >= img.cols() || ku >= img.rows()) throw RestoreError("literal restore: more zeros than image extent");
    const size_t out_rows = img.rows() - ku, out_cols = img.cols() - kv;
    BlurZeroSet vz, uz;
    if (kv > 0) {
      vz = collect_zeros(observed, cfg, ZeroAxis::v_zeros, result.v_zero_count, ctx, out_rows);
      note_coerced(result, vz, "collect_v_zeros");
    }
    if (ku > 0) {
      uz = collect_zeros(observed, cfg, ZeroAxis::u_zeros, result.u_zero_count, ctx, out_cols);
      note_coerced(result, uz, "collect_u_zeros");
    }
    if (kv + ku > 0) {
      unnormalized = literal_restore(observed, kv > 0 ? &vz : nullptr, ku > 0 ? &uz : nullptr, out_rows, out_cols,
                                     ctx);
    }
  }

  if (result.v_zero_count + result.u_zero_count == 0) throw RestoreError("restore: no blur zeros detected on either axis");

  CBig total(0.0, 0.0, bits);
  for (size_t x = 0; x < unnormalized.rows(); ++x) {
    for (size_t y = 0; y < unnormalized.cols(); ++y) total += unnormalized.at(x, y);
  }
  numerics::BigReal observed_mass(img.sum(), bits);
  if (observed_mass.is_zero()) throw RestoreError("restore: observed image has zero mass, scale is undetermined");
  result.normalization = total / observed_mass;
  if (numerics::abs(result.normalization) < ctx.trim_tolerance()) {
    throw RestoreError("restore: normalization scalar vanished (degenerate deflation)");
  }

  const CBig inv = numerics::reciprocal(result.normalization);
  for (size_t x = 0; x < unnormalized.rows(); ++x) {
    for (size_t y = 0; y < unnormalized.cols(); ++y) unnormalized.at(x, y) *= inv;
  }

  Image restored = unnormalized.real_part();
  double peak = 0.0;
  for (double v : restored.pixels()) peak = std::max(peak, std::abs(v));
  result.max_imag_residual = unnormalized.max_abs_imag();
  if (result.max_imag_residual > 1e-6 * peak) {
    std::ostringstream msg;
    msg << "restore: imaginary residual " << result.max_imag_residual << " exceeds 1e-6 of peak " << peak
        << " (blur zeros were not removed exactly)";
    throw RestoreError(msg.str());
  }
  // Clamp rounding-level negatives so the restored image stays nonnegative.
  for (size_t x = 0; x < restored.rows(); ++x) {
    for (size_t y = 0; y < restored.cols(); ++y) {
      double& v = restored.at(x, y);
      if (v < 0.0 && v > -1e-6 * peak) v = 0.0;
    }
  }
  result.restored = std::move(restored);
  return result;
}

}  // namespace cedeconv::restore
