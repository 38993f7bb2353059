#pragma once

#include "cedeconv/cedetect/cedetect.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cedeconv::restore {

using cedetect::CEConfig;
using cedetect::CEForm;
using numerics::CBig;
using numerics::PrecisionContext;
using zerotrack::ComplexImage;
using zerotrack::Image;

class RestoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// v_zeros: beta zeros (roots in v) at u on the x-axis DFT grid.
/// u_zeros: gamma zeros (roots in u) at v on the y-axis DFT grid.
enum class ZeroAxis { v_zeros, u_zeros };

const char* zero_axis_name(ZeroAxis axis);

struct BlurZeroSet {
  ZeroAxis axis = ZeroAxis::v_zeros;
  /// zeros[j]: the blur zeros at grid point e^{2 pi i j / zeros.size()}.
  std::vector<std::vector<CBig>> zeros;
  int expected_count = 0;
  /// Grid points where the flagged count differed from expected_count and
  /// the lowest-scoring branches were taken instead.
  std::vector<int> coerced_points;
};

/// Classifies the branches at every grid point of the relevant axis and keeps
/// the `expected_count` blur zeros. `grid_len` defaults to rows(img) for
/// v_zeros and cols(img) for u_zeros. The sampling plan must put sample
/// point 0 on the grid point (rho = 1 for rotational stepping).
BlurZeroSet collect_zeros(const ComplexImage& img, const CEConfig& cfg, ZeroAxis axis, int expected_count,
                          const PrecisionContext& ctx, size_t grid_len = 0);
BlurZeroSet collect_zeros(const Image& img, const CEConfig& cfg, ZeroAxis axis, int expected_count,
                          const PrecisionContext& ctx, size_t grid_len = 0);

/// Divides every slice on the axis grid by its blur zeros and inverse
/// transforms the quotients: v_zeros removes expected_count columns,
/// u_zeros removes expected_count rows.
ComplexImage deflate_axis(const ComplexImage& img, const BlurZeroSet& zeros, const PrecisionContext& ctx);
/// Real-valued variant; throws RestoreError when the discarded imaginary
/// parts exceed 1e-6 of the largest pixel.
Image deflate_axis(const Image& img, const BlurZeroSet& zeros, const PrecisionContext& ctx);

enum class RestoreMode { sequential, literal };

const char* mode_name(RestoreMode mode);

struct PointNote {
  std::string stage;
  int index = 0;
};

struct RestorationResult {
  Image restored;
  double max_imag_residual = 0.0;
  CBig normalization;
  RestoreMode mode = RestoreMode::sequential;
  int v_zero_count = 0;
  int u_zero_count = 0;
  /// Detection angles that were skipped.
  std::vector<PointNote> skipped_points;
  /// Grid points where the zero count was coerced.
  std::vector<PointNote> coerced_points;
};

/// sequential: detect and deflate the v zeros, re-detect on the intermediate
/// and deflate its u zeros. literal: divide the transform on the output-size
/// grid by the zeros collected from the observed image on both axes (exact
/// only for separable total blur). Both divide out the normalization
/// sum(unnormalized) / sum(observed), i.e. assume the total blur has unit
/// mass.
RestorationResult restore(const Image& img, const CEConfig& cfg, RestoreMode mode, const PrecisionContext& ctx);

struct Metrics {
  double max_abs_diff = 0.0;
  double rms_diff = 0.0;
  double correlation = 0.0;
};

/// Throws std::invalid_argument on a dimension mismatch.
Metrics verify(const Image& restored, const Image& reference);

}  // namespace cedeconv::restore
