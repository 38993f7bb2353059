#include "cedeconv/restore/restore.hpp"

#include <cmath>

namespace cedeconv::restore {

Metrics verify(const Image& restored, const Image& reference) {
  if (restored.rows() != reference.rows() || restored.cols() != reference.cols()) {
    throw std::invalid_argument("verify: dimension mismatch (" + std::to_string(restored.rows()) + "x" +
                                std::to_string(restored.cols()) + " vs " + std::to_string(reference.rows()) + "x" +
                                std::to_string(reference.cols()) + ")");
  }
  const auto& a = restored.pixels();
  const auto& b = reference.pixels();
  const double count = static_cast<double>(a.size());
  Metrics m;
  double sq = 0.0, mean_a = 0.0, mean_b = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    m.max_abs_diff = std::max(m.max_abs_diff, std::abs(d));
    sq += d * d;
    mean_a += a[k];
    mean_b += b[k];
  }
  m.rms_diff = count > 0 ? std::sqrt(sq / count) : 0.0;
  mean_a /= count;
  mean_b /= count;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    cov += (a[k] - mean_a) * (b[k] - mean_b);
    var_a += (a[k] - mean_a) * (a[k] - mean_a);
    var_b += (b[k] - mean_b) * (b[k] - mean_b);
  }
  if (var_a > 0.0 && var_b > 0.0) {
    m.correlation = cov / std::sqrt(var_a * var_b);
  } else {
    // Flat images: correlated only if they coincide.
    m.correlation = m.max_abs_diff == 0.0 ? 1.0 : 0.0;
  }
  return m;
}

}  // namespace cedeconv::restore
