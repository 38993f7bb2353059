#pragma once

#include "cedeconv/imagez/image.hpp"

#include <cstdint>
#include <vector>

namespace cedeconv::imagez {

struct SceneOptions {
  /// Outer-product 2x2 and 2x3 kernels instead of the default non-separable ones.
  bool separable = false;
};

/// Synthetic stand-in for the blurred-photograph experiment: a 40x40 true
/// image with integer pixels in [0, 255], four blurs of sizes 1x2, 2x1, 2x2
/// and 2x3, and the 43x44 observed image they produce.
///
/// Blur entries are strictly positive dyadic rationals summing to one, so
/// every convolution is exact in double precision. No blur transform vanishes
/// on the 40x40 grid of unit roots.
struct TestScene {
  Image truth;
  std::vector<Image> blurs;
  Image observed;
};

TestScene gen_test_scene(std::uint64_t seed, const SceneOptions& opts = {});

/// Product of the bottom-right entries of the blurs: the scale left on the
/// true image after deflating all blur zeros by monic factors.
double leading_coefficient_product(const std::vector<Image>& blurs);

}  // namespace cedeconv::imagez
