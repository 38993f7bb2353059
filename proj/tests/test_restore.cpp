#include "support.hpp"

#include "cedeconv/imagez/scene.hpp"
#include "cedeconv/restore/restore.hpp"

#include <gtest/gtest.h>

namespace cedeconv::testing {
namespace {

using cedetect::CEConfig;
using cedetect::CESize;
using imagez::Image;
using restore::RestoreMode;
using restore::ZeroAxis;

const PrecisionContext ctx = default_ctx();
const mpfr_prec_t bits = ctx.bits();

CEConfig config(int sweep) {
  auto cfg = CEConfig::for_size(CESize{2, 3});
  cfg.sweep_count = sweep;
  return cfg;
}

// Unit-mass 1x2 blur with its v zero at -1/3.
const Image kRowBlur = Image::from_rows({{0.25, 0.75}});

TEST(CollectZeros, RowBlurZeroAtEveryGridPoint) {
  Rng rng(11);
  const Image f = rng.image(5, 5, 1, 255);
  const auto zs = restore::collect_zeros(imagez::convolve(f, kRowBlur), config(4), ZeroAxis::v_zeros, 1, ctx);
  ASSERT_EQ(zs.zeros.size(), 5u);
  EXPECT_TRUE(zs.coerced_points.empty());
  for (const auto& at : zs.zeros) {
    ASSERT_EQ(at.size(), 1u);
    EXPECT_LT(log10_diff(at[0], CBig(-1.0, 0.0, bits) / CBig(3.0, 0.0, bits)), -(ctx.digits / 2));
  }
}

TEST(CollectZeros, RejectsNonPositiveCount) {
  const Image g = Image::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_THROW(restore::collect_zeros(g, config(4), ZeroAxis::v_zeros, 0, ctx), std::invalid_argument);
}

TEST(DeflateAxis, RowBlurLeavesScaledImage) {
  Rng rng(12);
  const Image f = rng.image(5, 5, 1, 255);
  const Image g = imagez::convolve(f, kRowBlur);
  const auto zs = restore::collect_zeros(g, config(4), ZeroAxis::v_zeros, 1, ctx);
  const Image out = restore::deflate_axis(g, zs, ctx);
  ASSERT_EQ(out.rows(), 5u);
  ASSERT_EQ(out.cols(), 5u);
  for (size_t x = 0; x < 5; ++x) {
    for (size_t y = 0; y < 5; ++y) EXPECT_NEAR(out.at(x, y), 0.75 * f.at(x, y), 1e-9);
  }
}

TEST(DeflateAxis, ColumnBlurRemovesRows) {
  Rng rng(13);
  const Image f = rng.image(5, 4, 1, 255);
  const Image g = imagez::convolve(f, Image::from_rows({{0.5}, {0.5}}));
  const auto zs = restore::collect_zeros(g, config(4), ZeroAxis::u_zeros, 1, ctx);
  const Image out = restore::deflate_axis(g, zs, ctx);
  ASSERT_EQ(out.rows(), 5u);
  ASSERT_EQ(out.cols(), 4u);
  for (size_t x = 0; x < 5; ++x) {
    for (size_t y = 0; y < 4; ++y) EXPECT_NEAR(out.at(x, y), 0.5 * f.at(x, y), 1e-9);
  }
}

TEST(Restore, SingleRowBlurBothModes) {
  Rng rng(14);
  const Image f = rng.image(6, 6, 1, 255);
  const Image g = imagez::convolve(f, kRowBlur);
  for (auto mode : {RestoreMode::sequential, RestoreMode::literal}) {
    const auto r = restore::restore(g, config(4), mode, ctx);
    EXPECT_EQ(r.v_zero_count, 1);
    EXPECT_EQ(r.u_zero_count, 0);
    EXPECT_LT(restore::verify(r.restored, f).max_abs_diff, 1e-6) << restore::mode_name(mode);
    EXPECT_LT(std::abs(r.normalization.re.to_double() - 0.75), 1e-12);
  }
}

TEST(Restore, BlurFreeImageThrows) {
  Rng rng(15);
  EXPECT_THROW(restore::restore(rng.image(6, 6, 1, 255), config(4), RestoreMode::sequential, ctx),
               restore::RestoreError);
}

TEST(Restore, SequentialRecoversTestScene) {
  const auto scene = imagez::gen_test_scene(1);
  const auto r = restore::restore(scene.observed, config(8), RestoreMode::sequential, ctx);
  EXPECT_EQ(r.v_zero_count, 4);
  EXPECT_EQ(r.u_zero_count, 3);
  ASSERT_EQ(r.restored.rows(), 40u);
  ASSERT_EQ(r.restored.cols(), 40u);
  const auto m = restore::verify(r.restored, scene.truth);
  EXPECT_LT(m.max_abs_diff, 1e-6);
  EXPECT_GT(m.correlation, 1 - 1e-12);
  EXPECT_LT(r.max_imag_residual, 1e-6);
  // Deflating by monic factors leaves the product of the blurs' leading
  // coefficients on the true image.
  EXPECT_NEAR(r.normalization.re.to_double(), imagez::leading_coefficient_product(scene.blurs), 1e-12);
}

TEST(Restore, LiteralRecoversSeparableScene) {
  const auto scene = imagez::gen_test_scene(1, imagez::SceneOptions{.separable = true});
  const auto r = restore::restore(scene.observed, config(8), RestoreMode::literal, ctx);
  ASSERT_EQ(r.restored.rows(), 40u);
  ASSERT_EQ(r.restored.cols(), 40u);
  EXPECT_LT(restore::verify(r.restored, scene.truth).max_abs_diff, 1e-6);
}

TEST(Verify, Examples) {
  Rng rng(16);
  const Image a = rng.image(4, 4);
  const auto same = restore::verify(a, a);
  EXPECT_EQ(same.max_abs_diff, 0.0);
  EXPECT_EQ(same.rms_diff, 0.0);
  EXPECT_NEAR(same.correlation, 1.0, 1e-15);
  Image b = a;
  b.at(2, 1) += 1.0;
  const auto bumped = restore::verify(b, a);
  EXPECT_EQ(bumped.max_abs_diff, 1.0);
  EXPECT_NEAR(bumped.rms_diff, 0.25, 1e-15);
  EXPECT_THROW(restore::verify(a, rng.image(4, 5)), std::invalid_argument);
}

}  // namespace
}  // namespace cedeconv::testing
