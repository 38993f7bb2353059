#include "support.hpp"

#include "cedeconv/cedetect/cedetect.hpp"
#include "cedeconv/imagez/scene.hpp"

#include <gtest/gtest.h>

namespace cedeconv::testing {
namespace {

using cedetect::CEConfig;
using cedetect::CEForm;
using cedetect::CESize;
using imagez::Image;
using zerotrack::RootBranch;

const PrecisionContext ctx = default_ctx();
const mpfr_prec_t bits = ctx.bits();

CBig c(double re, double im) { return CBig(re, im, bits); }

RootBranch make_branch(std::vector<CBig> points, std::vector<CBig> values) {
  RootBranch b;
  b.residuals.assign(values.size(), 0.0);
  b.points = std::move(points);
  b.values = std::move(values);
  return b;
}

Image random_blur(Rng& rng, size_t rows, size_t cols) {
  Image h(rows, cols);
  for (size_t x = 0; x < rows; ++x) {
    for (size_t y = 0; y < cols; ++y) h.at(x, y) = rng.uniform(0.05, 1.0);
  }
  return h;
}

TEST(CESize, ParseAndValidate) {
  const auto s = CESize::parse("2x3");
  EXPECT_EQ(s.m, 2);
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.str(), "2x3");
  EXPECT_THROW(CESize::parse("2by3"), std::invalid_argument);
  EXPECT_THROW(CESize::parse("1x1"), std::invalid_argument);
  EXPECT_THROW(CESize::parse("0x4"), std::invalid_argument);
}

TEST(CEConfig, DefaultsAndValidation) {
  const auto cfg = CEConfig::for_size(CESize{2, 3});
  EXPECT_EQ(cfg.plan.count, 6);
  EXPECT_DOUBLE_EQ(cfg.scale, 1e50);
  EXPECT_DOUBLE_EQ(cfg.tau, 5.0);
  EXPECT_EQ(cfg.sweep_count, 64);
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.plan.count = 5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.scale = 0.5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.tau = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(BuildD, OneByTwoIsVandermonde) {
  const auto b = make_branch({c(1, 0), c(0, 1)}, {c(0.3, 0.1), c(-0.7, 0.2)});
  const auto D = cedetect::build_D(b, CESize{1, 2}, CEForm::u_form, bits);
  EXPECT_EQ(D.at(0, 0), c(1, 0));
  EXPECT_EQ(D.at(0, 1), c(0.3, 0.1));
  EXPECT_EQ(D.at(1, 0), c(1, 0));
  EXPECT_EQ(D.at(1, 1), c(-0.7, 0.2));
  EXPECT_LT(log10_diff(cedetect::ce_value(b, CESize{1, 2}, CEForm::u_form, ctx), c(-0.7, 0.2) - c(0.3, 0.1)),
            -(ctx.digits - 5));
}

TEST(BuildD, ConstantBranchGivesExactZero) {
  const auto b = make_branch({c(1, 0), c(0, 1)}, {c(-0.5, 0), c(-0.5, 0)});
  EXPECT_TRUE(cedetect::ce_value(b, CESize{1, 2}, CEForm::u_form, ctx).is_zero());
}

TEST(BuildD, TwoByTwoColumnPattern) {
  Rng rng(1);
  std::vector<CBig> pts, vals;
  for (int l = 0; l < 4; ++l) {
    pts.push_back(rng.on_circle(bits));
    vals.push_back(rng.in_disc(bits));
  }
  const auto D = cedetect::build_D(make_branch(pts, vals), CESize{2, 2}, CEForm::u_form, bits);
  for (size_t l = 0; l < 4; ++l) {
    EXPECT_EQ(D.at(l, 0), c(1, 0));
    EXPECT_EQ(D.at(l, 1), vals[l]);
    EXPECT_EQ(D.at(l, 2), pts[l]);
    EXPECT_LT(log10_diff(D.at(l, 3), pts[l] * vals[l]), -(ctx.digits - 2));
  }
}

TEST(BuildD, VFormSwapsExponentRoles) {
  Rng rng(2);
  std::vector<CBig> pts, vals;
  for (int l = 0; l < 6; ++l) {
    pts.push_back(rng.on_circle(bits));
    vals.push_back(rng.in_disc(bits));
  }
  const CESize size{2, 3};
  const auto D = cedetect::build_D(make_branch(pts, vals), size, CEForm::v_form, bits);
  for (size_t l = 0; l < 6; ++l) {
    for (unsigned y = 0; y < 3; ++y) {
      for (unsigned x = 0; x < 2; ++x) {
        const CBig want = numerics::pow_int(pts[l], y) * numerics::pow_int(vals[l], x);
        EXPECT_LT(log10_diff(D.at(l, y * 2 + x), want), -(ctx.digits - 5));
      }
    }
  }
}

TEST(BuildD, CountMismatchThrows) {
  const auto b = make_branch({c(1, 0), c(0, 1)}, {c(0.3, 0), c(0.4, 0)});
  EXPECT_THROW(cedetect::build_D(b, CESize{2, 3}, CEForm::u_form, bits), std::invalid_argument);
}

TEST(BuildD, VandermondeDeterminantIsProductOfDifferences) {
  Rng rng(3);
  for (int n = 2; n <= 6; ++n) {
    std::vector<CBig> pts, vals;
    for (int l = 0; l < n; ++l) {
      pts.push_back(rng.on_circle(bits));
      vals.push_back(rng.in_disc(bits));
    }
    CBig want(1.0, 0.0, bits);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) want *= vals[static_cast<size_t>(j)] - vals[static_cast<size_t>(i)];
    }
    const CESize size{1, n};
    EXPECT_LT(log10_rel(cedetect::ce_value(make_branch(pts, vals), size, CEForm::u_form, ctx), want),
              -(ctx.digits - 10));
    vals[1] = vals[0];
    EXPECT_TRUE(cedetect::ce_value(make_branch(pts, vals), size, CEForm::u_form, ctx).is_zero());
  }
}

TEST(Score, Examples) {
  EXPECT_EQ(cedetect::score(0.0, 1e50), 0.0);
  EXPECT_NEAR(cedetect::score(1e-50, 1e50), std::log10(2.0), 1e-12);
  EXPECT_NEAR(cedetect::score(1.0, 1e50), 50.0, 1e-12);
  EXPECT_NEAR(cedetect::score(BigReal::pow10(-50, bits), 1e50), std::log10(2.0), 1e-12);
}

// Below ~1e-66 the double result rounds to exactly 0.
TEST(Score, Monotone) {
  double prev = -1.0;
  for (int e = -200; e <= 10; ++e) {
    const double s = cedetect::score(BigReal::pow10(e, bits), 1e50);
    if (e > -60) {
      EXPECT_GT(s, prev) << "exponent " << e;
    } else {
      EXPECT_GE(s, prev) << "exponent " << e;
    }
    prev = s;
  }
}

TEST(CeValue, TrueZerosOfSmallerBlursVanish) {
  Rng rng(4);
  const auto cfg = CEConfig::for_size(CESize{2, 3});
  const std::vector<std::pair<size_t, size_t>> sizes{{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  for (auto [r, k] : sizes) {
    for (int i = 0; i < 10; ++i) {
      const auto scores = cedetect::ce_oracle(random_blur(rng, r, k), cfg, CEForm::u_form, rng.uniform(0, 6.28), ctx);
      ASSERT_EQ(scores.size(), k - 1);
      for (const auto& s : scores) {
        EXPECT_LE(s.abs_e, ctx.pow10(-ctx.digits / 3)) << r << "x" << k;
        EXPECT_TRUE(s.flagged);
      }
    }
  }
}

TEST(CeValue, OneByFiveConstantBranchIsZero) {
  Rng rng(5);
  const auto cfg = CEConfig::for_size(CESize{2, 3});
  const auto scores = cedetect::ce_oracle(random_blur(rng, 1, 5), cfg, CEForm::u_form, 0.7, ctx);
  ASSERT_EQ(scores.size(), 4u);
  for (const auto& s : scores) EXPECT_LE(s.abs_e, ctx.pow10(-(ctx.digits - 10)));
}

// At the default dphi six consecutive zero-values of a blur-free slice are
// so close that |E| falls to ~1e-45; the 10^-(digits/6) separation holds at
// a coarser step.
TEST(CeValue, BlurFreeImagesStayAwayFromZeroAtCoarseStep) {
  Rng rng(6);
  auto cfg = CEConfig::for_size(CESize{2, 3});
  cfg.plan.dphi = std::numbers::pi / 16;
  for (int i = 0; i < 50; ++i) {
    const Image img = rng.image(6, 6);
    for (auto form : {CEForm::u_form, CEForm::v_form}) {
      const auto eval =
          cedetect::evaluate_angle(imagez::ComplexImage(img, bits), BigReal(rng.uniform(0, 6.28), bits), cfg, form, ctx);
      for (const auto& s : eval.scores) EXPECT_GT(s.abs_e, ctx.pow10(-ctx.digits / 6)) << "image " << i;
    }
  }
}

TEST(CeValue, BlurFreeImagesAreNotFlaggedAtDefaultStep) {
  Rng rng(7);
  const auto cfg = CEConfig::for_size(CESize{2, 3});
  for (int i = 0; i < 5; ++i) {
    const Image img = rng.image(6, 6);
    for (auto form : {CEForm::u_form, CEForm::v_form}) {
      EXPECT_EQ(cedetect::detect(img, cfg, form, ctx).consensus_count, 0) << "image " << i;
    }
  }
}

// Property: every branch of a blur-free image scores above tau + 5.
TEST(CeValue, BlurFreeScoresClearThresholdByFive) {
  Rng rng(9);
  auto cfg = CEConfig::for_size(CESize{2, 3});
  cfg.sweep_count = 4;
  double lowest = 1e300;
  for (int i = 0; i < 20; ++i) {
    const Image img = rng.image(6, 6);
    for (auto form : {CEForm::u_form, CEForm::v_form}) {
      for (const auto& a : cedetect::detect(img, cfg, form, ctx).angles) {
        for (const auto& s : a.branches) lowest = std::min(lowest, s.score);
      }
    }
  }
  EXPECT_GT(lowest, cfg.tau + 5);
}

TEST(CeOracle, Examples) {
  Rng rng(8);
  const auto cfg = CEConfig::for_size(CESize{2, 3});
  const auto two = cedetect::ce_oracle(random_blur(rng, 2, 2), cfg, CEForm::u_form, 1.0, ctx);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(two[0].flagged);
  EXPECT_TRUE(cedetect::ce_oracle(random_blur(rng, 2, 1), cfg, CEForm::u_form, 1.0, ctx).empty());
  const auto four = cedetect::ce_oracle(random_blur(rng, 1, 4), cfg, CEForm::u_form, 1.0, ctx);
  ASSERT_EQ(four.size(), 3u);
  for (const auto& s : four) EXPECT_TRUE(s.flagged);
  // The v_form mirror: 1 x k blurs have no gamma zeros.
  EXPECT_TRUE(cedetect::ce_oracle(random_blur(rng, 1, 3), cfg, CEForm::v_form, 1.0, ctx).empty());
  const auto col = cedetect::ce_oracle(random_blur(rng, 2, 1), cfg, CEForm::v_form, 1.0, ctx);
  ASSERT_EQ(col.size(), 1u);
  EXPECT_TRUE(col[0].flagged);
}

class SceneDetect : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { scene_ = new imagez::TestScene(imagez::gen_test_scene(0)); }
  static void TearDownTestSuite() { delete scene_; }
  static CEConfig config(int sweep) {
    auto cfg = CEConfig::for_size(CESize{2, 3});
    cfg.sweep_count = sweep;
    return cfg;
  }
  static imagez::TestScene* scene_;
};

imagez::TestScene* SceneDetect::scene_ = nullptr;

TEST_F(SceneDetect, UFormFindsFourZeros) {
  const auto report = cedetect::detect(scene_->observed, config(8), CEForm::u_form, ctx);
  EXPECT_EQ(report.consensus_count, 4);
  for (const auto& a : report.angles) {
    EXPECT_EQ(a.branches.size(), 43u);
    int flagged = 0;
    for (const auto& s : a.branches) {
      EXPECT_EQ(s.flagged, s.score < report.config.tau);
      flagged += s.flagged;
    }
    EXPECT_EQ(flagged, a.flagged_count);
  }
}

TEST_F(SceneDetect, VFormFindsThreeZeros) {
  EXPECT_EQ(cedetect::detect(scene_->observed, config(8), CEForm::v_form, ctx).consensus_count, 3);
}

TEST_F(SceneDetect, Deterministic) {
  const auto a = cedetect::detect(scene_->observed, config(2), CEForm::u_form, ctx);
  const auto b = cedetect::detect(scene_->observed, config(2), CEForm::u_form, ctx);
  ASSERT_EQ(a.angles.size(), b.angles.size());
  for (size_t j = 0; j < a.angles.size(); ++j) {
    ASSERT_EQ(a.angles[j].branches.size(), b.angles[j].branches.size());
    for (size_t k = 0; k < a.angles[j].branches.size(); ++k) {
      EXPECT_EQ(a.angles[j].branches[k].abs_e, b.angles[j].branches[k].abs_e);
    }
  }
}

TEST(Detect, DegreeDropRetriesAtHalfStep) {
  // 2x3 blur whose leading v coefficient vanishes at u = -1, i.e. at the
  // sweep angle pi for an even sweep.
  const Image h = Image::from_rows({{1, 2, 1}, {1, 3, 1}});
  auto cfg = CEConfig::for_size(CESize{2, 3});
  cfg.sweep_count = 4;
  const auto report = cedetect::detect(h, cfg, CEForm::u_form, ctx);
  const auto& at_pi = report.angles[2];
  EXPECT_TRUE(at_pi.shifted);
  EXPECT_FALSE(at_pi.skipped);
  EXPECT_NEAR(at_pi.phi, std::numbers::pi + cfg.plan.dphi / 2, 1e-15);
  EXPECT_FALSE(report.angles[1].shifted);
  EXPECT_EQ(report.consensus_count, 2);
}

}  // namespace
}  // namespace cedeconv::testing
