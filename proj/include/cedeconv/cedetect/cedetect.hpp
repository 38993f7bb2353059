#pragma once

#include "cedeconv/numerics/matrix.hpp"
#include "cedeconv/zerotrack/zerotrack.hpp"

#include <string>
#include <vector>

namespace cedeconv::cedetect {

using numerics::BigReal;
using numerics::CBig;
using numerics::CMatrix;
using numerics::PrecisionContext;
using zerotrack::ComplexImage;
using zerotrack::Image;
using zerotrack::RootAxis;
using zerotrack::RootBranch;
using zerotrack::SamplingPlan;

/// Blur size m x n the determinant is built for (m along x/u, n along y/v).
struct CESize {
  int m = 2;
  int n = 3;

  int order() const { return m * n; }
  void validate() const;
  /// Parses "MxN".
  static CESize parse(const std::string& text);
  std::string str() const;
};

/// u_form tests beta zeros (roots in v at fixed u); v_form tests gamma zeros
/// (roots in u at fixed v).
enum class CEForm { u_form, v_form };

RootAxis root_axis(CEForm form);
const char* form_name(CEForm form);

struct CEConfig {
  CESize size;
  SamplingPlan plan;
  double scale = 1e50;
  double tau = 5.0;
  int sweep_count = 64;

  /// Default configuration for `size`, with plan.count = m*n.
  static CEConfig for_size(CESize size);
  void validate() const;
};

struct BranchScore {
  int branch = 0;
  BigReal abs_e;
  double score = 0.0;
  bool flagged = false;
  bool ambiguous = false;
};

struct AngleResult {
  int phi_index = 0;
  /// Angle actually evaluated (shifted by dphi/2 after a retry).
  double phi = 0.0;
  bool shifted = false;
  bool skipped = false;
  int flagged_count = 0;
  std::vector<BranchScore> branches;
};

struct CEReport {
  CEForm axis = CEForm::u_form;
  CEConfig config;
  int digits = 0;
  std::vector<AngleResult> angles;
  std::vector<int> skipped_angles;
  int consensus_count = 0;
};

/// Row l, for u_form: column x*n + y holds u_l^x * beta_l^y. For v_form:
/// column y*m + x holds v_l^y * gamma_l^x. Requires one sample per row.
CMatrix build_D(const RootBranch& branch, const CESize& size, CEForm form, mpfr_prec_t bits);

/// E = det(D).
CBig ce_value(const RootBranch& branch, const CESize& size, CEForm form, const PrecisionContext& ctx);

/// log10(absE * scale + 1).
double score(const BigReal& abs_e, double scale);
double score(double abs_e, double scale);

struct AngleEvaluation {
  std::vector<RootBranch> branches;
  std::vector<BranchScore> scores;
};

/// Tracks all branches at one base angle and scores each.
AngleEvaluation evaluate_angle(const ComplexImage& img, const BigReal& phi, const CEConfig& cfg, CEForm form,
                               const PrecisionContext& ctx);

/// Sweeps phi_j = 2*pi*j/sweep_count. An angle whose slices lose degree (or
/// whose roots fail to converge) is retried once at phi_j + dphi/2 and then
/// skipped. consensus_count is the most frequent flagged count over the
/// evaluated angles; ties go to the smaller count.
CEReport detect(const ComplexImage& img, const CEConfig& cfg, CEForm form, const PrecisionContext& ctx);
CEReport detect(const Image& img, const CEConfig& cfg, CEForm form, const PrecisionContext& ctx);

/// Scores the zero branches of a known blur, computed from the blur itself.
/// Empty when the blur has no zeros along the form's root axis (r x 1 blurs
/// for u_form, 1 x k for v_form).
std::vector<BranchScore> ce_oracle(const Image& blur, const CEConfig& cfg, CEForm form, double phi,
                                   const PrecisionContext& ctx);

}  // namespace cedeconv::cedetect
