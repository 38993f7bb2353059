#include "cedeconv/cedetect/cedetect.hpp"
#include "cedeconv/imagez/transform.hpp"
#include "cedeconv/parallel.hpp"

#include <map>

namespace cedeconv::cedetect {

AngleEvaluation evaluate_angle(const ComplexImage& img, const BigReal& phi, const CEConfig& cfg, CEForm form,
                               const PrecisionContext& ctx) {
  AngleEvaluation eval;
  eval.branches = zerotrack::branches(img, phi, cfg.plan, root_axis(form), ctx);
  eval.scores.reserve(eval.branches.size());
  for (const auto& b : eval.branches) {
    BranchScore s;
    s.branch = b.branch_index;
    s.abs_e = numerics::abs(ce_value(b, cfg.size, form, ctx));
    s.score = score(s.abs_e, cfg.scale);
    s.flagged = s.score < cfg.tau;
    s.ambiguous = b.ambiguous;
    eval.scores.push_back(std::move(s));
  }
  return eval;
}

namespace {

int consensus(const std::vector<AngleResult>& angles) {
  std::map<int, int> freq;
  for (const auto& a : angles) {
    if (!a.skipped) ++freq[a.flagged_count];
  }
  int best = 0, best_freq = 0;
  for (const auto& [count, f] : freq) {
    if (f > best_freq) {
      best = count;
      best_freq = f;
    }
  }
  return best;
}

}  // namespace

CEReport detect(const ComplexImage& img, const CEConfig& cfg, CEForm form, const PrecisionContext& ctx) {
  cfg.validate();
  ctx.validate();
  const mpfr_prec_t bits = ctx.bits();
  const size_t sweep = static_cast<size_t>(cfg.sweep_count);

  CEReport report;
  report.axis = form;
  report.config = cfg;
  report.digits = ctx.digits;
  report.angles.resize(sweep);

  parallel_for(sweep, [&](size_t j) {
    AngleResult& out = report.angles[j];
    out.phi_index = static_cast<int>(j);
    BigReal phi = imagez::grid_angle(j, sweep, bits);
    for (int attempt = 0; attempt < 2; ++attempt) {
      if (attempt == 1) {
        phi += BigReal(cfg.plan.dphi / 2.0, bits);
        out.shifted = true;
      }
      try {
        AngleEvaluation eval = evaluate_angle(img, phi, cfg, form, ctx);
        out.phi = phi.to_double();
        out.branches = std::move(eval.scores);
        out.flagged_count = 0;
        for (const auto& s : out.branches) out.flagged_count += s.flagged ? 1 : 0;
        return;
      } catch (const zerotrack::DegreeDropError&) {
      } catch (const numerics::RootFindingError&) {
      }
    }
    out.phi = phi.to_double();
    out.skipped = true;
  });

  for (const auto& a : report.angles) {
    if (a.skipped) report.skipped_angles.push_back(a.phi_index);
  }
  report.consensus_count = consensus(report.angles);
  return report;
}

CEReport detect(const Image& img, const CEConfig& cfg, CEForm form, const PrecisionContext& ctx) {
  return detect(ComplexImage(img, ctx.bits()), cfg, form, ctx);
}

std::vector<BranchScore> ce_oracle(const Image& blur, const CEConfig& cfg, CEForm form, double phi,
                                   const PrecisionContext& ctx) {
  const size_t extent = form == CEForm::u_form ? blur.cols() : blur.rows();
  if (extent < 2) return {};
  return evaluate_angle(ComplexImage(blur, ctx.bits()), BigReal(phi, ctx.bits()), cfg, form, ctx).scores;
}

}  // namespace cedeconv::cedetect
