#include "cedeconv/zerotrack/zerotrack.hpp"

#include <cmath>

namespace cedeconv::zerotrack {

void SamplingPlan::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("sampling plan: rho must be positive");
  if (!(dphi > 0.0) || !std::isfinite(dphi)) throw std::invalid_argument("sampling plan: dphi must be positive");
  if (count < 2) throw std::invalid_argument("sampling plan: count must be >= 2");
  if (!(dphi * count < 2.0 * std::numbers::pi)) throw std::invalid_argument("sampling plan: dphi*count must be < 2*pi");
}

std::vector<CBig> sample_points(const BigReal& phi, const SamplingPlan& plan, const PrecisionContext& ctx) {
  plan.validate();
  const mpfr_prec_t bits = ctx.bits();
  const double sense = plan.direction == Direction::clockwise ? -1.0 : 1.0;
  const BigReal rho(plan.rho, bits);
  const BigReal dphi(plan.dphi, bits);

  std::vector<CBig> pts;
  pts.reserve(static_cast<size_t>(plan.count));
  if (plan.stepping == Stepping::rotational) {
    for (int l = 0; l < plan.count; ++l) {
      BigReal angle = phi + dphi * (sense * l);
      pts.push_back(CBig::polar(rho, angle));
    }
  } else {
    const CBig base = CBig::expi(phi);
    const CBig step = CBig::polar(rho, dphi * sense);
    for (int l = 0; l < plan.count; ++l) pts.push_back(base + step * BigReal(static_cast<double>(l), bits));
  }
  return pts;
}

std::vector<CBig> sample_points(double phi, const SamplingPlan& plan, const PrecisionContext& ctx) {
  return sample_points(BigReal(phi, ctx.bits()), plan, ctx);
}

}  // namespace cedeconv::zerotrack
