#include "cedeconv/zerotrack/zerotrack.hpp"

#include <sstream>

namespace cedeconv::zerotrack {

CPoly slice(const ComplexImage& img, const CBig& point, RootAxis axis) {
  return axis == RootAxis::v_roots ? imagez::vslice(img, point) : imagez::uslice(img, point);
}

std::vector<RootBranch> branches(const ComplexImage& img, const BigReal& phi, const SamplingPlan& plan, RootAxis axis,
                                 const PrecisionContext& ctx) {
  const std::vector<CBig> pts = sample_points(phi, plan, ctx);
  const BigReal trim = ctx.trim_tolerance();
  const BigReal radius = ctx.cluster_radius();

  std::vector<RootBranch> out;
  int degree0 = -1;
  for (size_t l = 0; l < pts.size(); ++l) {
    const CPoly poly = slice(img, pts[l], axis).trimmed(trim);
    if (l == 0) {
      degree0 = poly.degree();
      if (degree0 < 1) throw std::invalid_argument("branches: slice has degree < 1, no zero-values to track");
    } else if (poly.degree() != degree0) {
      std::ostringstream msg;
      msg << "branches: slice degree changed from " << degree0 << " to " << poly.degree() << " at sample point " << l;
      throw DegreeDropError(msg.str(), static_cast<int>(l));
    }

    std::vector<CBig> roots = numerics::poly_roots(poly, ctx);

    if (l == 0) {
      out.resize(roots.size());
      for (size_t i = 0; i < roots.size(); ++i) {
        auto& b = out[i];
        b.branch_index = static_cast<int>(i);
        b.points.reserve(pts.size());
        b.values.reserve(pts.size());
        b.residuals.reserve(pts.size());
        b.points.push_back(pts[0]);
        b.residuals.push_back(numerics::normalized_residual(poly, roots[i]).to_double());
        b.values.push_back(std::move(roots[i]));
      }
      continue;
    }

    std::vector<CBig> prev;
    prev.reserve(out.size());
    for (const auto& b : out) prev.push_back(b.values.back());
    const MatchResult match = match_roots_checked(prev, roots, radius);
    for (size_t i = 0; i < out.size(); ++i) {
      auto& b = out[i];
      const CBig& value = roots[match.perm[i]];
      b.points.push_back(pts[l]);
      b.residuals.push_back(numerics::normalized_residual(poly, value).to_double());
      b.values.push_back(value);
      b.ambiguous = b.ambiguous || match.ambiguous[i];
    }
  }
  return out;
}

std::vector<RootBranch> branches(const Image& img, double phi, const SamplingPlan& plan, RootAxis axis,
                                 const PrecisionContext& ctx) {
  return branches(ComplexImage(img, ctx.bits()), BigReal(phi, ctx.bits()), plan, axis, ctx);
}

}  // namespace cedeconv::zerotrack
