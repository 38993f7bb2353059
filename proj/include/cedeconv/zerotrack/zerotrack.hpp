#pragma once

#include "cedeconv/imagez/image.hpp"
#include "cedeconv/numerics/precision.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cedeconv::zerotrack {

using imagez::ComplexImage;
using imagez::Image;
using numerics::BigReal;
using numerics::CBig;
using numerics::CPoly;
using numerics::PrecisionContext;

enum class Direction { clockwise, counterclockwise };

/// rotational: u_l = rho * e^{i(phi -/+ l*dphi)}.
/// additive:   u_l = e^{i phi} + l * rho * e^{-/+ i dphi}.
enum class Stepping { rotational, additive };

struct SamplingPlan {
  double rho = 1.0;
  double dphi = std::numbers::pi / 2150.0;
  int count = 6;
  Direction direction = Direction::clockwise;
  Stepping stepping = Stepping::rotational;

  void validate() const;
};

/// Which roots a branch follows: roots in v of vslice (the beta zeros) or
/// roots in u of uslice (the gamma zeros).
enum class RootAxis { v_roots, u_roots };

/// One zero-value followed across the sample points.
struct RootBranch {
  std::vector<CBig> points;
  std::vector<CBig> values;
  /// Normalized residual of each value as a root of its slice.
  std::vector<double> residuals;
  int branch_index = 0;
  /// A neighbouring root lay within the cluster radius during matching.
  bool ambiguous = false;
};

class DegreeDropError : public std::runtime_error {
 public:
  DegreeDropError(const std::string& what, int point_index) : std::runtime_error(what), point_index_(point_index) {}
  int point_index() const { return point_index_; }

 private:
  int point_index_;
};

std::vector<CBig> sample_points(const BigReal& phi, const SamplingPlan& plan, const PrecisionContext& ctx);
std::vector<CBig> sample_points(double phi, const SamplingPlan& plan, const PrecisionContext& ctx);

/// perm[i] is the index in `next` matched to prev[i]. Distances are chordal
/// (on the Riemann sphere) so a zero crossing infinity stays on its branch.
/// Greedy assignment by
/// increasing distance, then pairwise swaps until no swap lowers the total.
std::vector<size_t> match_roots(const std::vector<CBig>& prev, const std::vector<CBig>& next);

struct MatchResult {
  std::vector<size_t> perm;
  /// Per prev index: the two nearest candidates were within the radius.
  std::vector<bool> ambiguous;
  bool any_ambiguous = false;
};

/// match_roots plus ambiguity detection; any ambiguity switches to an
/// optimal (Hungarian) assignment.
MatchResult match_roots_checked(const std::vector<CBig>& prev, const std::vector<CBig>& next,
                                const BigReal& ambiguity_radius);

/// Optimal assignment minimizing the summed distance.
std::vector<size_t> optimal_assignment(const std::vector<CBig>& prev, const std::vector<CBig>& next);

/// The slice polynomial the branches of `axis` are roots of.
CPoly slice(const ComplexImage& img, const CBig& point, RootAxis axis);

/// Solves every slice root at each sample point and links them into branches
/// (one per root at point 0). Throws DegreeDropError when the slice degree at
/// some point differs from point 0, and std::invalid_argument when point 0 has
/// degree < 1.
std::vector<RootBranch> branches(const ComplexImage& img, const BigReal& phi, const SamplingPlan& plan, RootAxis axis,
                                 const PrecisionContext& ctx);
std::vector<RootBranch> branches(const Image& img, double phi, const SamplingPlan& plan, RootAxis axis,
                                 const PrecisionContext& ctx);

}  // namespace cedeconv::zerotrack
