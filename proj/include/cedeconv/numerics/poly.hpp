#pragma once

#include "cedeconv/numerics/cbig.hpp"
#include "cedeconv/numerics/precision.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cedeconv::numerics {

/// Univariate polynomial with coefficients in ascending degree.
/// The zero polynomial has an empty coefficient list and degree -1.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<CBig> coeffs) : coeffs_(std::move(coeffs)) {}
  /// Real coefficients promoted to `bits`.
  static CPoly from_real(const std::vector<double>& coeffs, mpfr_prec_t bits);

  const std::vector<CBig>& coeffs() const { return coeffs_; }
  std::vector<CBig>& coeffs() { return coeffs_; }
  const CBig& operator[](size_t k) const { return coeffs_[k]; }
  size_t size() const { return coeffs_.size(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const CBig& leading() const { return coeffs_.back(); }

  BigReal max_abs_coeff() const;

  /// Drops leading coefficients whose magnitude is at most
  /// `rel_tol * max|coeff|`; an all-negligible polynomial becomes empty.
  CPoly trimmed(const BigReal& rel_tol) const;

 private:
  std::vector<CBig> coeffs_;
};

/// Horner evaluation.
CBig poly_eval(const CPoly& p, const CBig& z);

/// Coefficient-list convolution.
CPoly poly_mul(const CPoly& p, const CPoly& q);

/// Residual of `z` as a root of `p`, normalized by max|coeff|. For |z| > 1 the
/// reversed polynomial is evaluated at 1/z, i.e. |p(z)| / (|z|^deg max|coeff|).
BigReal normalized_residual(const CPoly& p, const CBig& z);

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, double worst_residual)
      : std::runtime_error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

class DeflationError : public std::runtime_error {
 public:
  DeflationError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct RootSolverOptions {
  int max_iterations = 500;
  /// Seed for the perturbed-circle start; fixed so results are reproducible.
  unsigned long long seed = 0x9e3779b97f4a7c15ULL;
};

/// All roots of `p` (after trimming by ctx.trim_tol), repeated by multiplicity.
/// Aberth-Ehrlich simultaneous iteration: a double-precision pass from a
/// perturbed circle, then full-precision iteration and a Newton polish.
/// Every returned root has normalized_residual <= ctx.root_tol.
std::vector<CBig> poly_roots(const CPoly& p, const PrecisionContext& ctx, const RootSolverOptions& opts = {});

/// Full-precision Aberth iteration from caller-supplied starting points
/// (one per root), followed by the same polish and residual check.
std::vector<CBig> poly_roots_from(const CPoly& p, std::vector<CBig> start, const PrecisionContext& ctx,
                                  const RootSolverOptions& opts = {});

/// Divides out (z - root). Requires normalized_residual(p, root) <=
/// 10^-(digits/4). Forward synthetic division for |root| <= 1, backward
/// division otherwise.
CPoly poly_deflate(const CPoly& p, const CBig& root, const PrecisionContext& ctx);

}  // namespace cedeconv::numerics
