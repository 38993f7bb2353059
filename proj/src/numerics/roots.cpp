#include "cedeconv/numerics/poly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

namespace cedeconv::numerics {

namespace {

using cd = std::complex<double>;

// Newton ratio p(z)/p'(z) in double precision. For |z| > 1 the reversed
// polynomial is evaluated at 1/z so high powers of z never overflow.
cd newton_ratio(const std::vector<cd>& c, cd z) {
  const size_t n = c.size() - 1;
  if (std::abs(z) <= 1.0) {
    cd b = c[n], d = 0.0;
    for (size_t k = n; k-- > 0;) {
      d = d * z + b;
      b = b * z + c[k];
    }
    return b / d;
  }
  cd w = 1.0 / z;
  cd b = c[0], d = 0.0;
  for (size_t j = 1; j <= n; ++j) {
    d = d * w + b;
    b = b * w + c[j];
  }
  return z * b / (static_cast<double>(n) * b - w * d);
}

CBig newton_ratio(const CPoly& p, const CBig& z) {
  const size_t n = static_cast<size_t>(p.degree());
  if (norm(z) <= 1.0) {
    CBig b = p[n];
    CBig d(0.0, 0.0, z.precision());
    for (size_t k = n; k-- > 0;) {
      d = d * z;
      d += b;
      b = b * z;
      b += p[k];
    }
    return b / d;
  }
  CBig w = reciprocal(z);
  CBig b = p[0];
  CBig d(0.0, 0.0, z.precision());
  for (size_t j = 1; j <= n; ++j) {
    d = d * w;
    d += b;
    b = b * w;
    b += p[j];
  }
  CBig den = b * BigReal(static_cast<double>(n), z.precision()) - w * d;
  return z * b / den;
}

std::vector<cd> double_stage(const CPoly& p, const RootSolverOptions& opts) {
  const size_t n = static_cast<size_t>(p.degree());
  BigReal scale = p.max_abs_coeff();
  std::vector<cd> c(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    c[k] = {(p[k].re / scale).to_double(), (p[k].im / scale).to_double()};
  }

  double radius = 1.0;
  if (std::abs(c[0]) > 0.0 && std::abs(c[n]) > 0.0) {
    radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / static_cast<double>(n));
  }
  if (!std::isfinite(radius) || radius == 0.0) radius = 1.0;

  std::mt19937_64 rng(opts.seed ^ static_cast<unsigned long long>(n));
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<cd> z(n);
  for (size_t k = 0; k < n; ++k) {
    double angle = two_pi * (static_cast<double>(k) + 0.25 + 0.5 * jitter(rng)) / static_cast<double>(n) + 0.4;
    double r = radius * (0.9 + 0.2 * jitter(rng));
    z[k] = std::polar(r, angle);
  }

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) {
      cd ratio = newton_ratio(c, z[i]);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) continue;
      cd sum = 0.0;
      for (size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) sum += 1.0 / (z[i] - z[j]);
      }
      cd step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(std::abs(z[i]), 1e-300));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

std::vector<CBig> aberth_full(const CPoly& p, std::vector<CBig> z, const PrecisionContext& ctx,
                              const RootSolverOptions& opts) {
  const size_t n = z.size();
  const mpfr_prec_t bits = ctx.bits();
  // Stop once a correction is below ~2^-(bits-12) relative to the root.
  const BigReal eps = BigReal::pow10(-(ctx.digits - 4), bits);
  const BigReal tiny = BigReal::pow10(-(ctx.digits + 30), bits);
  std::vector<bool> done(n, false);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      CBig ratio;
      try {
        ratio = newton_ratio(p, z[i]);
      } catch (const DivisionByZero&) {
        // Stationary point of p: nudge off it.
        z[i] += CBig(1e-8, 1e-8, bits);
        all_done = false;
        continue;
      }
      CBig sum(0.0, 0.0, bits);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        CBig diff = z[i] - z[j];
        if (!diff.is_zero()) sum += reciprocal(diff);
      }
      CBig one(1.0, 0.0, bits);
      CBig den = one - ratio * sum;
      CBig step = den.is_zero() ? ratio : ratio / den;
      z[i] -= step;
      BigReal mag = abs(z[i]);
      BigReal bound = (mag > tiny ? mag : tiny) * eps;
      if (abs(step) <= bound) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  const BigReal tol = ctx.root_tolerance();
  BigReal worst;
  for (size_t i = 0; i < n; ++i) {
    // Newton polish; extra steps only while the residual bound is missed.
    for (int polish = 0; polish < 4; ++polish) {
      if (polish > 0 && normalized_residual(p, z[i]) <= tol) break;
      try {
        z[i] -= newton_ratio(p, z[i]);
      } catch (const DivisionByZero&) {
        break;
      }
    }
    BigReal r = normalized_residual(p, z[i]);
    if (r > worst) worst = r;
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "poly_roots: no convergence for degree " << n << " (worst normalized residual " << worst.str(6)
        << ", tolerance " << tol.str(3) << ")";
    throw RootFindingError(msg.str(), worst.to_double());
  }
  return z;
}

CPoly prepared(const CPoly& p, const PrecisionContext& ctx, size_t& zero_roots) {
  CPoly q = p.trimmed(ctx.trim_tolerance());
  if (q.degree() < 1) {
    throw std::invalid_argument("poly_roots: polynomial has degree < 1 after trimming");
  }
  zero_roots = 0;
  while (zero_roots < q.size() && q[zero_roots].is_zero()) ++zero_roots;
  if (zero_roots == 0) return q;
  return CPoly(std::vector<CBig>(q.coeffs().begin() + static_cast<std::ptrdiff_t>(zero_roots), q.coeffs().end()));
}

}  // namespace

std::vector<CBig> poly_roots(const CPoly& p, const PrecisionContext& ctx, const RootSolverOptions& opts) {
  size_t zero_roots = 0;
  CPoly q = prepared(p, ctx, zero_roots);
  const mpfr_prec_t bits = ctx.bits();
  std::vector<CBig> roots;
  if (q.degree() >= 1) {
    std::vector<cd> start = double_stage(q, opts);
    std::vector<CBig> z;
    z.reserve(start.size());
    for (cd s : start) z.emplace_back(s, bits);
    roots = aberth_full(q, std::move(z), ctx, opts);
  }
  for (size_t k = 0; k < zero_roots; ++k) roots.emplace_back(0.0, 0.0, bits);
  return roots;
}

std::vector<CBig> poly_roots_from(const CPoly& p, std::vector<CBig> start, const PrecisionContext& ctx,
                                  const RootSolverOptions& opts) {
  size_t zero_roots = 0;
  CPoly q = prepared(p, ctx, zero_roots);
  if (start.size() != static_cast<size_t>(q.degree()) + zero_roots) {
    throw std::invalid_argument("poly_roots_from: start count does not match degree");
  }
  if (zero_roots > 0) {
    // Keep the starts nearest to the nonzero roots; the zeros are exact.
    std::sort(start.begin(), start.end(), [](const CBig& a, const CBig& b) { return norm(a) > norm(b); });
    start.resize(static_cast<size_t>(q.degree()));
  }
  std::vector<CBig> roots;
  if (q.degree() >= 1) roots = aberth_full(q, std::move(start), ctx, opts);
  for (size_t k = 0; k < zero_roots; ++k) roots.emplace_back(0.0, 0.0, ctx.bits());
  return roots;
}

}  // namespace cedeconv::numerics
