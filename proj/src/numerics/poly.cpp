#include "cedeconv/numerics/poly.hpp"

#include <sstream>

namespace cedeconv::numerics {

CPoly CPoly::from_real(const std::vector<double>& coeffs, mpfr_prec_t bits) {
  std::vector<CBig> c;
  c.reserve(coeffs.size());
  for (double v : coeffs) c.emplace_back(v, 0.0, bits);
  return CPoly(std::move(c));
}

BigReal CPoly::max_abs_coeff() const {
  BigReal best;
  for (const auto& c : coeffs_) {
    BigReal a = abs(c);
    if (a > best) best = std::move(a);
  }
  return best;
}

CPoly CPoly::trimmed(const BigReal& rel_tol) const {
  BigReal cutoff = max_abs_coeff() * rel_tol;
  size_t keep = coeffs_.size();
  while (keep > 0 && abs(coeffs_[keep - 1]) <= cutoff) --keep;
  return CPoly(std::vector<CBig>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

CBig poly_eval(const CPoly& p, const CBig& z) {
  if (p.is_zero()) return CBig(0.0, 0.0, z.precision());
  CBig acc = p.leading();
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * z;
    acc += p[static_cast<size_t>(k)];
  }
  return acc;
}

CPoly poly_mul(const CPoly& p, const CPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<CBig> out(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return CPoly(std::move(out));
}

BigReal normalized_residual(const CPoly& p, const CBig& z) {
  if (p.is_zero()) return BigReal(0.0, z.precision());
  BigReal scale = p.max_abs_coeff();
  if (scale.is_zero()) return BigReal(0.0, z.precision());
  if (norm(z) <= 1.0) return abs(poly_eval(p, z)) / scale;
  CBig w = CBig(1.0, 0.0, z.precision()) / z;
  CBig acc = p[0];
  for (size_t k = 1; k < p.size(); ++k) {
    acc = acc * w;
    acc += p[k];
  }
  return abs(acc) / scale;
}

CPoly poly_deflate(const CPoly& p, const CBig& root, const PrecisionContext& ctx) {
  BigReal residual = normalized_residual(p, root);
  if (p.degree() < 1 || residual > ctx.pow10(-(ctx.digits / 4))) {
    std::ostringstream msg;
    msg << "deflation: value is not a root (normalized residual " << residual.str(6) << ", degree " << p.degree()
        << ")";
    throw DeflationError(msg.str(), residual.to_double());
  }
  const int n = p.degree();
  std::vector<CBig> q(static_cast<size_t>(n));
  if (norm(root) <= 1.0) {
    q[static_cast<size_t>(n - 1)] = p[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 1; --k) {
      q[static_cast<size_t>(k - 1)] = p[static_cast<size_t>(k)] + root * q[static_cast<size_t>(k)];
    }
  } else {
    // p_k = q_{k-1} - root*q_k, solved upward from the constant term.
    q[0] = -(p[0] / root);
    for (int k = 1; k < n; ++k) {
      q[static_cast<size_t>(k)] = (q[static_cast<size_t>(k - 1)] - p[static_cast<size_t>(k)]) / root;
    }
  }
  return CPoly(std::move(q));
}

}  // namespace cedeconv::numerics
