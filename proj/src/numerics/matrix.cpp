#include "cedeconv/numerics/matrix.hpp"

#include <utility>

namespace cedeconv::numerics {

CMatrix::CMatrix(size_t order, mpfr_prec_t bits) : order_(order) {
  entries_.reserve(order * order);
  for (size_t k = 0; k < order * order; ++k) entries_.emplace_back(0.0, 0.0, bits);
}

void CMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t c = 0; c < order_; ++c) std::swap(entries_[a * order_ + c], entries_[b * order_ + c]);
}

CBig det(const CMatrix& m, const PrecisionContext& ctx) {
  const size_t n = m.order();
  const mpfr_prec_t bits = ctx.bits();
  if (n == 0) return CBig(1.0, 0.0, bits);

  BigReal largest;
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      BigReal v = norm(m.at(r, c));
      if (v > largest) largest = std::move(v);
    }
  }
  if (largest.is_zero()) return CBig(0.0, 0.0, bits);
  // Compare squared magnitudes throughout.
  BigReal cutoff = largest * (ctx.trim_tolerance() * ctx.trim_tolerance());

  CMatrix a = m;
  bool negate = false;
  CBig product(1.0, 0.0, bits);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    BigReal best = norm(a.at(k, k));
    for (size_t r = k + 1; r < n; ++r) {
      BigReal v = norm(a.at(r, k));
      if (v > best) {
        best = std::move(v);
        pivot = r;
      }
    }
    if (best <= cutoff) return CBig(0.0, 0.0, bits);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    const CBig inv = reciprocal(a.at(k, k));
    for (size_t r = k + 1; r < n; ++r) {
      if (a.at(r, k).is_zero()) continue;
      CBig factor = a.at(r, k) * inv;
      for (size_t c = k + 1; c < n; ++c) a.at(r, c) -= factor * a.at(k, c);
      a.at(r, k) = CBig(0.0, 0.0, bits);
    }
    product = product * a.at(k, k);
  }
  return negate ? -product : product;
}

}  // namespace cedeconv::numerics
