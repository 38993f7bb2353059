#include "cedeconv/cedetect/cedetect.hpp"

#include <charconv>
#include <stdexcept>

namespace cedeconv::cedetect {

void CESize::validate() const {
  if (m < 1 || n < 1 || m * n < 2) throw std::invalid_argument("CE size must have m, n >= 1 and m*n >= 2");
}

CESize CESize::parse(const std::string& text) {
  const size_t sep = text.find_first_of("xX");
  CESize s{0, 0};
  auto parse_int = [&](std::string_view part, int& out) {
    auto res = std::from_chars(part.data(), part.data() + part.size(), out);
    return !part.empty() && res.ec == std::errc() && res.ptr == part.data() + part.size();
  };
  if (sep == std::string::npos || !parse_int(std::string_view(text).substr(0, sep), s.m) ||
      !parse_int(std::string_view(text).substr(sep + 1), s.n)) {
    throw std::invalid_argument("size must look like MxN, got '" + text + "'");
  }
  s.validate();
  return s;
}

std::string CESize::str() const { return std::to_string(m) + "x" + std::to_string(n); }

RootAxis root_axis(CEForm form) { return form == CEForm::u_form ? RootAxis::v_roots : RootAxis::u_roots; }

const char* form_name(CEForm form) { return form == CEForm::u_form ? "u_form" : "v_form"; }

CEConfig CEConfig::for_size(CESize size) {
  CEConfig cfg;
  cfg.size = size;
  cfg.plan.count = size.order();
  return cfg;
}

void CEConfig::validate() const {
  size.validate();
  plan.validate();
  if (plan.count != size.order()) throw std::invalid_argument("CE config: sample count must equal m*n");
  if (!(scale >= 1.0)) throw std::invalid_argument("CE config: scale must be >= 1");
  if (!(tau > 0.0)) throw std::invalid_argument("CE config: tau must be positive");
  if (sweep_count < 1) throw std::invalid_argument("CE config: sweep_count must be positive");
}

CMatrix build_D(const RootBranch& branch, const CESize& size, CEForm form, mpfr_prec_t bits) {
  size.validate();
  const size_t order = static_cast<size_t>(size.order());
  if (branch.points.size() != order || branch.values.size() != order) {
    throw std::invalid_argument("build_D: branch has " + std::to_string(branch.values.size()) +
                                " samples, CE order is " + std::to_string(order));
  }
  // Exponent ranges: the sample variable runs to (point_span - 1), the zero-value to (value_span - 1).
  const bool u_form = form == CEForm::u_form;
  const size_t point_span = static_cast<size_t>(u_form ? size.m : size.n);
  const size_t value_span = static_cast<size_t>(u_form ? size.n : size.m);

  CMatrix d(order, bits);
  for (size_t row = 0; row < order; ++row) {
    std::vector<CBig> value_pow{CBig(1.0, 0.0, bits)};
    for (size_t k = 1; k < value_span; ++k) value_pow.push_back(value_pow.back() * branch.values[row]);
    CBig point_pow(1.0, 0.0, bits);
    for (size_t a = 0; a < point_span; ++a) {
      for (size_t b = 0; b < value_span; ++b) d.at(row, a * value_span + b) = point_pow * value_pow[b];
      point_pow = point_pow * branch.points[row];
    }
  }
  return d;
}

CBig ce_value(const RootBranch& branch, const CESize& size, CEForm form, const PrecisionContext& ctx) {
  return numerics::det(build_D(branch, size, form, ctx.bits()), ctx);
}

double score(const BigReal& abs_e, double scale) {
  if (abs_e < 0.0) throw std::invalid_argument("score: negative magnitude");
  BigReal x = abs_e * scale;
  x += BigReal(1.0, abs_e.precision());
  return log10(x).to_double();
}

double score(double abs_e, double scale) { return score(BigReal(abs_e, 128), scale); }

}  // namespace cedeconv::cedetect
