#pragma once

#include "cedeconv/numerics/cbig.hpp"
#include "cedeconv/numerics/precision.hpp"

#include <vector>

namespace cedeconv::imagez {

using numerics::BigReal;
using numerics::CBig;
using numerics::PrecisionContext;

/// 2*pi*index/len at the given precision.
BigReal grid_angle(size_t index, size_t len, mpfr_prec_t bits);

/// e^{2*pi*i*index/len}.
CBig unit_root(size_t index, size_t len, mpfr_prec_t bits);

/// Inverse DFT of samples taken at e^{2*pi*i*j/axis_len}, j in index order:
/// c_k = (1/L) sum_j values_j e^{-2*pi*i*j*k/L}. Direct O(L^2) summation.
/// Throws std::invalid_argument when values.size() != axis_len.
std::vector<CBig> idft_axis(const std::vector<CBig>& values, size_t axis_len, const PrecisionContext& ctx);

}  // namespace cedeconv::imagez
