#include "cedeconv/imagez/scene.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <random>

namespace cedeconv::imagez {

namespace {

class SceneRng {
 public:
  explicit SceneRng(std::uint64_t seed) : engine_(seed) {}
  // Inclusive range; modulo mapping keeps output identical across standard libraries.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Positive integers whose sum is a power of two, returned with that sum.
std::vector<int> dyadic_weights(SceneRng& rng, size_t count, int& total) {
  std::vector<int> w(count);
  int sum = 0;
  for (auto& v : w) {
    v = rng.uniform(1, 8);
    sum += v;
  }
  total = static_cast<int>(std::bit_ceil(static_cast<unsigned>(sum)));
  w.back() += total - sum;
  return w;
}

Image weights_to_kernel(const std::vector<int>& w, int total, size_t rows, size_t cols) {
  std::vector<double> px;
  px.reserve(w.size());
  for (int v : w) px.push_back(static_cast<double>(v) / total);
  return Image(rows, cols, std::move(px));
}

bool rank_one(const std::vector<int>& w, size_t cols) {
  for (size_t a = 0; a < cols; ++a) {
    for (size_t b = a + 1; b < cols; ++b) {
      if (w[a] * w[cols + b] != w[b] * w[cols + a]) return false;
    }
  }
  return true;
}

Image non_separable_kernel(SceneRng& rng, size_t cols) {
  for (;;) {
    int total = 0;
    auto w = dyadic_weights(rng, 2 * cols, total);
    if (!rank_one(w, cols)) return weights_to_kernel(w, total, 2, cols);
  }
}

struct Factor {
  std::vector<int> weights;
  int total = 0;
};

Factor factor(SceneRng& rng, size_t len) {
  Factor f;
  f.weights = dyadic_weights(rng, len, f.total);
  return f;
}

Image outer(const Factor& col, const Factor& row) {
  Image k(col.weights.size(), row.weights.size());
  for (size_t x = 0; x < col.weights.size(); ++x) {
    for (size_t y = 0; y < row.weights.size(); ++y) {
      k.at(x, y) = static_cast<double>(col.weights[x] * row.weights[y]) / (col.total * row.total);
    }
  }
  return k;
}

std::vector<std::complex<double>> zeros_of(const Factor& f) {
  const auto& w = f.weights;
  if (w.size() == 2) return {-static_cast<double>(w[0]) / w[1]};
  // w0 + w1 z + w2 z^2
  std::complex<double> disc = static_cast<double>(w[1] * w[1] - 4 * w[0] * w[2]);
  std::complex<double> s = std::sqrt(disc);
  return {(-static_cast<double>(w[1]) + s) / (2.0 * w[2]), (-static_cast<double>(w[1]) - s) / (2.0 * w[2])};
}

bool distinct(const std::vector<Factor>& factors) {
  std::vector<std::complex<double>> all;
  for (const auto& f : factors) {
    auto z = zeros_of(f);
    all.insert(all.end(), z.begin(), z.end());
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (std::abs(all[i] - all[j]) < 1e-3) return false;
    }
  }
  return true;
}

// True when no kernel's transform vanishes on the len x len grid of unit roots,
// i.e. pointwise division on the restored-size grid is well posed.
bool off_grid(const std::vector<Image>& blurs, size_t len) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (const auto& h : blurs) {
    for (size_t j = 0; j < len; ++j) {
      const auto u = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(len));
      for (size_t k = 0; k < len; ++k) {
        const auto v = std::polar(1.0, two_pi * static_cast<double>(k) / static_cast<double>(len));
        std::complex<double> acc = 0.0, up = 1.0;
        for (size_t x = 0; x < h.rows(); ++x, up *= u) {
          std::complex<double> vp = 1.0;
          for (size_t y = 0; y < h.cols(); ++y, vp *= v) acc += h.at(x, y) * up * vp;
        }
        if (std::abs(acc) < 1e-6) return false;
      }
    }
  }
  return true;
}

Image truth_image(SceneRng& rng) {
  Image f(40, 40);
  for (size_t x = 0; x < 40; ++x) {
    for (size_t y = 0; y < 40; ++y) f.at(x, y) = rng.uniform(0, 255);
  }
  return f;
}

}  // namespace

TestScene gen_test_scene(std::uint64_t seed, const SceneOptions& opts) {
  SceneRng rng(seed);
  TestScene scene;
  scene.truth = truth_image(rng);

  for (;;) {
    if (!opts.separable) {
      Factor row12 = factor(rng, 2);
      Factor col21 = factor(rng, 2);
      scene.blurs = {weights_to_kernel(row12.weights, row12.total, 1, 2),
                     weights_to_kernel(col21.weights, col21.total, 2, 1), non_separable_kernel(rng, 2),
                     non_separable_kernel(rng, 3)};
    } else {
      // Constant zeros of all factors along each axis must not coincide.
      Factor row12 = factor(rng, 2), col21 = factor(rng, 2);
      Factor col22 = factor(rng, 2), row22 = factor(rng, 2);
      Factor col23 = factor(rng, 2), row23 = factor(rng, 3);
      if (!distinct({row12, row22, row23}) || !distinct({col21, col22, col23})) continue;
      Factor unit;
      unit.weights = {1};
      unit.total = 1;
      scene.blurs = {outer(unit, row12), outer(col21, unit), outer(col22, row22), outer(col23, row23)};
    }
    if (off_grid(scene.blurs, scene.truth.rows())) break;
  }

  Image g = scene.truth;
  for (const auto& h : scene.blurs) g = convolve(g, h);
  scene.observed = std::move(g);
  return scene;
}

double leading_coefficient_product(const std::vector<Image>& blurs) {
  double p = 1.0;
  for (const auto& h : blurs) p *= h.at(h.rows() - 1, h.cols() - 1);
  return p;
}

}  // namespace cedeconv::imagez
