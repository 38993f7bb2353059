#include "cedeconv/zerotrack/zerotrack.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace cedeconv::zerotrack {

namespace {

using DistanceTable = std::vector<std::vector<BigReal>>;

// Distance on the Riemann sphere. A zero whose slice loses its leading
// coefficient between two samples passes through infinity; in the plane its
// two sides are far apart, on the sphere they are neighbours.
BigReal chordal(const CBig& a, const CBig& b) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  const BigReal one(1.0, bits);
  return numerics::abs(a - b) / sqrt((one + numerics::norm(a)) * (one + numerics::norm(b)));
}

DistanceTable distances(const std::vector<CBig>& prev, const std::vector<CBig>& next) {
  DistanceTable d(prev.size());
  for (size_t i = 0; i < prev.size(); ++i) {
    d[i].reserve(next.size());
    for (const auto& z : next) d[i].push_back(chordal(prev[i], z));
  }
  return d;
}

void check_sizes(const std::vector<CBig>& prev, const std::vector<CBig>& next) {
  if (prev.size() != next.size()) throw std::invalid_argument("match_roots: lists differ in length");
}

std::vector<size_t> greedy_two_opt(const DistanceTable& d) {
  const size_t n = d.size();
  std::vector<std::tuple<const BigReal*, size_t, size_t>> pairs;
  pairs.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) pairs.emplace_back(&d[i][j], i, j);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    const auto c = *std::get<0>(a) <=> *std::get<0>(b);
    if (c != 0) return c < 0;
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  });

  constexpr size_t kFree = std::numeric_limits<size_t>::max();
  std::vector<size_t> perm(n, kFree);
  std::vector<bool> taken(n, false);
  size_t assigned = 0;
  for (const auto& [dist, i, j] : pairs) {
    if (perm[i] != kFree || taken[j]) continue;
    perm[i] = j;
    taken[j] = true;
    if (++assigned == n) break;
  }

  for (int pass = 0; pass < 100; ++pass) {
    bool improved = false;
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = i + 1; k < n; ++k) {
        if (d[i][perm[k]] + d[k][perm[i]] < d[i][perm[i]] + d[k][perm[k]]) {
          std::swap(perm[i], perm[k]);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return perm;
}

}  // namespace

std::vector<size_t> match_roots(const std::vector<CBig>& prev, const std::vector<CBig>& next) {
  check_sizes(prev, next);
  return greedy_two_opt(distances(prev, next));
}

MatchResult match_roots_checked(const std::vector<CBig>& prev, const std::vector<CBig>& next,
                                const BigReal& ambiguity_radius) {
  check_sizes(prev, next);
  const DistanceTable d = distances(prev, next);
  MatchResult result;
  result.ambiguous.assign(prev.size(), false);
  if (next.size() >= 2) {
    for (size_t i = 0; i < prev.size(); ++i) {
      size_t first = 0, second = 1;
      if (d[i][second] < d[i][first]) std::swap(first, second);
      for (size_t j = 2; j < next.size(); ++j) {
        if (d[i][j] < d[i][first]) {
          second = first;
          first = j;
        } else if (d[i][j] < d[i][second]) {
          second = j;
        }
      }
      if (chordal(next[first], next[second]) <= ambiguity_radius) {
        result.ambiguous[i] = true;
        result.any_ambiguous = true;
      }
    }
  }
  result.perm = result.any_ambiguous ? optimal_assignment(prev, next) : greedy_two_opt(d);
  return result;
}

std::vector<size_t> optimal_assignment(const std::vector<CBig>& prev, const std::vector<CBig>& next) {
  check_sizes(prev, next);
  const size_t n = prev.size();
  if (n == 0) return {};
  const DistanceTable d = distances(prev, next);
  // Hungarian algorithm with potentials, 1-based internally.
  using real = long double;
  const real inf = std::numeric_limits<real>::infinity();
  std::vector<real> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const size_t i0 = p[j0];
      real delta = inf;
      size_t j1 = 0;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const real cur = static_cast<real>(d[i0 - 1][j - 1].to_double()) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<size_t> perm(n);
  for (size_t j = 1; j <= n; ++j) perm[p[j] - 1] = j - 1;
  return perm;
}

}  // namespace cedeconv::zerotrack
