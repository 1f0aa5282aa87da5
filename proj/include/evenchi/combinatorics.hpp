#pragma once

/// @file combinatorics.hpp
/// @brief Binomial coefficients and Bernoulli numbers.
///
/// Bernoulli convention: B_1 = -1/2, the coefficients of z / (e^z - 1).
/// This is the only sign of B_1 for which beta_{-1} = 4(2^1 - 1)B_1 / 1 equals
/// -2, so everything downstream depends on it.

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "evenchi/rational.hpp"

namespace evenchi {

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace detail {

/// Akiyama-Tanigawa table: after round m, row[0] is B_m with B_1 = +1/2.
inline std::vector<Rational> bernoulli_table(int n) {
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) {
      auto uj = static_cast<std::size_t>(j);
      row[uj - 1] = Rational(j) * (row[uj - 1] - row[uj]);
    }
    out[static_cast<std::size_t>(m)] = row[0];
  }
  if (n >= 1) out[1] = -out[1];
  return out;
}

class BernoulliCache {
 public:
  Rational get(int n) {
    std::scoped_lock lock(mutex_);
    if (static_cast<std::size_t>(n) >= values_.size()) {
      int target = std::max(n, 2 * static_cast<int>(values_.size()));
      values_ = bernoulli_table(std::max(target, 16));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
inline Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n must be non-negative");
  return detail::bernoulli_cache().get(n);
}

}  // namespace evenchi
