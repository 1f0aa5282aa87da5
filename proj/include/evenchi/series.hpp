#pragma once

/// @file series.hpp
/// @brief Power series truncated at a caller-chosen order.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evenchi/rational.hpp"

namespace evenchi {

/// Coefficients of z^0..z^order; anything above order is unknown, not zero.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}
  TruncatedSeries(std::vector<Rational> cs) : coeffs_(std::move(cs)) {  // NOLINT
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  /// Exact long division; the divisor's constant term must be nonzero.
  friend TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den) {
    if (den[0].is_zero()) throw std::domain_error("series division: divisor has zero constant term");
    const int n = std::min(num.order(), den.order());
    TruncatedSeries q(n);
    for (int k = 0; k <= n; ++k) {
      Rational acc = num[k];
      for (int j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
      q[k] = acc / den[0];
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::size_t check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return static_cast<std::size_t>(order);
  }

  std::vector<Rational> coeffs_;
};

/// cosh z = sum z^{2k} / (2k)!
inline TruncatedSeries cosh_series(int order) {
  TruncatedSeries s(order);
  BigInt factorial = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) factorial *= k;
    if (k % 2 == 0) s[k] = Rational(BigInt(1), factorial);
  }
  return s;
}

/// Taylor coefficients of -z / cosh z through z^order.
inline TruncatedSeries neg_z_over_cosh_series(int order) {
  TruncatedSeries numerator(order);
  if (order >= 1) numerator[1] = Rational(-1);
  return numerator / cosh_series(order);
}

}  // namespace evenchi
