#pragma once

/// @file coefficients.hpp
/// @brief The beta sequence, the functional theta, and the antisymmetric/even
/// decomposition of polynomials.
///
/// beta_{n-2} = 4 (2^n - 1) B_n / n for n >= 1. The only nonzero odd-index
/// value is beta_{-1} = -2. beta has no dimension parameter: one table serves
/// every dimension.
///
/// theta is the linear functional with theta(z^n) = beta_{n-1}. It vanishes on
/// polynomials with p(z) + p(-1-z) = 0 and sends a polynomial q in even powers
/// of z to -2 q(0).

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evenchi/combinatorics.hpp"
#include "evenchi/polynomial.hpp"

namespace evenchi {

namespace detail {

inline Rational beta_uncached(int n) {
  const int m = n + 2;
  BigInt two_pow = BigInt(1) << m;
  return Rational(BigInt(4 * (two_pow - 1))) * bernoulli(m) / Rational(m);
}

class BetaCache {
 public:
  Rational get(int n) {
    std::scoped_lock lock(mutex_);
    auto idx = static_cast<std::size_t>(n + 1);
    while (values_.size() <= idx) values_.push_back(beta_uncached(static_cast<int>(values_.size()) - 1));
    return values_[idx];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;  // values_[i] = beta_{i-1}
};

inline BetaCache& beta_cache() {
  static BetaCache cache;
  return cache;
}

}  // namespace detail

/// beta_n for n >= -1.
inline Rational beta(int n) {
  if (n < -1) throw std::invalid_argument("beta: index " + std::to_string(n) + " is below -1");
  return detail::beta_cache().get(n);
}

struct BetaTable {
  std::map<int, Rational> values;
};

/// beta_n for -1 <= n <= max_n; empty when max_n < -1.
inline BetaTable beta_table(int max_n) {
  BetaTable t;
  for (int n = -1; n <= max_n; ++n) t.values.emplace(n, beta(n));
  return t;
}

inline Rational theta(const Polynomial& p) {
  Rational acc;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (!c.is_zero()) acc += c * beta(k - 1);
  }
  return acc;
}

/// True iff p(z) + p(-1-z) is the zero polynomial.
inline bool is_antisymmetric(const Polynomial& p) {
  return (p + poly_affine_substitute(p, Rational(-1), Rational(-1))).is_zero();
}

/// True iff p has no odd powers of z.
inline bool is_even(const Polynomial& p) {
  for (int k = 1; k <= p.degree(); k += 2)
    if (!p.coeff(k).is_zero()) return false;
  return true;
}

struct Decomposition {
  Polynomial antisymmetric;  // p(z) + p(-1-z) = 0
  Polynomial even;           // only even powers of z
};

/// Unique split P = p + q. Peels the leading term each step: an odd degree m
/// is absorbed by a multiple of (1+2z)^m (odd in w = 1+2z, hence
/// antisymmetric), an even degree goes straight into q.
inline Decomposition decompose(const Polynomial& P) {
  Decomposition out;
  const Polynomial one_plus_two_z({Rational(1), Rational(2)});
  Polynomial rest = P;
  while (!rest.is_zero()) {
    const int m = rest.degree();
    const Rational c = rest.coeff(m);
    Polynomial piece;
    if (m % 2 == 1) {
      piece = one_plus_two_z.pow(static_cast<unsigned>(m)) * (c / Rational(BigInt(BigInt(1) << m)));
      out.antisymmetric += piece;
    } else {
      piece = Polynomial::monomial(c, m);
      out.even += piece;
    }
    rest -= piece;
  }
  return out;
}

/// S_m = sum_{n=1}^{m+1} (4^n - 2^n) B_n / (n! (m+1-n)!) for odd m >= 1.
inline Rational s_m_sum(int m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("s_m_sum: m must be a positive odd integer, got " + std::to_string(m));
  Rational acc;
  for (int n = 1; n <= m + 1; ++n) {
    BigInt weight = (BigInt(1) << (2 * n)) - (BigInt(1) << n);
    acc += Rational(weight) * bernoulli(n) / Rational(BigInt(factorial(n) * factorial(m + 1 - n)));
  }
  return acc;
}

}  // namespace evenchi
