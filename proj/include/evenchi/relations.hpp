#pragma once

/// @file relations.hpp
/// @brief h-vectors, Dehn-Sommerville relations, the reflection identity for
/// the face polynomial, and the semi-Eulerian link test.
///
/// With F(x) = x^{d+1} + sum f_n x^{d-n}, the h-vector is read off
/// F(x - 1) = sum h_n x^{d+1-n}. A semi-Eulerian complex satisfies
///   h_{d+1-n} - h_n = (-1)^n C(d+1, n) (chi - chi(S^d)),   0 <= n <= d+1,
/// and, equivalently, p(z) + (-1)^d p(-1-z) = 0 for
///   p(z) = chi/2 + sum f_n z^{n+1}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evenchi/combinatorics.hpp"
#include "evenchi/polynomial.hpp"
#include "evenchi/simplicial.hpp"

namespace evenchi {

struct HVector {
  int dimension = 0;
  std::vector<BigInt> entries;  // h_0..h_{d+1}
};

struct CheckItem {
  std::string description;
  Rational expected;
  Rational actual;
  bool ok = false;
};

/// Outcome of one identity check. passed is the conjunction of item flags.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<CheckItem> items;

  void add(std::string description, Rational expected, Rational actual) {
    bool ok = expected == actual;
    passed = passed && ok;
    items.push_back({std::move(description), std::move(expected), std::move(actual), ok});
  }
};

/// chi(S^d) = 1 + (-1)^d; S^{-1} is empty with chi 0.
inline std::int64_t sphere_euler(int d) { return ((d % 2) + 2) % 2 == 0 ? 2 : 0; }

/// F(x) = x^{d+1} + sum_{n=0}^{d} f_n x^{d-n}.
inline Polynomial f_polynomial(const FVector& fv) {
  const int d = fv.dimension();
  std::vector<Rational> cs(static_cast<std::size_t>(d) + 2);
  cs[static_cast<std::size_t>(d) + 1] = Rational(1);
  for (int n = 0; n <= d; ++n) cs[static_cast<std::size_t>(d - n)] = Rational(BigInt(fv[n]));
  return Polynomial(std::move(cs));
}

inline HVector h_vector(const FVector& fv) {
  const int d = fv.dimension();
  const Polynomial shifted = poly_affine_substitute(f_polynomial(fv), Rational(1), Rational(-1));
  HVector h{d, {}};
  for (int n = 0; n <= d + 1; ++n) h.entries.push_back(shifted.coeff(d + 1 - n).to_integer());
  return h;
}

inline CheckReport check_dehn_sommerville(const SimplicialComplex& c) {
  CheckReport report{"dehn-sommerville", true, {}};
  const FVector fv = f_vector(c);
  const HVector h = h_vector(fv);
  const int d = fv.dimension();
  const std::int64_t excess = euler_classical(c) - sphere_euler(d);
  for (int n = 0; n <= d + 1; ++n) {
    BigInt expected = binomial(d + 1, n) * excess;
    if (n % 2 == 1) expected = -expected;
    BigInt actual = h.entries[static_cast<std::size_t>(d + 1 - n)] - h.entries[static_cast<std::size_t>(n)];
    report.add("h_" + std::to_string(d + 1 - n) + " - h_" + std::to_string(n), Rational(expected),
               Rational(actual));
  }
  return report;
}

/// p(z) = chi/2 + sum_{n=0}^{d} f_n z^{n+1}.
inline Polynomial lemma1_polynomial(const SimplicialComplex& c, const Rational& chi) {
  const FVector fv = f_vector(c);
  std::vector<Rational> cs(static_cast<std::size_t>(fv.dimension()) + 2);
  cs[0] = chi / Rational(2);
  for (int n = 0; n <= fv.dimension(); ++n) cs[static_cast<std::size_t>(n) + 1] = Rational(BigInt(fv[n]));
  return Polynomial(std::move(cs));
}

/// Every coefficient of p(z) + (-1)^d p(-1-z) must vanish.
inline CheckReport check_lemma1(const SimplicialComplex& c) {
  CheckReport report{"reflection-identity", true, {}};
  const Polynomial p = lemma1_polynomial(c, Rational(euler_classical(c)));
  const int d = c.dimension();
  Polynomial reflected = poly_affine_substitute(p, Rational(-1), Rational(-1));
  if (d % 2 == 1) reflected = -reflected;
  const Polynomial sum = p + reflected;
  for (int k = 0; k <= d + 1; ++k)
    report.add("coefficient of z^" + std::to_string(k) + " in p(z) + (-1)^d p(-1-z)", Rational(0), sum.coeff(k));
  return report;
}

namespace detail {

inline constexpr std::size_t kMaxListedFailures = 100;

/// Runs @p required over every face, listing at most kMaxListedFailures
/// failing faces and closing with a failure count item.
template <class Required>
void check_links(const SimplicialComplex& c, CheckReport& report, Required required) {
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (int n = 0; n <= c.dimension(); ++n) {
    for (const auto& sigma : c.faces(n)) {
      ++checked;
      const std::int64_t want = required(sigma);
      const std::int64_t got = euler_classical(link(c, sigma));
      if (want == got) continue;
      ++failures;
      if (failures <= kMaxListedFailures)
        report.add("chi(link " + sigma.str() + ")", Rational(want), Rational(got));
    }
  }
  report.add("failing faces among " + std::to_string(checked), Rational(0),
             Rational(static_cast<std::int64_t>(failures)));
}

}  // namespace detail

/// Pure, and every n-face has a link with chi = 1 - (-1)^{d+n}.
/// The empty face is not checked.
inline CheckReport is_semi_eulerian(const SimplicialComplex& c) {
  CheckReport report{"semi-eulerian", true, {}};
  report.add("pure", Rational(1), Rational(is_pure(c) ? 1 : 0));
  const int d = c.dimension();
  detail::check_links(c, report, [d](const Face& sigma) { return sphere_euler(d - sigma.dimension() - 1); });
  return report;
}

/// Link condition for a complex with boundary: faces of the boundary need
/// ball-like links (chi = 1), interior faces need sphere-like links.
inline CheckReport check_relative_semi_eulerian(const SimplicialComplex& c) {
  CheckReport report{"semi-eulerian-with-boundary", true, {}};
  const bool pure = is_pure(c);
  report.add("pure", Rational(1), Rational(pure ? 1 : 0));
  if (!pure || c.dimension() < 1) return report;
  const SimplicialComplex bd = boundary(c);
  const int d = c.dimension();
  detail::check_links(c, report, [&](const Face& sigma) -> std::int64_t {
    if (bd.contains(sigma)) return 1;
    return sphere_euler(d - sigma.dimension() - 1);
  });
  return report;
}

}  // namespace evenchi
