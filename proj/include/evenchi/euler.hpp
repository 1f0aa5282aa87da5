#pragma once

/// @file euler.hpp
/// @brief Euler characteristic from even-dimensional face counts.
///
/// For a semi-Eulerian complex of even dimension d,
///   chi = sum_{n=0}^{d} beta_n f_n,
/// and since beta_n = 0 for odd n >= 1 only f_0, f_2, ..., f_d contribute.
/// For an even-dimensional manifold M with boundary,
///   chi(M) = sum_n beta_n (f_n(M) - f_n(dM) / 2).
///
/// The formulas return Rational and do not test their hypothesis. On inputs
/// that are not semi-Eulerian the result may be fractional or simply wrong,
/// and callers can see that.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "evenchi/coefficients.hpp"
#include "evenchi/simplicial.hpp"

namespace evenchi {

inline Rational euler_even_from_fvector(const FVector& fv) {
  if (fv.dimension() % 2 != 0) {
    throw std::domain_error("even-face formula needs even dimension, got " + std::to_string(fv.dimension()) +
                            "; a closed odd-dimensional manifold has Euler characteristic 0");
  }
  Rational chi;
  for (int n = 0; n <= fv.dimension(); n += 2) chi += beta(n) * Rational(BigInt(fv[n]));
  return chi;
}

inline Rational euler_even(const SimplicialComplex& c) { return euler_even_from_fvector(f_vector(c)); }

inline Rational euler_with_boundary(const SimplicialComplex& m) {
  if (m.empty()) throw std::invalid_argument("euler_with_boundary: empty complex");
  if (!is_pure(m)) throw std::invalid_argument("euler_with_boundary: complex is not pure");
  const FVector fv = f_vector(m);
  if (fv.dimension() % 2 != 0)
    throw std::domain_error("euler_with_boundary needs even dimension, got " + std::to_string(fv.dimension()));
  const SimplicialComplex bd = fv.dimension() >= 1 ? boundary(m) : SimplicialComplex{};
  const Rational half(BigInt(1), BigInt(2));
  Rational chi;
  for (int n = 0; n <= fv.dimension(); ++n) {
    const Rational bn = beta(n);
    if (bn.is_zero()) continue;
    chi += bn * (Rational(BigInt(fv[n])) - half * Rational(BigInt(bd.num_faces(n))));
  }
  return chi;
}

struct EulerComparison {
  std::int64_t classical = 0;
  std::optional<Rational> even_formula;
  std::optional<Rational> boundary_formula;
  bool agree = true;
};

/// Classical chi always. In even dimension, also the closed formula (empty
/// boundary or non-pure input) or the boundary formula (pure with nonempty
/// boundary).
inline EulerComparison cross_validate(const SimplicialComplex& c) {
  EulerComparison cmp;
  cmp.classical = euler_classical(c);
  if (c.empty() || c.dimension() % 2 != 0) return cmp;
  const bool pure = is_pure(c);
  const bool has_boundary = pure && c.dimension() >= 1 && !boundary(c).empty();
  if (has_boundary) {
    cmp.boundary_formula = euler_with_boundary(c);
  } else {
    cmp.even_formula = euler_even(c);
  }
  const Rational classical(cmp.classical);
  cmp.agree = (!cmp.even_formula || *cmp.even_formula == classical) &&
              (!cmp.boundary_formula || *cmp.boundary_formula == classical);
  return cmp;
}

}  // namespace evenchi
