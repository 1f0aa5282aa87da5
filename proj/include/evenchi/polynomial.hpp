#pragma once

/// @file polynomial.hpp
/// @brief Dense univariate polynomials with exact rational coefficients.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evenchi/rational.hpp"

namespace evenchi {

/// coeffs()[k] is the coefficient of z^k. The top stored coefficient is never
/// zero; the zero polynomial stores nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
  explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

  static Polynomial monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
    cs.back() = std::move(c);
    return Polynomial(std::move(cs));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return Rational{};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Rational operator()(const Rational& z) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in the variable @p var, highest power first.
  std::string str(char var = 'z') const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      bool negative = c < Rational{};
      Rational mag = negative ? -c : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = mag == Rational(1);
      if (!unit || k == 0) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// q(z) = p(a*z + b), by Horner's scheme in the polynomial ring.
inline Polynomial poly_affine_substitute(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial linear({b, a});
  Polynomial acc;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * linear + Polynomial::constant(*it);
  return acc;
}

/// z^{d+1} * p(1/z): the coefficient of z^k becomes p's coefficient of z^{d+1-k}.
inline Polynomial reversed_with_leading(const Polynomial& p, int d) {
  if (d < 0) throw std::invalid_argument("reversed_with_leading: d must be non-negative");
  if (p.degree() > d + 1) {
    throw std::invalid_argument("reversed_with_leading: degree " + std::to_string(p.degree()) +
                                " exceeds d + 1 = " + std::to_string(d + 1));
  }
  std::vector<Rational> out(static_cast<std::size_t>(d) + 2);
  for (int k = 0; k <= d + 1; ++k) out[static_cast<std::size_t>(k)] = p.coeff(d + 1 - k);
  return Polynomial(std::move(out));
}

}  // namespace evenchi
