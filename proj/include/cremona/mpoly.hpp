#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/upoly.hpp"

namespace cremona {

/// Sparse polynomial in N variables over Q. Terms are keyed by exponent
/// vectors; zero coefficients are never stored.
template <std::size_t N>
class MPoly {
 public:
  using Exps = std::array<int, N>;
  using Terms = std::map<Exps, Rational>;

  MPoly() = default;
  MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Exps{}] = c;
  }
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static MPoly var(std::size_t i) {
    Exps e{};
    e[i] = 1;
    return monomial(Rational(1), e);
  }
  static MPoly monomial(const Rational& c, const Exps& e) {
    MPoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree (-1 for zero).
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  /// Smallest total degree of a term (-1 for zero): the order at the origin.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = d < 0 ? total(e) : std::min(d, total(e));
    return d;
  }
  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      if (d == -2) d = total(e);
      if (total(e) != d) return false;
    }
    return true;
  }
  Rational coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Sum of the terms of total degree d.
  MPoly homogeneous_part(int d) const {
    MPoly out;
    for (const auto& [e, c] : terms_)
      if (total(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  MPoly operator-() const { return scaled(Rational(-1)); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    MPoly out = *this;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
  }
  MPoly pow(unsigned k) const {
    MPoly r(1), b = *this;
    while (k) {
      if (k & 1U) r *= b;
      k >>= 1U;
      if (k) b *= b;
    }
    return r;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  Rational eval(const std::array<Rational, N>& at) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) t *= at[i];
      acc += t;
    }
    return acc;
  }

  /// Substitutes variable i -> subs[i] (polynomials in M variables).
  template <std::size_t M>
  MPoly<M> substitute(const std::array<MPoly<M>, N>& subs) const {
    std::array<std::vector<MPoly<M>>, N> pows;
    for (std::size_t i = 0; i < N; ++i) {
      pows[i].push_back(MPoly<M>(1));
      for (int k = 1; k <= degree_in(i); ++k) pows[i].push_back(pows[i].back() * subs[i]);
    }
    MPoly<M> out;
    for (const auto& [e, c] : terms_) {
      MPoly<M> t(c);
      for (std::size_t i = 0; i < N; ++i)
        if (e[i] > 0) t *= pows[i][e[i]];
      out += t;
    }
    return out;
  }

  /// Leading term w.r.t. lexicographic order on exponent vectors.
  std::pair<Exps, Rational> leading_term() const { return *terms_.rbegin(); }

  /// Exact quotient a / b; throws if b does not divide a.
  friend MPoly exact_div(MPoly a, const MPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "multivariate division by 0");
    MPoly q;
    auto [eb, cb] = b.leading_term();
    Rational inv = cb.inverse();
    while (!a.is_zero()) {
      auto [ea, ca] = a.leading_term();
      Exps e;
      for (std::size_t i = 0; i < N; ++i) {
        e[i] = ea[i] - eb[i];
        if (e[i] < 0) fail(ErrorKind::DivisionByZero, "inexact multivariate division");
      }
      MPoly t = monomial(ca * inv, e);
      q += t;
      a -= t * b;
    }
    return q;
  }

  /// Text with variables named by `names`, highest lex term first.
  std::string str(const std::array<char, N>& names) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.str();
      bool neg = cs[0] == '-';
      if (neg) cs.erase(0, 1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += cs;
      else if (cs == "1")
        out += mono;
      else
        out += cs + "*" + mono;
    }
    return out;
  }

  static int total(const Exps& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  }

 private:
  void add_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

using Poly2 = MPoly<2>;
using HomPoly = MPoly<3>;

/// Polynomial in y with coefficients in Q[x] (index = power of y).
using RecPoly = std::vector<QPoly>;

RecPoly to_recursive(const Poly2& p);  // variable 0 is x, variable 1 is y
Poly2 from_recursive(const RecPoly& p);

/// gcd in Q[x, y], normalised so its lex-leading coefficient is 1.
Poly2 gcd(const Poly2& a, const Poly2& b);
/// gcd of homogeneous polynomials in X, Y, Z (homogeneous, lex-leading coefficient 1).
HomPoly gcd(const HomPoly& a, const HomPoly& b);

/// Dehomogenise by Z = 1.
Poly2 dehomogenize(const HomPoly& p);
/// Homogenise to total degree d (>= degree of p) with the third variable.
HomPoly homogenize(const Poly2& p, int d);

/// Parses polynomial expressions with + - * ^, parentheses and rational
/// literals in the variables named by `names`.
HomPoly parse_hompoly(std::string_view text);
Poly2 parse_poly2(std::string_view text, const std::array<char, 2>& names);

/// Resultant with respect to y of two polynomials in Q[x][y]; a polynomial in x.
QPoly resultant_y(const Poly2& a, const Poly2& b);

}  // namespace cremona
