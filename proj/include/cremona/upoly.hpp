#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Dense univariate polynomial; coeffs_[i] is the coefficient of x^i and the
/// leading coefficient is never zero (the zero polynomial is empty).
template <Field F>
class UPoly {
 public:
  UPoly() = default;
  UPoly(F c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  UPoly(int c) : UPoly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

  static UPoly x() { return UPoly(std::vector<F>{F(0), F(1)}); }
  static UPoly monomial(F c, std::size_t e) {
    std::vector<F> v(e + 1, F(0));
    v[e] = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const F& lc() const { return coeffs_.back(); }
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
  const std::vector<F>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const F& c) const {
    if (c.is_zero()) return {};
    UPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by 0");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r = a.coeffs_;
    std::vector<F> q(a.coeffs_.size() - b.coeffs_.size() + 1, F(0));
    F inv = b.lc().inverse();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      F c = r[k + db] * inv;
      q[k] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - c * b.coeffs_[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  bool divides(const UPoly& a) const { return (a % *this).is_zero(); }

  UPoly monic() const { return is_zero() ? *this : scaled(lc().inverse()); }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> d(coeffs_.size() - 1, F(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * F(static_cast<int>(i));
    return UPoly(std::move(d));
  }

  UPoly pow(unsigned e) const {
    UPoly r(F(1)), b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitutes x -> g.
  UPoly compose(const UPoly& g) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + UPoly(*it);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const F& c = coeffs_[i];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = cs == "1";
      if (i == 0) {
        os << cs;
      } else {
        if (!unit) os << (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
template <Field F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = UPoly<F>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Resultant of a and b over the field, by the Euclidean recurrence.
template <Field F>
F resultant(UPoly<F> a, UPoly<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F acc(1);
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      F p(1);
      for (int i = 0; i < da; ++i) p = p * b.lc();
      return acc * p;
    }
    if (da < db) {
      if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
      std::swap(a, b);
      continue;
    }
    auto r = UPoly<F>::divmod(a, b).second;
    if (r.is_zero()) return F(0);
    // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    int dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc = acc * b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

using QPoly = UPoly<Rational>;

/// Monic gcd over Q by a multi-modular method; the result is checked by
/// exact division so unlucky primes cannot produce a wrong answer.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Parses a univariate polynomial over Q written in `var`, e.g. "x^2 - 1/2*x + 3".
QPoly parse_qpoly(std::string_view text, char var = 'x');

/// Multiplies by the lcm of denominators and divides by the integer content,
/// making the leading coefficient positive. Returns the integer coefficients.
std::vector<mpz_class> primitive_integer_coeffs(const QPoly& p);

}  // namespace cremona
