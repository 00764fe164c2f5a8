#pragma once

#include <string>
#include <string_view>

#include "cremona/upoly.hpp"

namespace cremona {

/// Element of Q(x): numerator / denominator with gcd 1 and monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(QPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(QPoly num, QPoly den);

  /// Parses "P" or "(P)/(Q)" with P, Q polynomials in x.
  static RationalFunction parse(std::string_view text);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RationalFunction inverse() const;
  Rational operator()(const Rational& at) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "P" when the denominator is 1, otherwise "(P)/(Q)".
  std::string str() const;

 private:
  QPoly num_, den_;
};

static_assert(Field<RationalFunction>);

}  // namespace cremona
