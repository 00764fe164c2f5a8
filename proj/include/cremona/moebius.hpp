#pragma once

#include <array>
#include <string>

#include "cremona/ratfun.hpp"
#include "cremona/upoly.hpp"

namespace cremona {

/// Element of PGL(2, Q): t -> (a t + b) / (c t + d), first nonzero entry 1.
class Moebius {
 public:
  Moebius(Rational a, Rational b, Rational c, Rational d);
  static Moebius identity() { return {1, 0, 0, 1}; }

  const Rational& a() const { return m_[0]; }
  const Rational& b() const { return m_[1]; }
  const Rational& c() const { return m_[2]; }
  const Rational& d() const { return m_[3]; }
  const std::array<Rational, 4>& entries() const { return m_; }

  /// (g * f)(t) = g(f(t)).
  friend Moebius operator*(const Moebius& g, const Moebius& f);
  Moebius inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  bool is_identity() const { return *this == identity(); }
  friend bool operator==(const Moebius&, const Moebius&) = default;

  std::string str() const;

 private:
  std::array<Rational, 4> m_;
};

/// Element of PGL(2, Q(x)) stored with polynomial entries [alpha beta; gamma
/// delta], coprime, the first nonzero entry monic. Acts on y by
/// y -> (alpha y + beta) / (gamma y + delta).
class FiberMoebius {
 public:
  FiberMoebius(QPoly alpha, QPoly beta, QPoly gamma, QPoly delta);
  static FiberMoebius from_rational(const RationalFunction& alpha, const RationalFunction& beta,
                                    const RationalFunction& gamma, const RationalFunction& delta);
  static FiberMoebius identity() { return {QPoly(1), QPoly(), QPoly(), QPoly(1)}; }

  const QPoly& alpha() const { return m_[0]; }
  const QPoly& beta() const { return m_[1]; }
  const QPoly& gamma() const { return m_[2]; }
  const QPoly& delta() const { return m_[3]; }
  const std::array<QPoly, 4>& entries() const { return m_; }
  int max_entry_degree() const;

  friend FiberMoebius operator*(const FiberMoebius& g, const FiberMoebius& f);
  FiberMoebius inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  /// Substitutes x -> base(x), rescaled to keep polynomial entries.
  FiberMoebius substitute(const Moebius& base) const;
  bool is_identity() const { return *this == identity(); }
  friend bool operator==(const FiberMoebius&, const FiberMoebius&) = default;

  std::string str() const;

 private:
  std::array<QPoly, 4> m_;
};

}  // namespace cremona
