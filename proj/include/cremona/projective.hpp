#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Point of P^2 over Q, scaled so the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(Rational x, Rational y, Rational z);
  explicit ProjPoint(const std::array<Rational, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  static ProjPoint p1() { return {1, 0, 0}; }
  static ProjPoint p2() { return {0, 1, 0}; }
  static ProjPoint p3() { return {0, 0, 1}; }

  /// Parses "(X:Y:Z)".
  static ProjPoint parse(std::string_view text);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coords() const { return c_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < 3; ++i)
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string str() const;

 private:
  std::array<Rational, 3> c_;
};

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Element of PGL(3, Q) acting on column vectors; row-major storage, scaled so
/// the first nonzero entry is 1.
class ProjLinearMap {
 public:
  explicit ProjLinearMap(const std::array<Rational, 9>& rows);

  static ProjLinearMap identity();
  /// (X:Y:Z) -> (Y:X:Z)
  static ProjLinearMap tau();

  const Rational& at(std::size_t r, std::size_t c) const { return m_[3 * r + c]; }
  const std::array<Rational, 9>& entries() const { return m_; }

  ProjPoint operator()(const ProjPoint& p) const;
  /// Composition: (g * f)(p) = g(f(p)).
  friend ProjLinearMap operator*(const ProjLinearMap& g, const ProjLinearMap& f);
  ProjLinearMap inverse() const;
  bool is_identity() const { return *this == identity(); }
  /// True iff the map fixes p1 = (1:0:0), i.e. lies in A n J.
  bool fixes_p1() const { return at(1, 0).is_zero() && at(2, 0).is_zero(); }

  friend bool operator==(const ProjLinearMap&, const ProjLinearMap&) = default;

  /// Row-major nine-tuple "[a, b, c, d, e, f, g, h, i]".
  std::string str() const;
  static ProjLinearMap parse(std::string_view text);

 private:
  std::array<Rational, 9> m_;
};

Rational det3(const std::array<Rational, 9>& m);

/// The unique projective map with src[i] -> dst[i]; both frames must have no
/// three collinear points.
ProjLinearMap linear_map_through(std::span<const ProjPoint, 4> src, std::span<const ProjPoint, 4> dst);

/// Deterministic candidates used to complete partial frames.
const std::vector<ProjPoint>& completion_candidates();

/// Completes `pts` (no three collinear) with the first candidate keeping that
/// property.
ProjPoint complete_frame(std::span<const ProjPoint> pts);

/// Involution exchanging p and q: the conjugate of tau by the frame map
/// p1->p, p2->q, p3->w, (1:1:1)->v, where w, v are the first completion
/// candidates in general position with p, q.
ProjLinearMap swap_map(const ProjPoint& p, const ProjPoint& q);

/// An element of A n J (fixing p1) sending `from` to `to`; both differ from p1.
ProjLinearMap stabilizer_map_sending(const ProjPoint& from, const ProjPoint& to);

}  // namespace cremona
