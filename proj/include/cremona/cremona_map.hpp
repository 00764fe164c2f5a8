#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cremona/mpoly.hpp"
#include "cremona/projective.hpp"

namespace cremona {

/// A rational self-map of P^2 as a triple (f0 : f1 : f2) of homogeneous
/// polynomials of a common degree, with the common factor removed and the
/// triple scaled so that the lex-smallest term of the first nonzero component
/// has coefficient 1. Birationality is not enforced by the type.
class CremonaMap {
 public:
  /// Throws CollapsedMap when the image is a point, DegenerateConfiguration
  /// when the components are not homogeneous of one degree.
  CremonaMap(HomPoly f0, HomPoly f1, HomPoly f2);

  static CremonaMap identity();
  static CremonaMap from_linear(const ProjLinearMap& m);
  /// Parses "[P0 : P1 : P2]".
  static CremonaMap parse(std::string_view text);

  int degree() const { return degree_; }
  const HomPoly& operator[](std::size_t i) const { return f_[i]; }
  const std::array<HomPoly, 3>& components() const { return f_; }

  /// Image of p; throws BasePointEvaluation when all components vanish.
  ProjPoint operator()(const ProjPoint& p) const;
  /// (g * f) = g o f: substitute, remove the gcd, canonicalise.
  friend CremonaMap operator*(const CremonaMap& g, const CremonaMap& f);
  bool is_identity() const { return *this == identity(); }
  /// Matrix of a degree-one map.
  ProjLinearMap to_linear() const;

  friend bool operator==(const CremonaMap&, const CremonaMap&) = default;

  std::string str() const;

 private:
  std::array<HomPoly, 3> f_;
  int degree_ = 0;
};

inline CremonaMap compose(const CremonaMap& g, const CremonaMap& f) { return g * f; }
inline bool maps_equal(const CremonaMap& f, const CremonaMap& g) { return f == g; }

}  // namespace cremona
