#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cremona/cremona_map.hpp"
#include "cremona/moebius.hpp"

namespace cremona {

/// A de Jonquieres map, preserving the pencil of lines through p1 = (1:0:0).
///
/// With x = Y/Z (the line of the pencil) and y = X/Z (position on the line)
/// the map is (x, y) -> ((a x + b)/(c x + d), (alpha(x) y + beta(x))/(gamma(x) y + delta(x))).
class JonqElement {
 public:
  JonqElement(Moebius base, FiberMoebius fiber) : base_(std::move(base)), fiber_(std::move(fiber)) {}
  static JonqElement identity() { return {Moebius::identity(), FiberMoebius::identity()}; }
  /// An element of A n J; throws NotDeJonquieres if m moves p1.
  static JonqElement from_linear(const ProjLinearMap& m);
  /// Throws NotDeJonquieres unless f preserves the pencil through p1.
  static JonqElement from_cremona(const CremonaMap& f);

  const Moebius& base() const { return base_; }
  const FiberMoebius& fiber() const { return fiber_; }

  /// (g * h) = g o h.
  friend JonqElement operator*(const JonqElement& g, const JonqElement& h);
  JonqElement inverse() const;

  CremonaMap to_cremona() const;
  int degree() const { return to_cremona().degree(); }
  bool is_linear() const { return degree() == 1; }
  ProjLinearMap to_linear() const { return to_cremona().to_linear(); }
  bool is_identity() const { return base_.is_identity() && fiber_.is_identity(); }

  friend bool operator==(const JonqElement&, const JonqElement&) = default;

  /// "J([a, b; c, d], [alpha, beta; gamma, delta])" with entries in x.
  std::string str() const;
  static JonqElement parse(std::string_view text);

 private:
  Moebius base_;
  FiberMoebius fiber_;
};

CremonaMap jonq_to_cremona(const JonqElement& g);
JonqElement cremona_to_jonq(const CremonaMap& f);
bool is_in_J(const CremonaMap& f);

nlohmann::json to_json(const JonqElement& g);
JonqElement jonq_from_json(const nlohmann::json& j);

}  // namespace cremona
