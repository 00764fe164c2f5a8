#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/cremona_map.hpp"

namespace cremona {

/// Blow-up chart. At local coordinates (u,v) centred at a point, First is
/// (u,v) = (s, st) and Second is (u,v) = (st, t). Only the direction (0:1),
/// i.e. s = 0 in Second, is stored in Second; every other direction is First.
enum class Chart { First, Second };

struct TowerStep {
  Chart chart = Chart::First;
  Rational coord;

  friend bool operator==(const TowerStep&, const TowerStep&) = default;
  friend std::strong_ordering operator<=>(const TowerStep& a, const TowerStep& b) {
    if (a.chart != b.chart) return a.chart < b.chart ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.coord <=> b.coord;
  }
};

/// A proper point (empty tower) or a point infinitely near to its root.
///
/// The local chart at the root is fixed by the root's normal form:
/// (1:a:b) uses u = Y/X - a, v = Z/X - b; (0:1:b) uses u = X/Y, v = Z/Y - b;
/// (0:0:1) uses u = X/Z, v = Y/Z. After a First step at t0 the new local
/// coordinates are (s, t - t0); after a Second step they are (s, t).
class BubblePoint {
 public:
  BubblePoint(ProjPoint root, std::vector<TowerStep> tower = {}) : root_(std::move(root)), tower_(std::move(tower)) {}

  const ProjPoint& root() const { return root_; }
  const std::vector<TowerStep>& tower() const { return tower_; }
  bool is_proper() const { return tower_.empty(); }
  std::size_t level() const { return tower_.size(); }

  BubblePoint child(TowerStep s) const;
  BubblePoint parent() const;

  /// True if this point lies strictly above q in q's tower.
  bool is_infinitely_near(const BubblePoint& q) const;
  /// True if this point lies in the first neighbourhood of q.
  bool is_in_first_neighbourhood_of(const BubblePoint& q) const;

  /// Root followed by "[first,t]" / "[second,0]" steps.
  std::string str() const;
  static BubblePoint parse(std::string_view text);

  friend bool operator==(const BubblePoint&, const BubblePoint&) = default;
  friend std::strong_ordering operator<=>(const BubblePoint& a, const BubblePoint& b) {
    if (auto c = a.root_ <=> b.root_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.tower_.begin(), a.tower_.end(), b.tower_.begin(),
                                                  b.tower_.end());
  }

 private:
  ProjPoint root_;
  std::vector<TowerStep> tower_;
};

using MultiplicityMap = std::map<BubblePoint, int>;

struct LinearSystemClass {
  int degree = 1;
  MultiplicityMap mults;

  int sum_m() const;
  int sum_m2() const;
  bool is_homaloidal() const { return sum_m() == 3 * degree - 3 && sum_m2() == degree * degree - 1; }
  int multiplicity(const BubblePoint& q) const;
  /// Multiplicities in decreasing order.
  std::vector<int> sorted_multiplicities() const;
};

/// Three polynomials in local coordinates (u,v) centred at some point.
using LocalSystem = std::array<Poly2, 3>;

/// The system of f in the canonical chart of p, translated to p.
LocalSystem local_system(const std::array<HomPoly, 3>& f, const ProjPoint& p);
/// Minimum order at the origin over the nonzero members.
int local_multiplicity(const LocalSystem& s);
/// Strict transform through one tower step, recentred at the new point.
LocalSystem strict_transform(const LocalSystem& s, int m, const TowerStep& step);

struct ExceptionalPoints {
  std::vector<TowerStep> points;
  /// A common zero on the exceptional curve that is not defined over Q.
  bool non_rational = false;
  QPoly factor;  // in t for First; set when non_rational
};
ExceptionalPoints exceptional_points(const LocalSystem& s, int m);

/// Local data of the blow-up of a system at q.
struct BlowUp {
  int multiplicity = 0;
  LocalSystem first_chart;   // divided by s^m, not recentred
  LocalSystem second_chart;  // divided by t^m
  ExceptionalPoints exceptional;
};
BlowUp blow_up(const BubblePoint& q, const CremonaMap& f);

int multiplicity_at(const CremonaMap& f, const BubblePoint& q);
/// Same for a raw triple; throws NotSimplified if the components share a factor.
int multiplicity_at(const std::array<HomPoly, 3>& f, const BubblePoint& q);

struct BaseLocus {
  MultiplicityMap mults;
  bool non_rational = false;
  /// Where the first non-rational common zero was found, with its factor.
  std::string non_rational_factor;
};
/// All rational base points without the homaloidal certificate.
BaseLocus base_locus(const CremonaMap& f);
/// Base points certified by sum m = 3d - 3 and sum m^2 = d^2 - 1.
MultiplicityMap base_points(const CremonaMap& f);

/// Class of the system spanned by the components of h.
LinearSystemClass system_class(const CremonaMap& h);
/// Class of f: its degree with the base points of its inverse.
LinearSystemClass class_of(const CremonaMap& f, const CremonaMap& f_inverse);

/// Degree 2d - m(q0) - m(q1) - m(q2) of the image of a system under a quadratic map.
int quadratic_pushforward_degree(int d, int m0, int m1, int m2);

/// Image of the system spanned by h under the quadratic map theta: the class
/// of h o theta^{-1}, cross-checked against the degree formula and the
/// multiplicities d - m(q_j) - m(q_k) at the base points of theta^{-1}.
LinearSystemClass pushforward_quadratic(const CremonaMap& h, const CremonaMap& theta, const CremonaMap& theta_inverse);

/// D*d - (D-1)*m0 - sum of the remaining multiplicities.
int jonq_degree_formula(int d, int D, int m0, int rest_sum);

/// A point w != root on the tangent line of a first-neighbourhood point.
ProjPoint tangent_point(const BubblePoint& q);
/// The first-neighbourhood point over root in the direction of the line through root and w.
BubblePoint direction_towards(const ProjPoint& root, const ProjPoint& w);
/// Image of a point of level <= 1 under a linear map.
BubblePoint transport(const ProjLinearMap& a, const BubblePoint& q);

nlohmann::json to_json(const MultiplicityMap& m);
MultiplicityMap multiplicity_map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LinearSystemClass& c);

}  // namespace cremona
