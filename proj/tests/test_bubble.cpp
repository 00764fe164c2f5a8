#include <algorithm>

#include "cremona/bubble.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cremona;
using testgen::nu1;
using testgen::nu2;
using testgen::sigma;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

const BubblePoint P1(ProjPoint::p1()), P2(ProjPoint::p2()), P3(ProjPoint::p3());
const TowerStep vertical{Chart::Second, Rational(0)};

// Quadratic map with the tower p1 < p1[first,0] < p1[first,0][first,1].
const CremonaMap chain = CremonaMap::parse("[Y^2 - X*Z : Y*Z : Z^2]");

}  // namespace

TEST_CASE("multiplicity_at examples") {
  CHECK(multiplicity_at(sigma(), P1) == 1);
  CHECK(multiplicity_at(nu1(), P2) == 1);
  CHECK(multiplicity_at(sigma(), BubblePoint(ProjPoint(1, 1, 1))) == 0);
  CHECK(multiplicity_at(nu1(), P1.child(vertical)) == 1);
  CHECK(multiplicity_at(sigma(), P1.child(vertical)) == 0);
  std::array<HomPoly, 3> raw = {parse_hompoly("X*Y*Z"), parse_hompoly("X*Z^2"), parse_hompoly("X*Y^2")};
  CHECK(kind_of([&] { (void)multiplicity_at(raw, P1); }) == ErrorKind::NotSimplified);
}

TEST_CASE("base_points examples") {
  CHECK(base_points(sigma()) == MultiplicityMap{{P1, 1}, {P2, 1}, {P3, 1}});
  CHECK(base_points(nu1()) == MultiplicityMap{{P1, 1}, {P2, 1}, {P1.child(vertical), 1}});
  CHECK(base_points(nu2()) == MultiplicityMap{{P1, 1}, {P2, 1}, {P2.child(vertical), 1}});
  // the infinitely near points of nu1 and nu2 point along Y = 0 and X = 0
  CHECK(tangent_point(P1.child(vertical)) == ProjPoint::p3());
  CHECK(tangent_point(P2.child(vertical)) == ProjPoint::p3());
  CHECK(base_points(CremonaMap::identity()).empty());
  auto tower = base_points(chain);
  BubblePoint q1 = P1.child({Chart::First, 0}), q2 = q1.child({Chart::First, 1});
  CHECK(tower == MultiplicityMap{{P1, 1}, {q1, 1}, {q2, 1}});
}

TEST_CASE("base_points failures") {
  CHECK(kind_of([] { (void)base_points(CremonaMap::parse("[X^2 : Y^2 : Z^2]")); }) == ErrorKind::NotHomaloidal);
  // conjugate pair on Z = 0 plus (0:0:1)
  auto conj = CremonaMap::parse("[X^2 - 2*Y^2 : X*Z : Y*Z]");
  CHECK(kind_of([&] { (void)base_points(conj); }) == ErrorKind::NonRationalBasePoint);
  auto locus = base_locus(conj);
  CHECK(locus.non_rational);
  CHECK(locus.non_rational_factor.starts_with("t^2 - 1/2"));
  CHECK(locus.mults == MultiplicityMap{{P3, 1}});
  // conjugate pair in the affine chart, found through elimination
  auto affine = CremonaMap::parse("[X^2 - 2*Z^2 : X*Y : Y*Z]");
  CHECK(kind_of([&] { (void)base_points(affine); }) == ErrorKind::NonRationalBasePoint);
  CHECK(base_locus(affine).mults == MultiplicityMap{{P2, 1}});
  CHECK(base_locus(affine).non_rational_factor.starts_with("x^2 - 2"));
}

TEST_CASE("blow_up examples") {
  auto b = blow_up(P1, nu1());
  CHECK(b.multiplicity == 1);
  CHECK(b.exceptional.points == std::vector<TowerStep>{vertical});
  CHECK(blow_up(P1, sigma()).exceptional.points.empty());
  // one blow-up of the chain leaves a base point on the exceptional curve,
  // and a second one still does
  auto c1 = blow_up(P1, chain);
  CHECK(c1.exceptional.points == std::vector<TowerStep>{{Chart::First, 0}});
  auto c2 = blow_up(P1.child({Chart::First, 0}), chain);
  CHECK(c2.exceptional.points == std::vector<TowerStep>{{Chart::First, 1}});
  CHECK(blow_up(P1.child({Chart::First, 0}).child({Chart::First, 1}), chain).exceptional.points.empty());
  CHECK(kind_of([] { (void)blow_up(BubblePoint(ProjPoint(1, 1, 1)), sigma()); }) ==
        ErrorKind::DegenerateConfiguration);
}

TEST_CASE("class_of examples") {
  auto id = class_of(CremonaMap::identity(), CremonaMap::identity());
  CHECK(id.degree == 1);
  CHECK(id.mults.empty());
  auto s = class_of(sigma(), sigma());
  CHECK(s.degree == 2);
  CHECK(s.sorted_multiplicities() == std::vector<int>{1, 1, 1});
  auto a = CremonaMap::from_linear(ProjLinearMap({1, 0, 1, 0, 1, 2, 1, 1, 1}));
  auto f = sigma() * a * sigma();
  auto finv = sigma() * CremonaMap::from_linear(ProjLinearMap({1, 0, 1, 0, 1, 2, 1, 1, 1}).inverse()) * sigma();
  CHECK((f * finv).is_identity());
  auto c = class_of(f, finv);
  CHECK(c.degree == 4);
  CHECK(c.sorted_multiplicities() == std::vector<int>{2, 2, 2, 1, 1, 1});
  CHECK(c.sum_m() == 9);
  CHECK(c.sum_m2() == 15);
}

TEST_CASE("pushforward_quadratic examples") {
  auto lines = pushforward_quadratic(CremonaMap::identity(), sigma(), sigma());
  CHECK(lines.degree == 2);
  CHECK(lines.mults == base_points(sigma()));
  auto back = pushforward_quadratic(sigma(), sigma(), sigma());
  CHECK(back.degree == 1);
  CHECK(back.mults.empty());

  // degree 3 with mults (2,1,1,1,1): sigma o a o sigma with a fixing p1
  auto a = CremonaMap::from_linear(ProjLinearMap({1, 1, 1, 0, 1, 2, 0, 1, -1}));
  auto h = sigma() * a * sigma();
  auto cls = system_class(h);
  REQUIRE(cls.degree == 3);
  REQUIRE(cls.sorted_multiplicities() == std::vector<int>{2, 1, 1, 1, 1});
  std::vector<std::pair<int, BubblePoint>> pts;
  for (const auto& [q, m] : cls.mults)
    if (q.is_proper()) pts.emplace_back(m, q);
  std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.first > y.first; });
  REQUIRE(pts.size() >= 3);
  std::array<ProjPoint, 3> q = {pts[0].second.root(), pts[1].second.root(), pts[2].second.root()};
  REQUIRE_FALSE(collinear(q[0], q[1], q[2]));
  std::array<ProjPoint, 4> src = {q[0], q[1], q[2], complete_frame(q)};
  std::array<ProjPoint, 4> dst = {ProjPoint::p1(), ProjPoint::p2(), ProjPoint::p3(), ProjPoint(1, 1, 1)};
  auto cm = linear_map_through(src, dst);
  auto theta = sigma() * CremonaMap::from_linear(cm);
  auto theta_inv = CremonaMap::from_linear(cm.inverse()) * sigma();
  auto img = pushforward_quadratic(h, theta, theta_inv);
  CHECK(img.degree == quadratic_pushforward_degree(3, pts[0].first, pts[1].first, pts[2].first));
  CHECK(img.degree == 2);
}

TEST_CASE("jonq_degree_formula examples") {
  CHECK(jonq_degree_formula(2, 2, 1, 2) == 1);
  CHECK(jonq_degree_formula(3, 2, 2, 1) == 3);
  CHECK(jonq_degree_formula(1, 3, 0, 0) == 3);
}

TEST_CASE("serialization round-trips") {
  BubblePoint q(ProjPoint(1, Rational(1, 2), -3), {{Chart::First, Rational(-2, 3)}, vertical});
  CHECK(q.str() == "(1:1/2:-3)[first,-2/3][second,0]");
  CHECK(BubblePoint::parse(q.str()) == q);
  auto m = base_points(nu1());
  CHECK(multiplicity_map_from_json(to_json(m)) == m);
  CHECK(to_json(m).dump() == R"j({"(0:1:0)":1,"(1:0:0)":1,"(1:0:0)[second,0]":1})j");
}

TEST_CASE("tangent directions and transport") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto a = testgen::random_matrix(rng);
    std::uniform_int_distribution<int> d(-4, 4);
    ProjPoint r(d(rng), d(rng), 1), w(d(rng), 1, d(rng));
    if (r == w) continue;
    auto q = direction_towards(r, w);
    CHECK(collinear(r, w, tangent_point(q)));
    auto t = transport(a, q);
    CHECK(t.root() == a(r));
    CHECK(collinear(a(r), a(w), tangent_point(t)));
  }
}

TEST_CASE("base point properties on random generator words") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    auto f = testgen::random_word(rng, 1 + i % 3, 6);
    LinearSystemClass c = system_class(f);
    CAPTURE(f.str());
    CHECK(c.is_homaloidal());
    for (const auto& [q, m] : c.mults) {
      CHECK(multiplicity_at(f, q) == m);
      if (!q.is_proper()) CHECK(c.multiplicity(q.parent()) >= m);
    }
    std::uniform_int_distribution<int> d(-20, 20);
    BubblePoint r(ProjPoint(d(rng), d(rng), 7));
    if (!c.mults.contains(r)) CHECK(multiplicity_at(f, r) == 0);
    if (f.degree() > 1) {
      auto ms = c.sorted_multiplicities();
      REQUIRE(ms.size() >= 3);
      CHECK(ms[0] + ms[1] + ms[2] > f.degree());
    }
  }
}
