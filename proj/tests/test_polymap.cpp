#include <random>

#include "cremona/cremona_map.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

CremonaMap M(const std::string& s) { return CremonaMap::parse(s); }

const CremonaMap sigma = M("[Y*Z : X*Z : X*Y]");
const CremonaMap tau = M("[Y : X : Z]");
const CremonaMap nu1 = M("[X*Y : Z^2 : Y*Z]");
const CremonaMap nu2 = M("[Z^2 : X*Y : X*Z]");

CremonaMap random_linear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    std::array<Rational, 9> m;
    for (auto& v : m) v = d(rng);
    if (!det3(m).is_zero()) return CremonaMap::from_linear(ProjLinearMap(m));
  }
}

CremonaMap random_word(std::mt19937_64& rng, int quadratic_letters) {
  CremonaMap f = random_linear(rng);
  const CremonaMap gens[] = {sigma, nu1, nu2};
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < quadratic_letters; ++i) f = random_linear(rng) * gens[pick(rng)] * f;
  return f;
}

}  // namespace

TEST_CASE("compose examples") {
  CHECK((sigma * sigma).is_identity());
  // Raw substitution sigma(nu1) before gcd removal, computed independently.
  HomPoly X = HomPoly::var(0), Y = HomPoly::var(1), Z = HomPoly::var(2);
  HomPoly a = X * Y, b = Z * Z, c = Y * Z;
  std::array<HomPoly, 3> raw = {b * c, a * c, a * b};
  CHECK(raw[0] == parse_hompoly("Y*Z^3"));
  CHECK(raw[1] == parse_hompoly("X*Y^2*Z"));
  CHECK(raw[2] == parse_hompoly("X*Y*Z^2"));
  HomPoly common = gcd(gcd(raw[0], raw[1]), raw[2]);
  CHECK(common == Y * Z);
  CHECK(sigma * nu1 == nu2);
  CHECK((sigma * nu1).degree() == 2);
  CHECK(sigma * tau == M("[X*Z : Y*Z : X*Y]"));
  CHECK(tau * sigma == M("[X*Z : Y*Z : X*Y]"));
}

TEST_CASE("degree examples") {
  CHECK(sigma.degree() == 2);
  CHECK(CremonaMap::from_linear(ProjLinearMap::tau()).degree() == 1);
  // generic translate between two sigmas: quadratic o quadratic, disjoint base points
  auto a = CremonaMap::from_linear(ProjLinearMap({1, 0, 1, 0, 1, 2, 1, 1, 1}));
  CHECK((sigma * a * sigma).degree() == 4);
}

TEST_CASE("eval_at examples") {
  CHECK(sigma(ProjPoint(1, 1, 1)) == ProjPoint(1, 1, 1));
  try {
    (void)sigma(ProjPoint::p1());
    FAIL("expected BasePointEvaluation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BasePointEvaluation);
  }
  CHECK(nu1(ProjPoint(1, 1, 1)) == ProjPoint(1, 1, 1));
}

TEST_CASE("maps_equal examples") {
  CHECK(M("[Y*Z : X*Z : X*Y]") == M("[2*Y*Z : 2*X*Z : 2*X*Y]"));
  CHECK_FALSE(sigma == tau);
  CHECK(tau * sigma * tau == sigma);
}

TEST_CASE("linear_to_cremona examples") {
  CHECK(CremonaMap::from_linear(ProjLinearMap::identity()).str() == "[X : Y : Z]");
  CHECK(CremonaMap::from_linear(ProjLinearMap::tau()) == M("[Y : X : Z]"));
  CHECK(CremonaMap::from_linear(ProjLinearMap({-1, 0, 1, 0, 1, 0, 0, 0, 1})) == M("[Z - X : Y : Z]"));
  CHECK(M("[Z - X : Y : Z]").to_linear() == ProjLinearMap({-1, 0, 1, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("malformed triples") {
  CHECK_THROWS_AS(M("[X^2 : Y : Z]"), Error);
  try {
    (void)M("[X*Y : 2*X*Y : 0]");
    FAIL("expected CollapsedMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CollapsedMap);
  }
  CHECK_THROWS_AS(M("[X : Y]"), Error);
  CHECK_THROWS_AS(M("[X + : Y : Z]"), Error);
}

TEST_CASE("printing round-trips") {
  auto f = M("[2*X^2 - 1/3*Y*Z : X*Z : -Z^2]");
  CHECK(M(f.str()) == f);
}

TEST_CASE("composition properties on random generator words") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    auto f = random_word(rng, 1), g = random_word(rng, 1), h = random_linear(rng) * sigma;
    CHECK((h * g) * f == h * (g * f));
    CHECK((g * f).degree() <= g.degree() * f.degree());
    std::uniform_int_distribution<int> d(-9, 9);
    ProjPoint p(d(rng), d(rng), 7);
    try {
      ProjPoint q = f(p);
      ProjPoint r = g(q);
      CHECK((g * f)(p) == r);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BasePointEvaluation);
    }
  }
}

TEST_CASE("gcd kernels") {
  Poly2 a = parse_poly2("(x - y)^2*(x + 2*y + 1)", {'x', 'y'});
  Poly2 b = parse_poly2("(x - y)*(x^2 + y)", {'x', 'y'});
  CHECK(gcd(a, b) == parse_poly2("x - y", {'x', 'y'}));
  CHECK(gcd(parse_poly2("x^2 - 1", {'x', 'y'}), parse_poly2("x*y - y", {'x', 'y'})) == parse_poly2("x - 1", {'x', 'y'}));
  HomPoly h1 = parse_hompoly("Z^2*(X - Y)*(X + Z)"), h2 = parse_hompoly("Z*(X - Y)*(Y + Z)");
  CHECK(gcd(h1, h2) == parse_hompoly("X*Z - Y*Z"));
  // Res_y(y - x, y + x) = -2x (up to the sign convention)
  QPoly r = resultant_y(parse_poly2("y - x", {'x', 'y'}), parse_poly2("y + x", {'x', 'y'}));
  CHECK(r.degree() == 1);
  CHECK(r(Rational(0)).is_zero());
  QPoly r2 = resultant_y(parse_poly2("x*y^2 - 1", {'x', 'y'}), parse_poly2("y - x", {'x', 'y'}));
  CHECK(r2.monic() == parse_qpoly("x^3 - 1"));
}

TEST_CASE("bivariate gcd property: planted common factor") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3), dd(0, 4);
  auto rnd = [&](int deg) {
    Poly2 p;
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j) p += Poly2::monomial(Rational(c(rng), 1 + (c(rng) + 3) % 3), {i, j});
    return p;
  };
  for (int t = 0; t < 40; ++t) {
    Poly2 f = rnd(dd(rng)), g = rnd(dd(rng)), h = rnd(1 + dd(rng) % 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Poly2 a = f * h, b = g * h;
    Poly2 r = gcd(a, b);
    CHECK_NOTHROW((void)exact_div(a, r));
    CHECK_NOTHROW((void)exact_div(b, r));
    CHECK_NOTHROW((void)exact_div(r, h));
  }
}
