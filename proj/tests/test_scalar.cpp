#include <random>

#include "cremona/prime_field.hpp"
#include "cremona/ratfun.hpp"
#include "cremona/roots.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

QPoly random_qpoly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> cs;
  for (int i = 0, d = deg(rng); i <= d; ++i) cs.push_back(random_rational(rng));
  return QPoly(cs);
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("3/7") * Rational::parse("7/3") == Rational(1));
  CHECK(Rational::parse("-6/-4").str() == "3/2");
  CHECK(Rational(mpz_class(3), mpz_class(-6)).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(0).den() == 1);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  try {
    (void)(Rational(1) / Rational(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(RationalFunction(QPoly::x()) / RationalFunction(), Error);
  CHECK_THROWS_AS(PrimeField(0, 7).inverse(), Error);
}

TEST_CASE("field axioms hold exactly on random rationals") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    // canonical form is idempotent
    CHECK(Rational::parse(a.str()) == a);
    CHECK(Rational(a.num(), a.den()).str() == a.str());
  }
}

TEST_CASE("field axioms hold in F_p") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {5ULL, 7ULL, 101ULL, 1000003ULL}) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(p) - 1);
    for (int i = 0; i < 200; ++i) {
      PrimeField a(d(rng), p), b(d(rng), p), c(d(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == PrimeField(1, p));
      CHECK(a + (-a) == PrimeField(0, p));
    }
  }
  CHECK(PrimeField::from_rational(Rational::parse("1/2"), 7) == PrimeField(4, 7));
}

TEST_CASE("rational function examples") {
  auto x = RationalFunction(QPoly::x());
  CHECK(x / x == RationalFunction(1));
  auto f = RationalFunction::parse("(x^2 - 1)/(x - 1)");
  CHECK(f == RationalFunction(parse_qpoly("x + 1")));
  CHECK(f.str() == "x + 1");
  auto inv = RationalFunction(QPoly(Rational(1)), QPoly::x());
  CHECK((inv + inv).str() == "(2)/(x)");
  CHECK(RationalFunction::parse("(2*x)/(4*x^2 + 2)").den() == parse_qpoly("x^2 + 1/2"));
  auto g = RationalFunction::parse("(x^2 - 1)/(x + 2)");
  CHECK(RationalFunction::parse(g.str()) == g);
}

TEST_CASE("rational function field axioms") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    RationalFunction a(random_qpoly(rng, 3), random_qpoly(rng, 2) + QPoly(Rational(1)));
    RationalFunction b(random_qpoly(rng, 3), random_qpoly(rng, 2) + QPoly(Rational(2)));
    RationalFunction c(random_qpoly(rng, 2));
    if (a.den().is_zero() || b.den().is_zero()) continue;
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(1));
    CHECK(a.den().lc() == Rational(1));
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
  }
}

TEST_CASE("rational roots examples") {
  auto r1 = rational_roots(parse_qpoly("x^2 - 1"));
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.roots[0] == RootMultiplicity{Rational(-1), 1});
  CHECK(r1.roots[1] == RootMultiplicity{Rational(1), 1});
  CHECK(r1.cofactor == QPoly(Rational(1)));

  auto r2 = rational_roots(parse_qpoly("x^2 + 1"));
  CHECK(r2.roots.empty());
  CHECK(r2.cofactor == parse_qpoly("x^2 + 1"));

  // 2x^3 - x^2: oracle is evaluation plus exact division of the claimed factors.
  QPoly p = parse_qpoly("2*x^3 - x^2");
  auto r3 = rational_roots(p);
  REQUIRE(r3.roots.size() == 2);
  CHECK(r3.roots[0] == RootMultiplicity{Rational(0), 2});
  CHECK(r3.roots[1] == RootMultiplicity{Rational::parse("1/2"), 1});
  CHECK(p(Rational::parse("1/2")).is_zero());
  CHECK((p % parse_qpoly("x^2")).is_zero());
  CHECK((p % parse_qpoly("x - 1/2")).is_zero());
  CHECK(r3.cofactor == QPoly(Rational(1)));
}

TEST_CASE("rational roots with large coefficients") {
  // (3x - 1000001)(7x + 2)^2 (x^2 - 2)
  QPoly p = parse_qpoly("3*x - 1000001") * parse_qpoly("7*x + 2").pow(2) * parse_qpoly("x^2 - 2");
  auto r = rational_roots(p);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == RootMultiplicity{Rational::parse("-2/7"), 2});
  CHECK(r.roots[1] == RootMultiplicity{Rational::parse("1000001/3"), 1});
  CHECK(r.cofactor == parse_qpoly("x^2 - 2"));
}

TEST_CASE("rational roots property: exact zeros and degree count") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 80; ++i) {
    QPoly p(Rational(1));
    std::uniform_int_distribution<int> k(0, 4);
    for (int j = 0, n = k(rng); j < n; ++j) p *= QPoly{-random_rational(rng), Rational(1)};
    p *= random_qpoly(rng, 3) + QPoly(Rational(1));
    if (p.is_zero()) continue;
    auto r = rational_roots(p);
    int total = r.cofactor.degree();
    for (const auto& root : r.roots) {
      CHECK(p(root.value).is_zero());
      total += root.multiplicity;
    }
    CHECK(total == p.degree());
    CHECK(rational_roots(r.cofactor).roots.empty());
  }
}

TEST_CASE("resultant matches the product over common structure") {
  // res(x - a, x - b) = a - b up to sign convention res(f, g) = prod g(roots of f)
  QPoly f = parse_qpoly("x - 2"), g = parse_qpoly("x^2 + 1");
  CHECK(resultant(f, g) == Rational(5));
  CHECK(resultant(parse_qpoly("x^2 - 1"), parse_qpoly("x - 1")).is_zero());
  CHECK(resultant(g, f) == Rational(5));
}

TEST_CASE("polynomial printing and parsing round-trip") {
  QPoly p = parse_qpoly("-x^3 + 1/2*x - 7");
  CHECK(p.str() == "-x^3 + (1/2)*x - 7");
  CHECK(parse_qpoly(p.str()) == p);
}
