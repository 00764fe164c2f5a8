#include "cremona/bubble.hpp"
#include "cremona/jonq.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cremona;

namespace {

JonqElement J(const char* s) { return JonqElement::parse(s); }
CremonaMap M(const char* s) { return CremonaMap::parse(s); }

JonqElement random_jonq(std::mt19937_64& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> c(-3, 3), dd(0, max_deg);
  auto poly = [&] {
    std::vector<Rational> cs(dd(rng) + 1);
    for (auto& v : cs) v = Rational(c(rng), 1 + (c(rng) + 3) % 3);
    return QPoly(cs);
  };
  while (true) {
    try {
      Moebius b(c(rng), c(rng), c(rng), c(rng));
      return {b, FiberMoebius(poly(), poly(), poly(), poly())};
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("jonq_compose examples") {
  auto s = JonqElement::from_cremona(testgen::sigma());
  CHECK(s == J("J([0, 1; 1, 0], [0, 1; 1, 0])"));
  CHECK((s * s).is_identity());
  auto g = J("J([1, 0; 0, 1], [0, x; 1, 0])");
  CHECK(g * JonqElement::identity() == g);
  CHECK(J("J([1, 0; 0, 1], [1, x; 0, 1])") * J("J([1, 1; 0, 1], [1, 0; 0, 1])") == J("J([1, 1; 0, 1], [1, x + 1; 0, 1])"));
  // oracle: the same composition as polynomial maps
  auto a = J("J([1, 0; 0, 1], [1, x; 0, 1])"), b = J("J([1, 1; 0, 1], [1, 0; 0, 1])");
  CHECK((a * b).to_cremona() == a.to_cremona() * b.to_cremona());
}

TEST_CASE("jonq_inverse examples") {
  CHECK(JonqElement::identity().inverse().is_identity());
  auto s = JonqElement::from_cremona(testgen::sigma());
  CHECK(s.inverse() == s);
  auto g = J("J([1, 1; 0, 1], [x, 0; 0, 1])");
  CHECK(g.inverse() == J("J([1, -1; 0, 1], [1, 0; 0, x - 1])"));
  CHECK((g * g.inverse()).is_identity());
}

TEST_CASE("jonq_to_cremona examples (pencil through p1: x = Y/Z, y = X/Z)") {
  auto f = J("J([1, 0; 0, 1], [0, x; 1, 0])").to_cremona();
  CHECK(f == M("[Y*Z : X*Y : X*Z]"));
  CHECK(f.degree() == 2);
  CHECK(J("J([1, 0; 0, 1], [x, 0; 0, 1])").to_cremona() == M("[X*Y : Y*Z : Z^2]"));
  CHECK(J("J([1, 1; 0, 1], [1, 0; 0, 1])").to_cremona() == M("[X : Y + Z : Z]"));
}

TEST_CASE("cremona_to_jonq examples") {
  auto s = cremona_to_jonq(testgen::sigma());
  CHECK(s.base() == Moebius(0, 1, 1, 0));
  CHECK(jonq_to_cremona(s) == testgen::sigma());
  try {
    (void)cremona_to_jonq(M("[Y : X : Z]"));
    FAIL("expected NotDeJonquieres");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDeJonquieres);
  }
  auto g = cremona_to_jonq(M("[Y*Z : X*Y : X*Z]"));
  CHECK(g.base().is_identity());
  CHECK(g.fiber() == FiberMoebius(QPoly(), QPoly::x(), QPoly(1), QPoly()));
}

TEST_CASE("is_in_J examples") {
  CHECK(is_in_J(testgen::nu1()));
  CHECK(is_in_J(testgen::nu2()));
  CHECK_FALSE(is_in_J(M("[Y : X : Z]")));
  CHECK(is_in_J(testgen::sigma()));
  CHECK(is_in_J(M("[X : Z - Y : Z]")));
  CHECK(is_in_J(M("[Z - X : Y : Z]")));
}

TEST_CASE("A n J conversions") {
  ProjLinearMap m({2, 1, -1, 0, 3, 1, 0, 1, 1});
  auto j = JonqElement::from_linear(m);
  CHECK(j.to_cremona() == CremonaMap::from_linear(m));
  CHECK(j.to_linear() == m);
  CHECK_THROWS_AS(JonqElement::from_linear(ProjLinearMap::tau()), Error);
}

TEST_CASE("text and JSON round-trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto g = random_jonq(rng);
    CHECK(JonqElement::parse(g.str()) == g);
    CHECK(jonq_from_json(to_json(g)) == g);
  }
}

TEST_CASE("jonq properties on random elements") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto g = random_jonq(rng), h = random_jonq(rng);
    auto fg = g.to_cremona(), fh = h.to_cremona();
    CHECK(cremona_to_jonq(fg) == g);
    CHECK((g * h).to_cremona() == fg * fh);
    CHECK((g * g.inverse()).is_identity());
    int d = fg.degree();
    if (d >= 2) CHECK(multiplicity_at(fg, BubblePoint(ProjPoint::p1())) == d - 1);
  }
}
