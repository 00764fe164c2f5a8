#include <random>

#include "cremona/moebius.hpp"
#include "cremona/projective.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const ProjLinearMap rho1({1, 0, 0, 0, -1, 1, 0, 0, 1});  // (X : Z - Y : Z)

ProjPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  while (true) {
    int a = d(rng), b = d(rng), c = d(rng);
    if (a || b || c) return {a, b, c};
  }
}

ProjLinearMap random_linear(std::mt19937_64& rng, bool fix_p1 = false) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    std::array<Rational, 9> m;
    for (auto& v : m) v = d(rng);
    if (fix_p1) m[3] = m[6] = 0;
    if (!det3(m).is_zero()) return ProjLinearMap(m);
  }
}

}  // namespace

TEST_CASE("apply_linear examples") {
  CHECK(ProjLinearMap::tau()(ProjPoint::p1()) == ProjPoint::p2());
  CHECK(ProjLinearMap::identity()(ProjPoint(2, 3, 5)) == ProjPoint(2, 3, 5));
  CHECK(rho1(ProjPoint::p3()) == ProjPoint(0, 1, 1));
  CHECK(ProjPoint(2, 4, 6).str() == "(1:2:3)");
  CHECK(ProjPoint(0, -2, 1).str() == "(0:1:-1/2)");
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), Error);
}

TEST_CASE("collinear examples") {
  CHECK_FALSE(collinear(ProjPoint::p1(), ProjPoint::p2(), ProjPoint::p3()));
  CHECK(collinear(ProjPoint::p1(), ProjPoint::p2(), ProjPoint(1, 1, 0)));
  CHECK(collinear(ProjPoint(1, 2, 1), ProjPoint(2, 4, 2), ProjPoint::p3()));
}

TEST_CASE("linear_map_through examples") {
  std::array<ProjPoint, 4> std_frame = {ProjPoint::p1(), ProjPoint::p2(), ProjPoint::p3(), {1, 1, 1}};
  CHECK(linear_map_through(std_frame, std_frame).is_identity());
  std::array<ProjPoint, 4> swapped = {ProjPoint::p2(), ProjPoint::p1(), ProjPoint::p3(), {1, 1, 1}};
  // Oracle: tau = (Y:X:Z) is the matrix [[0,1,0],[1,0,0],[0,0,1]].
  CHECK(linear_map_through(std_frame, swapped) == ProjLinearMap({0, 1, 0, 1, 0, 0, 0, 0, 1}));
  std::array<ProjPoint, 4> bad = {ProjPoint::p1(), ProjPoint::p2(), ProjPoint(1, 1, 0), {1, 1, 1}};
  try {
    (void)linear_map_through(bad, std_frame);
    FAIL("expected DegenerateConfiguration");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateConfiguration);
  }
}

TEST_CASE("swap_map examples") {
  CHECK(swap_map(ProjPoint::p1(), ProjPoint::p2()) == ProjLinearMap::tau());
  auto s = swap_map(ProjPoint::p1(), ProjPoint(1, 1, 1));
  CHECK(s(ProjPoint::p1()) == ProjPoint(1, 1, 1));
  CHECK(s(ProjPoint(1, 1, 1)) == ProjPoint::p1());
  CHECK((s * s).is_identity());
  CHECK_THROWS_AS(swap_map(ProjPoint::p1(), ProjPoint::p1()), Error);
}

TEST_CASE("in_A_cap_J examples") {
  CHECK(rho1.fixes_p1());
  CHECK_FALSE(ProjLinearMap::tau().fixes_p1());
  CHECK(ProjLinearMap::identity().fixes_p1());
}

TEST_CASE("group action, swap involution and subgroup properties") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto m1 = random_linear(rng), m2 = random_linear(rng);
    auto p = random_point(rng), q = random_point(rng);
    CHECK(m2(m1(p)) == (m2 * m1)(p));
    CHECK((m1 * m1.inverse()).is_identity());
    if (p != q) {
      auto s = swap_map(p, q);
      CHECK(s(p) == q);
      CHECK(s(q) == p);
      CHECK((s * s).is_identity());
    }
    auto a = random_linear(rng, true), b = random_linear(rng, true);
    CHECK((a * b).fixes_p1());
    CHECK(a.inverse().fixes_p1());
    if (p != ProjPoint::p1() && q != ProjPoint::p1()) {
      auto t = stabilizer_map_sending(p, q);
      CHECK(t.fixes_p1());
      CHECK(t(p) == q);
    }
  }
}

TEST_CASE("matrix and point text round-trip") {
  auto m = ProjLinearMap::parse("[2, 1/2, 0, 0, 1, 0, 0, 0, -1]");
  CHECK(m.str() == "[1, 1/4, 0, 0, 1/2, 0, 0, 0, -1/2]");
  CHECK(ProjLinearMap::parse(m.str()) == m);
  CHECK(ProjPoint::parse("(1 : -2/3 : 0)") == ProjPoint(3, -2, 0));
}

TEST_CASE("moebius arithmetic") {
  Moebius shift(1, 1, 0, 1);
  CHECK((shift * shift.inverse()).is_identity());
  CHECK(shift * shift == Moebius(1, 2, 0, 1));
  FiberMoebius f(QPoly::x(), QPoly(), QPoly(), QPoly(1));  // y -> x y
  // substituting x -> x + 1 gives y -> (x+1) y
  CHECK(f.substitute(shift) == FiberMoebius(parse_qpoly("x + 1"), QPoly(), QPoly(), QPoly(1)));
  CHECK((f * f.inverse()).is_identity());
  // scaling by a polynomial is projectively trivial
  CHECK(FiberMoebius(parse_qpoly("2*x^2"), QPoly(), QPoly(), parse_qpoly("2*x")) == f);
}
