#include "cremona/named.hpp"

namespace cremona::named {

namespace {
ProjLinearMap matrix(std::initializer_list<int> e) {
  std::array<Rational, 9> m;
  std::size_t i = 0;
  for (int v : e) m[i++] = v;
  return ProjLinearMap(m);
}
}  // namespace

const CremonaMap& sigma() {
  static const CremonaMap m = CremonaMap::parse("[Y*Z : X*Z : X*Y]");
  return m;
}
const CremonaMap& nu1() {
  static const CremonaMap m = CremonaMap::parse("[X*Y : Z^2 : Y*Z]");
  return m;
}
const CremonaMap& nu2() {
  static const CremonaMap m = CremonaMap::parse("[Z^2 : X*Y : X*Z]");
  return m;
}
const ProjLinearMap& tau() {
  static const ProjLinearMap m = ProjLinearMap::tau();
  return m;
}
const ProjLinearMap& rho1() {
  static const ProjLinearMap m = matrix({1, 0, 0, 0, -1, 1, 0, 0, 1});
  return m;
}
const ProjLinearMap& rho2() {
  static const ProjLinearMap m = matrix({-1, 0, 1, 0, 1, 0, 0, 0, 1});
  return m;
}

const JonqElement& sigma_j() {
  static const JonqElement g = JonqElement::from_cremona(sigma());
  return g;
}
const JonqElement& nu1_j() {
  static const JonqElement g = JonqElement::from_cremona(nu1());
  return g;
}
const JonqElement& nu2_j() {
  static const JonqElement g = JonqElement::from_cremona(nu2());
  return g;
}
const JonqElement& rho1_j() {
  static const JonqElement g = JonqElement::from_linear(rho1());
  return g;
}
const JonqElement& rho2_j() {
  static const JonqElement g = JonqElement::from_linear(rho2());
  return g;
}

const CremonaMap* lookup(std::string_view name) {
  static const CremonaMap t = CremonaMap::from_linear(tau());
  static const CremonaMap r1 = CremonaMap::from_linear(rho1());
  static const CremonaMap r2 = CremonaMap::from_linear(rho2());
  if (name == "sigma") return &sigma();
  if (name == "nu1") return &nu1();
  if (name == "nu2") return &nu2();
  if (name == "tau") return &t;
  if (name == "rho1") return &r1;
  if (name == "rho2") return &r2;
  return nullptr;
}

}  // namespace cremona::named
