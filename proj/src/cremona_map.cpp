#include "cremona/cremona_map.hpp"

namespace cremona {

namespace {

const std::array<char, 3> kNames = {'X', 'Y', 'Z'};

}  // namespace

CremonaMap::CremonaMap(HomPoly f0, HomPoly f1, HomPoly f2) : f_{std::move(f0), std::move(f1), std::move(f2)} {
  int d = -1;
  for (const auto& f : f_) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) fail(ErrorKind::DegenerateConfiguration, "component " + f.str(kNames) + " is not homogeneous");
    if (d >= 0 && f.degree() != d) fail(ErrorKind::DegenerateConfiguration, "components have different degrees");
    d = f.degree();
  }
  if (d < 0) fail(ErrorKind::CollapsedMap, "all components are zero");
  HomPoly g = gcd(gcd(f_[0], f_[1]), f_[2]);
  if (g.degree() > 0)
    for (auto& f : f_)
      if (!f.is_zero()) f = exact_div(f, g);
  std::size_t lead = 0;
  while (f_[lead].is_zero()) ++lead;
  Rational scale = f_[lead].terms().begin()->second.inverse();
  for (auto& f : f_) f = f.scaled(scale);
  degree_ = f_[lead].degree();
  // Image is a point iff all components are proportional.
  bool collapsed = true;
  for (std::size_t i = 0; i < 3 && collapsed; ++i) {
    if (i == lead || f_[i].is_zero()) continue;
    Rational r = f_[i].terms().begin()->second;
    if (!(f_[i] == f_[lead].scaled(r))) collapsed = false;
  }
  if (collapsed || degree_ == 0) fail(ErrorKind::CollapsedMap, "image of [" + str() + "] is a point");
}

CremonaMap CremonaMap::identity() { return {HomPoly::var(0), HomPoly::var(1), HomPoly::var(2)}; }

CremonaMap CremonaMap::from_linear(const ProjLinearMap& m) {
  std::array<HomPoly, 3> rows;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) rows[r] += HomPoly::var(c).scaled(m.at(r, c));
  return {rows[0], rows[1], rows[2]};
}

CremonaMap CremonaMap::parse(std::string_view text) {
  std::string s(text);
  auto a = s.find('[');
  auto b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    fail(ErrorKind::ParseError, "map must look like [P0 : P1 : P2]");
  std::string inner = s.substr(a + 1, b - a - 1);
  std::array<std::string, 3> parts;
  std::size_t idx = 0;
  for (char c : inner) {
    if (c == ':') {
      if (++idx > 2) fail(ErrorKind::ParseError, "map needs exactly three components");
      continue;
    }
    parts[idx].push_back(c);
  }
  if (idx != 2) fail(ErrorKind::ParseError, "map needs exactly three components");
  return {parse_hompoly(parts[0]), parse_hompoly(parts[1]), parse_hompoly(parts[2])};
}

ProjPoint CremonaMap::operator()(const ProjPoint& p) const {
  std::array<Rational, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = f_[i].eval(p.coords());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    fail(ErrorKind::BasePointEvaluation, p.str() + " is a base point of [" + str() + "]");
  return ProjPoint(v);
}

CremonaMap operator*(const CremonaMap& g, const CremonaMap& f) {
  std::array<HomPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = g.f_[i].substitute<3>(f.f_);
  return {out[0], out[1], out[2]};
}

ProjLinearMap CremonaMap::to_linear() const {
  if (degree_ != 1) fail(ErrorKind::DegenerateConfiguration, "map of degree " + std::to_string(degree_) + " is not linear");
  std::array<Rational, 9> m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      HomPoly::Exps e{};
      e[c] = 1;
      m[3 * r + c] = f_[r].coeff(e);
    }
  return ProjLinearMap(m);
}

std::string CremonaMap::str() const {
  return "[" + f_[0].str(kNames) + " : " + f_[1].str(kNames) + " : " + f_[2].str(kNames) + "]";
}

}  // namespace cremona
