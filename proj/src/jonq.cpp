#include "cremona/jonq.hpp"

#include <cctype>

namespace cremona {

namespace {

// sum c_i x^i -> sum c_i Y^i Z^(k-i)
HomPoly homogenize_yz(const QPoly& e, int k) {
  HomPoly out;
  const auto& cs = e.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i)
    out += HomPoly::monomial(cs[i], {0, static_cast<int>(i), k - static_cast<int>(i)});
  return out;
}

[[noreturn]] void not_jonq(const std::string& why) { fail(ErrorKind::NotDeJonquieres, why); }

}  // namespace

JonqElement JonqElement::from_linear(const ProjLinearMap& m) {
  if (!m.fixes_p1()) not_jonq("linear map " + m.str() + " moves p1");
  auto e = [&](std::size_t r, std::size_t c) { return m.at(r, c); };
  Moebius base(e(1, 1), e(1, 2), e(2, 1), e(2, 2));
  FiberMoebius fiber(QPoly(e(0, 0)), QPoly{e(0, 2), e(0, 1)}, QPoly(), QPoly{e(2, 2), e(2, 1)});
  return {base, fiber};
}

JonqElement operator*(const JonqElement& g, const JonqElement& h) {
  return {g.base_ * h.base_, g.fiber_.substitute(h.base_) * h.fiber_};
}

JonqElement JonqElement::inverse() const {
  Moebius b = base_.inverse();
  return {b, fiber_.inverse().substitute(b)};
}

CremonaMap JonqElement::to_cremona() const {
  const int k = fiber_.max_entry_degree();
  const HomPoly X = HomPoly::var(0), Y = HomPoly::var(1), Z = HomPoly::var(2);
  HomPoly N = homogenize_yz(fiber_.alpha(), k) * X + homogenize_yz(fiber_.beta(), k) * Z;
  HomPoly D = homogenize_yz(fiber_.gamma(), k) * X + homogenize_yz(fiber_.delta(), k) * Z;
  HomPoly P = Y.scaled(base_.a()) + Z.scaled(base_.b());
  HomPoly Q = Y.scaled(base_.c()) + Z.scaled(base_.d());
  return CremonaMap(N * Q, P * D, D * Q);
}

JonqElement JonqElement::from_cremona(const CremonaMap& f) {
  // Affine chart x = Y/Z, y = X/Z.
  const std::array<Poly2, 3> subs = {Poly2::var(1), Poly2::var(0), Poly2(1)};
  Poly2 F0 = f[0].substitute<2>(subs), F1 = f[1].substitute<2>(subs), F2 = f[2].substitute<2>(subs);
  if (F0.is_zero() || F1.is_zero() || F2.is_zero()) not_jonq("a component vanishes on Z = 1");
  Poly2 g = gcd(F1, F2);
  Poly2 P = exact_div(F1, g), Q = exact_div(F2, g);
  if (P.degree_in(1) > 0 || Q.degree_in(1) > 0 || P.degree() > 1 || Q.degree() > 1)
    not_jonq("the pencil through p1 is not preserved");
  auto lin = [](const Poly2& p, int i) { return p.coeff({i, 0}); };
  if ((lin(P, 1) * lin(Q, 0) - lin(P, 0) * lin(Q, 1)).is_zero()) not_jonq("the pencil is contracted");
  Moebius base(lin(P, 1), lin(P, 0), lin(Q, 1), lin(Q, 0));

  Poly2 h = gcd(F0, F2);
  RecPoly N = to_recursive(exact_div(F0, h)), D = to_recursive(exact_div(F2, h));
  if (N.size() > 2 || D.size() > 2) not_jonq("not of degree one on the lines of the pencil");
  N.resize(2);
  D.resize(2);
  if ((N[1] * D[0] - N[0] * D[1]).is_zero()) not_jonq("the lines of the pencil are contracted");
  JonqElement out(base, FiberMoebius(N[1], N[0], D[1], D[0]));
  if (out.to_cremona() != f) not_jonq("round trip through J failed");
  return out;
}

std::string JonqElement::str() const { return "J(" + base_.str() + ", " + fiber_.str() + ")"; }

JonqElement JonqElement::parse(std::string_view text) {
  std::string s(text);
  auto open = s.find("J(");
  auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorKind::ParseError, "expected J([a, b; c, d], [alpha, beta; gamma, delta])");
  std::string body = s.substr(open + 2, close - open - 2);
  std::vector<std::string> mats;
  std::size_t i = 0;
  while ((i = body.find('[', i)) != std::string::npos) {
    auto j = body.find(']', i);
    if (j == std::string::npos) fail(ErrorKind::ParseError, "unbalanced '[' in jonq literal");
    mats.push_back(body.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  if (mats.size() != 2) fail(ErrorKind::ParseError, "jonq literal needs two matrices");
  auto entries = [](const std::string& m) {
    std::vector<std::string> out(1);
    for (char c : m) {
      if (c == ',' || c == ';') out.emplace_back();
      else out.back().push_back(c);
    }
    if (out.size() != 4) fail(ErrorKind::ParseError, "2x2 matrix needs four entries");
    return out;
  };
  auto b = entries(mats[0]);
  auto f = entries(mats[1]);
  auto trim = [](std::string x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    return x;
  };
  Moebius base(Rational::parse(trim(b[0])), Rational::parse(trim(b[1])), Rational::parse(trim(b[2])),
               Rational::parse(trim(b[3])));
  FiberMoebius fiber(parse_qpoly(f[0]), parse_qpoly(f[1]), parse_qpoly(f[2]), parse_qpoly(f[3]));
  return {base, fiber};
}

CremonaMap jonq_to_cremona(const JonqElement& g) { return g.to_cremona(); }
JonqElement cremona_to_jonq(const CremonaMap& f) { return JonqElement::from_cremona(f); }

bool is_in_J(const CremonaMap& f) {
  try {
    (void)JonqElement::from_cremona(f);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDeJonquieres) throw;
    return false;
  }
}

nlohmann::json to_json(const JonqElement& g) {
  const auto& b = g.base().entries();
  const auto& f = g.fiber().entries();
  using nlohmann::json;
  auto row = [](const std::string& u, const std::string& v) { return json::array({u, v}); };
  json out = json::object();
  out["base"] = json::array({row(b[0].str(), b[1].str()), row(b[2].str(), b[3].str())});
  out["fiber"] = json::array({row(f[0].str(), f[1].str()), row(f[2].str(), f[3].str())});
  return out;
}

JonqElement jonq_from_json(const nlohmann::json& j) {
  try {
    const auto& b = j.at("base");
    const auto& f = j.at("fiber");
    auto r = [&](int i, int k) { return Rational::parse(b.at(i).at(k).get<std::string>()); };
    auto p = [&](int i, int k) { return parse_qpoly(f.at(i).at(k).get<std::string>()); };
    return {Moebius(r(0, 0), r(0, 1), r(1, 0), r(1, 1)), FiberMoebius(p(0, 0), p(0, 1), p(1, 0), p(1, 1))};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("jonq JSON: ") + e.what());
  }
}

}  // namespace cremona
