#include "cremona/bubble.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "cremona/roots.hpp"

namespace cremona {

BubblePoint BubblePoint::child(TowerStep s) const {
  auto t = tower_;
  t.push_back(std::move(s));
  return {root_, std::move(t)};
}

BubblePoint BubblePoint::parent() const {
  if (tower_.empty()) fail(ErrorKind::DegenerateConfiguration, "proper point has no parent");
  return {root_, {tower_.begin(), tower_.end() - 1}};
}

bool BubblePoint::is_infinitely_near(const BubblePoint& q) const {
  return root_ == q.root_ && tower_.size() > q.tower_.size() &&
         std::equal(q.tower_.begin(), q.tower_.end(), tower_.begin());
}

bool BubblePoint::is_in_first_neighbourhood_of(const BubblePoint& q) const {
  return is_infinitely_near(q) && tower_.size() == q.tower_.size() + 1;
}

std::string BubblePoint::str() const {
  std::string out = root_.str();
  for (const auto& s : tower_)
    out += std::string("[") + (s.chart == Chart::First ? "first," : "second,") + s.coord.str() + "]";
  return out;
}

BubblePoint BubblePoint::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto close = s.find(')');
  if (close == std::string::npos) fail(ErrorKind::ParseError, "bubble point needs a root '(X:Y:Z)'");
  ProjPoint root = ProjPoint::parse(s.substr(0, close + 1));
  std::vector<TowerStep> tower;
  std::size_t i = close + 1;
  while (i < s.size()) {
    auto end = s.find(']', i);
    if (s[i] != '[' || end == std::string::npos) fail(ErrorKind::ParseError, "bad tower step in '" + s + "'");
    std::string body = s.substr(i + 1, end - i - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos) fail(ErrorKind::ParseError, "tower step needs 'chart,coord'");
    std::string chart = body.substr(0, comma);
    TowerStep step;
    if (chart == "first") step.chart = Chart::First;
    else if (chart == "second") step.chart = Chart::Second;
    else fail(ErrorKind::ParseError, "unknown chart '" + chart + "'");
    step.coord = Rational::parse(body.substr(comma + 1));
    if (step.chart == Chart::Second && !step.coord.is_zero())
      fail(ErrorKind::ParseError, "second-chart steps are stored at coordinate 0");
    tower.push_back(step);
    i = end + 1;
  }
  return {root, tower};
}

int LinearSystemClass::sum_m() const {
  int s = 0;
  for (const auto& [q, m] : mults) s += m;
  return s;
}

int LinearSystemClass::sum_m2() const {
  int s = 0;
  for (const auto& [q, m] : mults) s += m * m;
  return s;
}

int LinearSystemClass::multiplicity(const BubblePoint& q) const {
  auto it = mults.find(q);
  return it == mults.end() ? 0 : it->second;
}

std::vector<int> LinearSystemClass::sorted_multiplicities() const {
  std::vector<int> out;
  for (const auto& [q, m] : mults) out.push_back(m);
  std::sort(out.rbegin(), out.rend());
  return out;
}

LocalSystem local_system(const std::array<HomPoly, 3>& f, const ProjPoint& p) {
  const Poly2 u = Poly2::var(0), v = Poly2::var(1);
  std::array<Poly2, 3> subs;
  if (!p[0].is_zero()) subs = {Poly2(1), u + Poly2(p[1]), v + Poly2(p[2])};
  else if (!p[1].is_zero()) subs = {u, Poly2(1), v + Poly2(p[2])};
  else subs = {u, v, Poly2(1)};
  LocalSystem out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = f[i].substitute<2>(subs);
  return out;
}

int local_multiplicity(const LocalSystem& s) {
  int m = -1;
  for (const auto& g : s)
    if (!g.is_zero()) m = m < 0 ? g.order() : std::min(m, g.order());
  return std::max(m, 0);
}

namespace {

// u^a v^b -> s^(a+b-m) t^b (First) or s^a t^(a+b-m) (Second).
Poly2 divide_chart(const Poly2& g, int m, Chart chart) {
  Poly2 out;
  for (const auto& [e, c] : g.terms()) {
    int total = e[0] + e[1] - m;
    if (total < 0) fail(ErrorKind::DegenerateConfiguration, "strict transform: order below multiplicity");
    out += Poly2::monomial(c, chart == Chart::First ? std::array<int, 2>{total, e[1]} : std::array<int, 2>{e[0], total});
  }
  return out;
}

}  // namespace

LocalSystem strict_transform(const LocalSystem& s, int m, const TowerStep& step) {
  LocalSystem out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = divide_chart(s[i], m, step.chart);
    if (step.chart == Chart::First && !step.coord.is_zero())
      out[i] = out[i].substitute<2>({Poly2::var(0), Poly2::var(1) + Poly2(step.coord)});
  }
  return out;
}

ExceptionalPoints exceptional_points(const LocalSystem& s, int m) {
  ExceptionalPoints out;
  QPoly g;
  bool vertical = true;
  for (const auto& gen : s) {
    Poly2 form = gen.homogeneous_part(m);
    std::vector<Rational> cs(m + 1);
    for (const auto& [e, c] : form.terms()) cs[e[1]] = c;
    if (!cs[m].is_zero()) vertical = false;
    g = gcd(g, QPoly(std::move(cs)));
  }
  if (g.is_zero()) fail(ErrorKind::DegenerateConfiguration, "no member of order m");
  if (g.degree() > 0) {
    auto rr = rational_roots(g);
    for (const auto& r : rr.roots) out.points.push_back({Chart::First, r.value});
    if (rr.cofactor.degree() > 0) {
      out.non_rational = true;
      out.factor = rr.cofactor;
    }
  }
  if (vertical) out.points.push_back({Chart::Second, Rational(0)});
  return out;
}

namespace {

struct Walk {
  LocalSystem sys;
  int m;
};

Walk walk_to(const std::array<HomPoly, 3>& f, const BubblePoint& q) {
  LocalSystem s = local_system(f, q.root());
  int m = local_multiplicity(s);
  for (const auto& step : q.tower()) {
    if (m == 0) return {s, 0};
    s = strict_transform(s, m, step);
    m = local_multiplicity(s);
  }
  return {s, m};
}

std::array<HomPoly, 3> components(const CremonaMap& f) { return {f[0], f[1], f[2]}; }

}  // namespace

BlowUp blow_up(const BubblePoint& q, const CremonaMap& f) {
  auto [s, m] = walk_to(components(f), q);
  if (m == 0) fail(ErrorKind::DegenerateConfiguration, q.str() + " is not a base point");
  BlowUp out;
  out.multiplicity = m;
  for (std::size_t i = 0; i < 3; ++i) {
    out.first_chart[i] = divide_chart(s[i], m, Chart::First);
    out.second_chart[i] = divide_chart(s[i], m, Chart::Second);
  }
  out.exceptional = exceptional_points(s, m);
  return out;
}

int multiplicity_at(const CremonaMap& f, const BubblePoint& q) { return walk_to(components(f), q).m; }

int multiplicity_at(const std::array<HomPoly, 3>& f, const BubblePoint& q) {
  HomPoly g = gcd(gcd(f[0], f[1]), f[2]);
  if (g.degree() > 0) fail(ErrorKind::NotSimplified, "components share the factor " + g.str({'X', 'Y', 'Z'}));
  return walk_to(f, q).m;
}

namespace {

QPoly in_y_at(const Poly2& p, const Rational& x0) {
  std::vector<Rational> cs(std::max(p.degree_in(1) + 1, 0));
  for (const auto& [e, c] : p.terms()) {
    Rational v = c;
    for (int k = 0; k < e[0]; ++k) v *= x0;
    cs[e[1]] += v;
  }
  return QPoly(std::move(cs));
}

Poly2 combo(const std::vector<Poly2>& ps, const std::array<int, 3>& w) {
  Poly2 out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += ps[i].scaled(Rational(w[i]));
  return out;
}

// Arithmetic in Q[x]/(c) for a square-free c; a zero divisor met during the
// gcd splits c and both parts are tried.
struct Split {
  QPoly factor;
};

QPoly mod(const QPoly& a, const QPoly& c) { return QPoly::divmod(a, c).second; }

QPoly inverse_mod(const QPoly& a, const QPoly& c) {
  QPoly r0 = c, r1 = a, t0, t1(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = QPoly::divmod(r0, r1);
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return mod(t1 * QPoly(r1.lc().inverse()), c);
}

using KPoly = std::vector<QPoly>;  // coefficients in Q[x]/(c), index = power of y

void reduce_trim(KPoly& p, const QPoly& c) {
  for (auto& a : p) a = mod(a, c);
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly gcd_mod(KPoly a, KPoly b, const QPoly& c) {
  reduce_trim(a, c);
  reduce_trim(b, c);
  while (!b.empty()) {
    QPoly g = gcd(b.back(), c);
    if (g.degree() > 0) throw Split{g};
    QPoly inv = inverse_mod(b.back(), c);
    while (a.size() >= b.size()) {
      QPoly q = mod(a.back() * inv, c);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = mod(a[j + shift] - q * b[j], c);
      reduce_trim(a, c);
    }
    std::swap(a, b);
  }
  return a;
}

// True if the polynomials have a common zero (x0, y0) with c(x0) = 0.
bool common_zero_over(const QPoly& c, const std::vector<RecPoly>& ps) {
  if (c.degree() <= 0) return false;
  try {
    KPoly g;
    for (const auto& p : ps) g = gcd_mod(g, p, c);
    return g.size() > 1;
  } catch (const Split& s) {
    return common_zero_over(s.factor, ps) || common_zero_over(QPoly::divmod(c, s.factor).first, ps);
  }
}

struct ProperPoints {
  std::vector<ProjPoint> points;
  bool non_rational = false;
  std::string factor;

  void flag(const std::string& where) {
    if (!non_rational) factor = where;
    non_rational = true;
  }
};

ProperPoints proper_base_points(const CremonaMap& f) {
  ProperPoints out;
  const int d = f.degree();
  // On the line Z = 0.
  QPoly g;
  bool has_p2 = true;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> cs(d + 1);
    for (const auto& [e, c] : f[i].terms())
      if (e[2] == 0) cs[e[1]] = c;
    if (!cs[d].is_zero()) has_p2 = false;
    g = gcd(g, QPoly(std::move(cs)));
  }
  if (g.degree() > 0) {
    auto rr = rational_roots(g);
    for (const auto& r : rr.roots) out.points.emplace_back(1, r.value, 0);
    if (rr.cofactor.degree() > 0) out.flag(rr.cofactor.str("t") + " = 0 with t = Y/X on Z = 0");
  }
  if (has_p2) out.points.push_back(ProjPoint::p2());

  // Affine part Z = 1.
  std::vector<Poly2> ps;
  for (std::size_t i = 0; i < 3; ++i)
    if (!f[i].is_zero()) ps.push_back(dehomogenize(f[i]));
  if (ps.size() < 2) fail(ErrorKind::NotHomaloidal, "a single nonzero component has a curve of base points");
  static const std::array<std::array<int, 3>, 8> weights = {{
      {1, 2, 5}, {2, -1, 3}, {1, -3, -2}, {3, 1, -1}, {1, 5, 2}, {-2, 1, 4}, {5, 3, 1}, {1, 1, 7},
  }};
  std::vector<Poly2> cands;
  for (const auto& w : weights) cands.push_back(combo(ps, w));
  QPoly R;
  int found = 0;
  for (std::size_t i = 1; i < cands.size() && found < 2; ++i) {
    if (gcd(cands[0], cands[i]).degree() > 0) continue;
    R = gcd(R, resultant_y(cands[0], cands[i]));
    ++found;
  }
  if (found == 0) fail(ErrorKind::NotSimplified, "components are not coprime in the affine chart");
  if (R.degree() > 0) {
    auto rx = rational_roots(R);
    if (rx.cofactor.degree() > 0) {
      // The resultant may carry spurious factors; keep only genuine ones.
      QPoly c = rx.cofactor;
      c = QPoly::divmod(c, gcd(c, c.derivative())).first;
      std::vector<RecPoly> rec;
      for (const auto& p : ps) rec.push_back(to_recursive(p));
      if (common_zero_over(c, rec)) out.flag(c.str("x") + " = 0 with x = X/Z");
    }
    for (const auto& x0 : rx.roots) {
      QPoly h;
      for (const auto& p : ps) h = gcd(h, in_y_at(p, x0.value));
      if (h.degree() <= 0) continue;
      auto ry = rational_roots(h);
      for (const auto& y0 : ry.roots) out.points.emplace_back(x0.value, y0.value, 1);
      if (ry.cofactor.degree() > 0)
        out.flag(ry.cofactor.str("y") + " = 0 with y = Y/Z at X/Z = " + x0.value.str());
    }
  }
  return out;
}

}  // namespace

BaseLocus base_locus(const CremonaMap& f) {
  BaseLocus out;
  if (f.degree() == 1) return out;
  const int d = f.degree();
  auto proper = proper_base_points(f);
  out.non_rational = proper.non_rational;
  out.non_rational_factor = proper.factor;
  int budget = d * d;
  std::function<void(const BubblePoint&, const LocalSystem&, int)> explore = [&](const BubblePoint& q,
                                                                                const LocalSystem& s, int m) {
    budget -= m * m;
    if (budget < 0) fail(ErrorKind::NotHomaloidal, "multiplicities exceed d^2 at " + q.str());
    out.mults[q] = m;
    auto ex = exceptional_points(s, m);
    if (ex.non_rational && !out.non_rational) {
      out.non_rational = true;
      out.non_rational_factor = ex.factor.str("t") + " = 0 on the exceptional curve over " + q.str();
    }
    for (const auto& step : ex.points) {
      LocalSystem t = strict_transform(s, m, step);
      explore(q.child(step), t, local_multiplicity(t));
    }
  };
  for (const auto& p : proper.points) {
    LocalSystem s = local_system(components(f), p);
    int m = local_multiplicity(s);
    if (m == 0) fail(ErrorKind::DegenerateConfiguration, "candidate " + p.str() + " is not a base point");
    explore(BubblePoint(p), s, m);
  }
  return out;
}

MultiplicityMap base_points(const CremonaMap& f) {
  BaseLocus locus = base_locus(f);
  LinearSystemClass c{f.degree(), locus.mults};
  if (c.is_homaloidal()) return std::move(locus.mults);
  std::string sums = "sum m = " + std::to_string(c.sum_m()) + ", sum m^2 = " + std::to_string(c.sum_m2()) +
                     " for degree " + std::to_string(c.degree);
  if (locus.non_rational)
    fail(ErrorKind::NonRationalBasePoint, "irreducible factor " + locus.non_rational_factor + " (" + sums + ")");
  fail(ErrorKind::NotHomaloidal, sums);
}

LinearSystemClass system_class(const CremonaMap& h) { return {h.degree(), base_points(h)}; }

LinearSystemClass class_of(const CremonaMap& f, const CremonaMap& f_inverse) {
  if (f_inverse.degree() != f.degree())
    fail(ErrorKind::DegenerateConfiguration, "inverse realization has a different degree");
  return {f.degree(), base_points(f_inverse)};
}

int quadratic_pushforward_degree(int d, int m0, int m1, int m2) { return 2 * d - m0 - m1 - m2; }

LinearSystemClass pushforward_quadratic(const CremonaMap& h, const CremonaMap& theta,
                                        const CremonaMap& theta_inverse) {
  if (theta.degree() != 2 || theta_inverse.degree() != 2)
    fail(ErrorKind::DegenerateConfiguration, "pushforward_quadratic needs a quadratic map");
  const int d = h.degree();
  auto qs = base_points(theta);
  std::vector<int> m;
  for (const auto& [q, mq] : qs) m.push_back(multiplicity_at(h, q));
  LinearSystemClass out = system_class(h * theta_inverse);
  const int predicted = quadratic_pushforward_degree(d, m[0], m[1], m[2]);
  if (out.degree != predicted)
    fail(ErrorKind::ProofGapDetected, "pushforward degree " + std::to_string(out.degree) + " but formula gives " +
                                          std::to_string(predicted));
  std::vector<int> expected = {d - m[1] - m[2], d - m[0] - m[2], d - m[0] - m[1]};
  std::vector<int> got;
  for (const auto& [q, mq] : base_points(theta_inverse)) got.push_back(out.multiplicity(q));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected) fail(ErrorKind::ProofGapDetected, "pushforward multiplicities disagree with the formula");
  return out;
}

int jonq_degree_formula(int d, int D, int m0, int rest_sum) { return D * d - (D - 1) * m0 - rest_sum; }

ProjPoint tangent_point(const BubblePoint& q) {
  if (q.level() != 1) fail(ErrorKind::DegenerateConfiguration, "tangent_point needs a first-neighbourhood point");
  const auto& r = q.root();
  const auto& s = q.tower()[0];
  Rational du = s.chart == Chart::First ? Rational(1) : Rational(0);
  Rational dv = s.chart == Chart::First ? s.coord : Rational(1);
  if (!r[0].is_zero()) return {Rational(0), du, dv};
  if (!r[1].is_zero()) return {du, 0, dv};
  return {du, dv, 0};
}

BubblePoint direction_towards(const ProjPoint& root, const ProjPoint& w) {
  if (w == root) fail(ErrorKind::DegenerateConfiguration, "direction needs a second point");
  const auto& r = root;
  std::array<Rational, 3> v = w.coords();
  std::size_t k = !r[0].is_zero() ? 0 : (!r[1].is_zero() ? 1 : 2);
  Rational lam = v[k] / r[k];
  for (std::size_t i = 0; i < 3; ++i) v[i] -= lam * r[i];
  Rational du, dv;
  if (k == 0) du = v[1], dv = v[2];
  else if (k == 1) du = v[0], dv = v[2];
  else du = v[0], dv = v[1];
  TowerStep step = du.is_zero() ? TowerStep{Chart::Second, Rational(0)} : TowerStep{Chart::First, dv / du};
  return BubblePoint(root, {step});
}

BubblePoint transport(const ProjLinearMap& a, const BubblePoint& q) {
  if (q.is_proper()) return BubblePoint(a(q.root()));
  if (q.level() > 1) fail(ErrorKind::DegenerateConfiguration, "transport supports points of level at most 1");
  return direction_towards(a(q.root()), a(tangent_point(q)));
}

nlohmann::json to_json(const MultiplicityMap& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [q, v] : m) j[q.str()] = v;
  return j;
}

MultiplicityMap multiplicity_map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "multiplicity map must be a JSON object");
  MultiplicityMap out;
  for (const auto& [k, v] : j.items()) out[BubblePoint::parse(k)] = v.get<int>();
  return out;
}

nlohmann::json to_json(const LinearSystemClass& c) { return {{"degree", c.degree}, {"mults", to_json(c.mults)}}; }

}  // namespace cremona
