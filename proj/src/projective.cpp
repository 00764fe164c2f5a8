#include "cremona/projective.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cremona {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n') out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ProjPoint::ProjPoint(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
  std::size_t lead = 0;
  while (lead < 3 && c_[lead].is_zero()) ++lead;
  if (lead == 3) fail(ErrorKind::DegenerateConfiguration, "(0:0:0) is not a projective point");
  if (!c_[lead].is_one()) {
    Rational inv = c_[lead].inverse();
    for (auto& v : c_) v *= inv;
  }
}

ProjPoint ProjPoint::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(ErrorKind::ParseError, "point must look like (X:Y:Z), got '" + s + "'");
  auto parts = split(s.substr(1, s.size() - 2), ':');
  if (parts.size() != 3) fail(ErrorKind::ParseError, "point needs three coordinates: '" + s + "'");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

std::string ProjPoint::str() const {
  return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
}

Rational det3(const std::array<Rational, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3({p[0], p[1], p[2], q[0], q[1], q[2], r[0], r[1], r[2]}).is_zero();
}

ProjLinearMap::ProjLinearMap(const std::array<Rational, 9>& rows) : m_(rows) {
  if (det3(m_).is_zero()) fail(ErrorKind::DegenerateConfiguration, "singular 3x3 matrix");
  std::size_t lead = 0;
  while (m_[lead].is_zero()) ++lead;
  if (!m_[lead].is_one()) {
    Rational inv = m_[lead].inverse();
    for (auto& v : m_) v *= inv;
  }
}

ProjLinearMap ProjLinearMap::identity() { return ProjLinearMap({1, 0, 0, 0, 1, 0, 0, 0, 1}); }
ProjLinearMap ProjLinearMap::tau() { return ProjLinearMap({0, 1, 0, 1, 0, 0, 0, 0, 1}); }

ProjPoint ProjLinearMap::operator()(const ProjPoint& p) const {
  std::array<Rational, 3> out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = at(r, 0) * p[0] + at(r, 1) * p[1] + at(r, 2) * p[2];
  return ProjPoint(out);
}

ProjLinearMap operator*(const ProjLinearMap& g, const ProjLinearMap& f) {
  std::array<Rational, 9> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      out[3 * r + c] = g.at(r, 0) * f.at(0, c) + g.at(r, 1) * f.at(1, c) + g.at(r, 2) * f.at(2, c);
  return ProjLinearMap(out);
}

ProjLinearMap ProjLinearMap::inverse() const {
  const auto& m = m_;
  // adjugate; the scalar 1/det is irrelevant projectively
  std::array<Rational, 9> adj = {
      m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
      m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
      m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
  return ProjLinearMap(adj);
}

std::string ProjLinearMap::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 9; ++i) os << (i ? ", " : "") << m_[i].str();
  os << "]";
  return os.str();
}

ProjLinearMap ProjLinearMap::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(ErrorKind::ParseError, "matrix must look like [a, b, ..., i]");
  auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 9) fail(ErrorKind::ParseError, "matrix needs nine entries");
  std::array<Rational, 9> m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = Rational::parse(parts[i]);
  return ProjLinearMap(m);
}

namespace {

// Matrix whose columns are the frame points scaled so that p0+p1+p2 ~ p3.
ProjLinearMap frame_matrix(std::span<const ProjPoint, 4> f) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (std::size_t c = b + 1; c < 4; ++c)
        if (collinear(f[a], f[b], f[c]))
          fail(ErrorKind::DegenerateConfiguration,
               "frame points " + f[a].str() + ", " + f[b].str() + ", " + f[c].str() + " are collinear");
  std::array<Rational, 9> cols = {f[0][0], f[1][0], f[2][0], f[0][1], f[1][1], f[2][1], f[0][2], f[1][2], f[2][2]};
  // Solve cols * lambda = f[3] by Cramer's rule.
  Rational d = det3(cols);
  std::array<Rational, 3> lambda;
  for (std::size_t k = 0; k < 3; ++k) {
    auto m = cols;
    for (std::size_t r = 0; r < 3; ++r) m[3 * r + k] = f[3][r];
    lambda[k] = det3(m) / d;
  }
  std::array<Rational, 9> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) out[3 * r + k] = cols[3 * r + k] * lambda[k];
  return ProjLinearMap(out);
}

}  // namespace

ProjLinearMap linear_map_through(std::span<const ProjPoint, 4> src, std::span<const ProjPoint, 4> dst) {
  return frame_matrix(dst) * frame_matrix(src).inverse();
}

const std::vector<ProjPoint>& completion_candidates() {
  static const std::vector<ProjPoint> pts = [] {
    std::vector<ProjPoint> v = {ProjPoint::p1(), ProjPoint::p2(), ProjPoint::p3(), {1, 1, 1}};
    for (int r = 1; r <= 6; ++r)
      for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
          if (std::max(std::abs(a), std::abs(b)) == r) v.emplace_back(1, a, b);
    return v;
  }();
  return pts;
}

ProjPoint complete_frame(std::span<const ProjPoint> pts) {
  for (const auto& c : completion_candidates()) {
    bool ok = true;
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      if (pts[a] == c) ok = false;
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
        if (collinear(pts[a], pts[b], c)) ok = false;
    }
    if (ok) return c;
  }
  fail(ErrorKind::DegenerateConfiguration, "no completion point found");
}

ProjLinearMap swap_map(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) fail(ErrorKind::DegenerateConfiguration, "swap_map needs distinct points");
  std::vector<ProjPoint> pts = {p, q};
  pts.push_back(complete_frame(pts));
  pts.push_back(complete_frame(pts));
  std::array<ProjPoint, 4> std_frame = {ProjPoint::p1(), ProjPoint::p2(), ProjPoint::p3(), {1, 1, 1}};
  std::array<ProjPoint, 4> src = {pts[0], pts[1], pts[2], pts[3]};
  ProjLinearMap frame = linear_map_through(std_frame, src);
  return frame * ProjLinearMap::tau() * frame.inverse();
}

ProjLinearMap stabilizer_map_sending(const ProjPoint& from, const ProjPoint& to) {
  if (from == ProjPoint::p1() || to == ProjPoint::p1())
    fail(ErrorKind::DegenerateConfiguration, "A n J cannot move p1");
  auto basis = [](const Rational& a, const Rational& b) {
    // columns (a,b) and a complementary unit vector
    return a.is_zero() ? std::array<Rational, 4>{a, 1, b, 0} : std::array<Rational, 4>{a, 0, b, 1};
  };
  auto f = basis(from[1], from[2]);
  auto t = basis(to[1], to[2]);
  Rational fd = f[0] * f[3] - f[1] * f[2];
  std::array<Rational, 4> finv = {f[3] / fd, -f[1] / fd, -f[2] / fd, f[0] / fd};
  std::array<Rational, 4> b = {t[0] * finv[0] + t[1] * finv[2], t[0] * finv[1] + t[1] * finv[3],
                               t[2] * finv[0] + t[3] * finv[2], t[2] * finv[1] + t[3] * finv[3]};
  Rational shift_y = 0, shift_z = 0;
  if (!from[1].is_zero())
    shift_y = (to[0] - from[0]) / from[1];
  else
    shift_z = (to[0] - from[0]) / from[2];
  return ProjLinearMap({1, shift_y, shift_z, 0, b[0], b[1], 0, b[2], b[3]});
}

}  // namespace cremona
