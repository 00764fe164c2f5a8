#include "cremona/moebius.hpp"

#include <algorithm>

namespace cremona {

Moebius::Moebius(Rational a, Rational b, Rational c, Rational d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) fail(ErrorKind::DegenerateConfiguration, "singular 2x2 matrix");
  std::size_t lead = 0;
  while (m_[lead].is_zero()) ++lead;
  if (!m_[lead].is_one()) {
    Rational inv = m_[lead].inverse();
    for (auto& v : m_) v *= inv;
  }
}

Moebius operator*(const Moebius& g, const Moebius& f) {
  const auto& x = g.m_;
  const auto& y = f.m_;
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

std::string Moebius::str() const {
  return "[" + m_[0].str() + ", " + m_[1].str() + "; " + m_[2].str() + ", " + m_[3].str() + "]";
}

FiberMoebius::FiberMoebius(QPoly alpha, QPoly beta, QPoly gamma, QPoly delta)
    : m_{std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)} {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero())
    fail(ErrorKind::DegenerateConfiguration, "singular matrix over Q(x)");
  QPoly g;
  for (const auto& e : m_) g = gcd(g, e);
  std::size_t lead = 0;
  while (m_[lead].is_zero()) ++lead;
  Rational scale = (m_[lead] / g).lc().inverse();
  for (auto& e : m_) e = (e / g).scaled(scale);
}

FiberMoebius FiberMoebius::from_rational(const RationalFunction& alpha, const RationalFunction& beta,
                                         const RationalFunction& gamma, const RationalFunction& delta) {
  // Multiply through by the product of the denominators; scaling is free.
  QPoly l = alpha.den();
  for (const auto* e : {&beta, &gamma, &delta}) l = l / gcd(l, e->den()) * e->den();
  auto clear = [&](const RationalFunction& r) { return r.num() * (l / r.den()); };
  return {clear(alpha), clear(beta), clear(gamma), clear(delta)};
}

int FiberMoebius::max_entry_degree() const {
  int d = 0;
  for (const auto& e : m_) d = std::max(d, e.degree());
  return d;
}

FiberMoebius operator*(const FiberMoebius& g, const FiberMoebius& f) {
  const auto& x = g.m_;
  const auto& y = f.m_;
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

FiberMoebius FiberMoebius::substitute(const Moebius& base) const {
  // e(x) of degree <= k becomes (cx+d)^k e((ax+b)/(cx+d)).
  const int k = max_entry_degree();
  QPoly num{base.b(), base.a()}, den{base.d(), base.c()};
  std::vector<QPoly> num_pows(k + 1), den_pows(k + 1);
  num_pows[0] = den_pows[0] = QPoly(1);
  for (int i = 1; i <= k; ++i) {
    num_pows[i] = num_pows[i - 1] * num;
    den_pows[i] = den_pows[i - 1] * den;
  }
  std::array<QPoly, 4> out;
  for (std::size_t idx = 0; idx < 4; ++idx) {
    const auto& cs = m_[idx].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
      out[idx] += (num_pows[i] * den_pows[k - i]).scaled(cs[i]);
  }
  return {out[0], out[1], out[2], out[3]};
}

std::string FiberMoebius::str() const {
  return "[" + m_[0].str() + ", " + m_[1].str() + "; " + m_[2].str() + ", " + m_[3].str() + "]";
}

}  // namespace cremona
