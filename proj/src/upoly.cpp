#include <cctype>
#include <string>

#include "cremona/upoly.hpp"

#include "cremona/modular.hpp"

namespace cremona {

QPoly parse_qpoly(std::string_view text, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  QPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = Rational(-1);
      ++i;
    } else if (i != 0) {
      fail(ErrorKind::ParseError, "expected + or - in '" + s + "'");
    }
    Rational coef(1);
    bool have_coef = false;
    if (i < s.size() && s[i] == '(') {
      auto close = s.find(')', i);
      if (close == std::string::npos) fail(ErrorKind::ParseError, "unbalanced '(' in '" + s + "'");
      coef = Rational::parse(s.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coef = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      coef = Rational::parse(s.substr(i, j - i));
      i = j;
      have_coef = true;
    }
    std::size_t exp = 0;
    if (have_coef && i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == var) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail(ErrorKind::ParseError, "missing exponent in '" + s + "'");
        exp = std::stoul(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coef) {
      fail(ErrorKind::ParseError, "unexpected token in '" + s + "'");
    }
    out += QPoly::monomial(sign * coef, exp);
  }
  return out;
}

std::vector<mpz_class> primitive_integer_coeffs(const QPoly& p) {
  mpz_class l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class g(0);
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly(Rational(1));
  int best = -1;
  mpz_class modulus;
  std::vector<mpz_class> residues;
  for (std::size_t i = 0;; ++i) {
    std::uint64_t p = modp::prime(i);
    auto ap = modp::reduce(a, p), bp = modp::reduce(b, p);
    if (!ap || !bp) continue;
    if (static_cast<int>(ap->size()) != a.degree() + 1 || static_cast<int>(bp->size()) != b.degree() + 1) continue;
    modp::Poly g = modp::gcd(*ap, *bp, p);
    int d = static_cast<int>(g.size()) - 1;
    if (d == 0) return QPoly(Rational(1));
    if (best >= 0 && d > best) continue;
    mpz_class pz(static_cast<unsigned long>(p));
    if (best < 0 || d < best) {
      best = d;
      modulus = pz;
      residues.assign(g.begin(), g.end());
      for (std::size_t k = 0; k < g.size(); ++k) residues[k] = static_cast<unsigned long>(g[k]);
    } else {
      // CRT: x = r mod M, x = g mod p.
      mpz_class minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t k = 0; k < g.size(); ++k) {
        mpz_class diff = mpz_class(static_cast<unsigned long>(g[k])) - residues[k];
        mpz_class t = diff * minv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        residues[k] += modulus * t;
      }
      modulus *= pz;
    }
    std::vector<Rational> cs;
    bool ok = true;
    for (const auto& r : residues) {
      auto q = modp::rational_reconstruct(r, modulus);
      if (!q) {
        ok = false;
        break;
      }
      cs.push_back(*q);
    }
    if (!ok) continue;
    QPoly h(std::move(cs));
    if (QPoly::divmod(a, h).second.is_zero() && QPoly::divmod(b, h).second.is_zero()) return h;
  }
}

}  // namespace cremona
