#include "cremona/roots.hpp"

#include <algorithm>
#include <cstdint>

#include "cremona/prime_field.hpp"

namespace cremona {

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  QPoly f = p.monic();
  QPoly d = f.derivative();
  QPoly a = gcd(f, d);
  QPoly b = f / a;
  QPoly c = d / a - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, c);
    out.push_back(g);
    b = b / g;
    c = c / g - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

using IntPoly = std::vector<mpz_class>;

mpz_class eval(const IntPoly& q, const mpz_class& y) {
  mpz_class acc(0);
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * y + *it;
  return acc;
}

mpz_class eval_deriv(const IntPoly& q, const mpz_class& y) {
  mpz_class acc(0);
  for (std::size_t i = q.size(); i-- > 1;) acc = acc * y + q[i] * static_cast<unsigned long>(i);
  return acc;
}

UPoly<PrimeField> reduce_mod(const IntPoly& q, std::uint64_t p) {
  std::vector<PrimeField> cs;
  cs.reserve(q.size());
  mpz_class pm(static_cast<unsigned long>(p));
  for (const auto& c : q) {
    mpz_class r = c % pm;
    cs.emplace_back(r.get_si(), p);
  }
  return UPoly<PrimeField>(std::move(cs));
}

// Roots of a square-free polynomial with integer coefficients.
std::vector<Rational> squarefree_rational_roots(const QPoly& s) {
  std::vector<Rational> found;
  IntPoly c = primitive_integer_coeffs(s);
  const std::size_t n = c.size() - 1;
  if (n == 0) return found;
  const mpz_class lead = c[n];
  // q(y) = lead^{n-1} s(y / lead) is monic with integer coefficients.
  IntPoly q(n + 1);
  mpz_class pw(1);
  for (std::size_t i = n; i-- > 0;) {
    q[i] = c[i] * pw;
    pw *= lead;
  }
  q[n] = 1;
  mpz_class bound(0);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class a = abs(q[i]);
    if (a > bound) bound = a;
  }
  bound += 1;

  std::uint64_t p = 1009;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    auto qp = reduce_mod(q, p);
    if (qp.degree() != static_cast<int>(n)) continue;
    if (gcd(qp, qp.derivative()).degree() == 0) break;
  }
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class target = 2 * bound + 1;
  auto qp = reduce_mod(q, p);
  for (std::uint64_t r = 0; r < p; ++r) {
    if (!qp(PrimeField(static_cast<long>(r), p)).is_zero()) continue;
    mpz_class y(static_cast<unsigned long>(r)), mod = pm;
    while (mod <= target) {
      mod *= mod;
      mpz_class inv, dq = eval_deriv(q, y) % mod;
      if (dq < 0) dq += mod;
      if (mpz_invert(inv.get_mpz_t(), dq.get_mpz_t(), mod.get_mpz_t()) == 0) break;
      y = (y - eval(q, y) * inv) % mod;
      if (y < 0) y += mod;
    }
    if (y > mod / 2) y -= mod;
    if (eval(q, y) == 0) found.emplace_back(y, lead);
  }
  return found;
}

}  // namespace

RationalRoots rational_roots(const QPoly& p) {
  if (p.is_zero()) fail(ErrorKind::DivisionByZero, "rational_roots of the zero polynomial");
  RationalRoots out;
  auto parts = squarefree_decomposition(p);
  QPoly cof = p;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& r : squarefree_rational_roots(parts[i])) {
      out.roots.push_back({r, static_cast<int>(i + 1)});
      QPoly lin{-r, Rational(1)};
      cof = cof / lin.pow(static_cast<unsigned>(i + 1));
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  out.cofactor = cof.monic();
  return out;
}

}  // namespace cremona
