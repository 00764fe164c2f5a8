#include "cremona/modular.hpp"

#include <mutex>

#include "cremona/prime_field.hpp"

namespace cremona::modp {

std::uint64_t prime(std::size_t i) {
  static std::vector<std::uint64_t> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::uint64_t n = cache.empty() ? (std::uint64_t(1) << 61) - 1 : cache.back() - 2;
  while (cache.size() <= i) {
    while (!is_prime(n)) n -= 2;
    cache.push_back(n);
    n -= 2;
  }
  return cache[i];
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

namespace {

std::uint64_t mod_z(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

std::optional<std::uint64_t> reduce(const Rational& r, std::uint64_t p) {
  if (r.is_zero()) return 0;
  std::uint64_t d = mod_z(r.den(), p);
  if (d == 0) return std::nullopt;
  return mul(mod_z(r.num(), p), inv(d, p), p);
}

std::optional<Poly> reduce(const QPoly& f, std::uint64_t p) {
  Poly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto v = reduce(c, p);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  trim(out);
  return out;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mul(acc, x, p) + *it) % p;
  return acc;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t li = inv(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t q = mul(a.back(), li, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = (a[j + shift] + p - mul(q, b[j], p)) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t li = inv(a.back(), p);
    for (auto& c : a) c = mul(c, li, p);
  }
  return a;
}

std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(mpq_class(r1, t1));
}

}  // namespace cremona::modp
