#include "cremona/prime_field.hpp"

namespace cremona {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % q == 0) return n == q;
  // Deterministic Miller-Rabin for 64-bit n.
  auto mulm = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = 1, b = a, e = d;
    while (e) {
      if (e & 1) x = mulm(x, b);
      b = mulm(b, b);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulm(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t PrimeField::reduce(std::int64_t v, std::uint64_t p) {
  if (p == 0) return v;
  auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

PrimeField::PrimeField(long v, std::uint64_t p) : v_(reduce(v, p)), p_(p) {}

std::uint64_t PrimeField::common(const PrimeField& a, const PrimeField& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    fail(ErrorKind::DegenerateConfiguration, "mixing prime fields of different characteristic");
  return a.p_ != 0 ? a.p_ : b.p_;
}

PrimeField operator+(const PrimeField& a, const PrimeField& b) {
  auto p = PrimeField::common(a, b);
  return PrimeField(PrimeField::reduce(a.v_, p) + PrimeField::reduce(b.v_, p), p);
}

PrimeField operator-(const PrimeField& a, const PrimeField& b) {
  auto p = PrimeField::common(a, b);
  return PrimeField(PrimeField::reduce(a.v_, p) - PrimeField::reduce(b.v_, p), p);
}

PrimeField operator*(const PrimeField& a, const PrimeField& b) {
  auto p = PrimeField::common(a, b);
  if (p == 0) return PrimeField(a.v_ * b.v_);
  __int128 prod = static_cast<__int128>(PrimeField::reduce(a.v_, p)) * PrimeField::reduce(b.v_, p);
  return PrimeField(static_cast<long>(prod % static_cast<__int128>(p)), p);
}

bool operator==(const PrimeField& a, const PrimeField& b) {
  auto p = PrimeField::common(a, b);
  return PrimeField::reduce(a.v_, p) == PrimeField::reduce(b.v_, p);
}

PrimeField PrimeField::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    fail(ErrorKind::DivisionByZero, "inverse of an integer without a modulus");
  }
  if (v_ == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  // Extended Euclid on (v, p).
  std::int64_t a = v_, m = static_cast<std::int64_t>(p_), x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return PrimeField(x0, p_);
}

PrimeField PrimeField::from_rational(const Rational& r, std::uint64_t p) {
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class n = r.num() % pm, d = r.den() % pm;
  if (d == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  return PrimeField(n.get_si(), p) / PrimeField(d.get_si(), p);
}

}  // namespace cremona
