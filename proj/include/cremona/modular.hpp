#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cremona/upoly.hpp"

namespace cremona::modp {

/// Dense polynomial over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

/// Primes just below 2^61, in decreasing order; index i is the i-th one.
std::uint64_t prime(std::size_t i);

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::optional<std::uint64_t> reduce(const Rational& r, std::uint64_t p);
/// Empty when some denominator vanishes mod p.
std::optional<Poly> reduce(const QPoly& f, std::uint64_t p);
std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t p);

/// Smallest |a/b| with a = b*u mod m and |a|,|b| <= sqrt(m/2).
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m);

}  // namespace cremona::modp
