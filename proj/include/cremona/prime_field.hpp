#pragma once

#include <cstdint>
#include <string>

#include "cremona/error.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Element of F_p for a runtime-selected prime p. The modulus is a property
/// of the value so that independent fuzz workers can use different primes.
/// Values built from plain integers (the Field concept's F(0), F(1)) carry
/// modulus 0 and adopt the modulus of the other operand on first use.
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(long v) : v_(v), p_(0) {}  // NOLINT(google-explicit-constructor)
  PrimeField(long v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  PrimeField inverse() const;

  friend PrimeField operator+(const PrimeField& a, const PrimeField& b);
  friend PrimeField operator-(const PrimeField& a, const PrimeField& b);
  friend PrimeField operator*(const PrimeField& a, const PrimeField& b);
  friend PrimeField operator/(const PrimeField& a, const PrimeField& b) { return a * b.inverse(); }
  PrimeField operator-() const { return PrimeField(0, p_) - *this; }
  friend bool operator==(const PrimeField& a, const PrimeField& b);

  std::string str() const { return std::to_string(v_); }

  /// Reduction of a rational whose denominator is a unit mod p.
  static PrimeField from_rational(const Rational& r, std::uint64_t p);

 private:
  static std::uint64_t common(const PrimeField& a, const PrimeField& b);
  static std::int64_t reduce(std::int64_t v, std::uint64_t p);

  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

static_assert(Field<PrimeField>);

bool is_prime(std::uint64_t n);

}  // namespace cremona
