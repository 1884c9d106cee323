#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace kakeya {

/// Exact integer arithmetic helpers. Every routine throws Error(Overflow)
/// instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t isqrt_floor(std::uint64_t x);
std::uint64_t isqrt_ceil(std::uint64_t x);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Returns true and fills (p, k) when q = p^k for a prime p.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Reduced fraction with positive denominator. Used for bounds and main
/// terms, which are half-integers at worst.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;

  /// "7" or "625/2".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace kakeya
