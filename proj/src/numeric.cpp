#include "kakeya/numeric.hpp"

#include <numeric>

#include "kakeya/error.hpp"

namespace kakeya {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonOddPrime: return "NonOddPrime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::IdenticalSpheres: return "IdenticalSpheres";
    case ErrorCode::NotANonsquare: return "NotANonsquare";
    case ErrorCode::NotASquareField: return "NotASquareField";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t isqrt_floor(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 32;
  // invariant: lo^2 <= x < hi^2
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::uint64_t isqrt_ceil(std::uint64_t x) {
  std::uint64_t s = isqrt_floor(x);
  return s * s == x ? s : s + 1;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  if (q < 2) return false;
  for (unsigned e = 63; e >= 1; --e) {
    std::uint64_t lo = 2, hi = q;
    while (lo <= hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      unsigned __int128 acc = 1;
      bool over = false;
      for (unsigned i = 0; i < e; ++i) {
        acc *= mid;
        if (acc > q) {
          over = true;
          break;
        }
      }
      if (!over && acc == q) {
        if (is_prime(mid)) {
          p = mid;
          k = e;
          return true;
        }
        break;
      }
      if (over || acc > q)
        hi = mid - 1;
      else
        lo = mid + 1;
    }
  }
  return false;
}

namespace {
std::int64_t checked_mul_signed(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in rational arithmetic");
  return r;
}
std::int64_t checked_add_signed(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in rational arithmetic");
  return r;
}
}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t f = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --f;
  return f;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t f = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++f;
  return f;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t den = checked_mul_signed(a.den_ / g, b.den_);
  std::int64_t num = checked_add_signed(checked_mul_signed(a.num_, b.den_ / g),
                                        checked_mul_signed(b.num_, a.den_ / g));
  return Rational(num, den);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  auto lhs = static_cast<__int128>(a.num_) * b.den_;
  auto rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace kakeya
