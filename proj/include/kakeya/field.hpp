#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace kakeya {

/// An element of F_q, identified by its rank in [0, q). The base-p digits
/// of the rank are the residue polynomial's coefficients, constant term
/// first, so rank 0 is zero, rank 1 is one and rank p is the generator t.
struct Elem {
  std::uint64_t rank = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t r) : rank(r) {}

  constexpr bool is_zero() const noexcept { return rank == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Quadratic character value: +1 nonzero square, -1 nonsquare, 0 at zero.
enum class QuadChar : int { Nonsquare = -1, Zero = 0, Square = 1 };

/// F_q for q = p^k, p an odd prime. Cheap to copy; the arithmetic state is
/// shared and immutable once built.
///
/// For k > 1 the modulus is the smallest monic irreducible of degree k,
/// where candidates are ordered lexicographically by their coefficient
/// vector (c_0, c_1, ..., c_{k-1}) with c_0 compared first.
class Field {
 public:
  /// Throws NonOddPrime when p is 2 or composite, Overflow when p^k does
  /// not fit in 64 bits, InvalidArgument when k == 0.
  static Field make(std::uint64_t p, unsigned k = 1);

  std::uint64_t p() const noexcept;
  unsigned k() const noexcept;
  std::uint64_t q() const noexcept;

  /// Monic modulus coefficients, constant term first (size k + 1). Empty
  /// for prime fields.
  std::span<const std::uint64_t> modulus() const noexcept;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Integer embedded through the prime subfield (v mod p).
  Elem from_int(std::int64_t v) const noexcept;
  /// Element of the given rank; throws InvalidArgument if rank >= q.
  Elem element(std::uint64_t rank) const;
  /// The class of t in F_p[t]/(modulus). Defined only for k > 1.
  Elem generator() const;

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  Elem square(Elem x) const noexcept { return mul(x, x); }
  /// Throws DivisionByZero on zero.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  QuadChar quadratic_character(Elem x) const noexcept;
  bool is_square(Elem x) const noexcept {
    return quadratic_character(x) != QuadChar::Nonsquare;
  }
  /// The nonzero nonsquare of smallest rank.
  Elem smallest_nonsquare() const noexcept;

  /// Base-p digits of x, constant term first (size k).
  std::vector<std::uint64_t> digits(Elem x) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.k() == b.k());
  }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Polynomial helpers over F_p (coefficients constant term first). Exposed
/// for the modulus search and its tests.
namespace poly {
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);
/// Smallest monic irreducible of degree k in the order documented on Field.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k);
}  // namespace poly

}  // namespace kakeya
