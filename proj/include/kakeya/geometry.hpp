#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kakeya/field.hpp"

namespace kakeya {

/// Dense point sets are capped at q^n <= 2^40 points.
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 40;

/// A point of F_q^n.
struct VectorFq {
  std::vector<Elem> coords;

  VectorFq() = default;
  explicit VectorFq(std::vector<Elem> c) : coords(std::move(c)) {}
  static VectorFq zeros(std::size_t n) { return VectorFq(std::vector<Elem>(n)); }

  std::size_t dim() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;
  Elem& operator[](std::size_t i) { return coords[i]; }
  Elem operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const VectorFq&, const VectorFq&) = default;
};

/// F_q^n with the rank map rank(x) = sum_i rank(x_i) * q^i.
class Space {
 public:
  /// Throws BadDimension for n == 0 and Overflow when q^n > kMaxPoints.
  Space(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(const VectorFq& x) const noexcept;
  VectorFq unrank(std::uint64_t r) const;
  /// Odometer step in rank order; returns false after the last point.
  bool next(VectorFq& x) const noexcept;

  VectorFq add(const VectorFq& x, const VectorFq& y) const;
  VectorFq sub(const VectorFq& x, const VectorFq& y) const;
  VectorFq scale(Elem c, const VectorFq& x) const;
  Elem dot(const VectorFq& x, const VectorFq& y) const;
  /// ||x|| = x_1^2 + ... + x_n^2.
  Elem norm(const VectorFq& x) const;

  friend bool operator==(const Space& a, const Space& b) noexcept {
    return a.field_ == b.field_ && a.n_ == b.n_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t size_;
};

/// Membership bitmap over the ranks of a Space.
class PointSet {
 public:
  explicit PointSet(Space space);

  /// The whole space.
  static PointSet full(Space space);
  /// Throws InvalidArgument for ranks outside the space.
  static PointSet from_ranks(Space space, std::span<const std::uint64_t> ranks);

  const Space& space() const noexcept { return space_; }

  void insert(std::uint64_t rank) noexcept {
    bits_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
  }
  void insert(const VectorFq& x) noexcept { insert(space_.rank(x)); }
  bool contains(std::uint64_t rank) const noexcept {
    return (bits_[rank >> 6] >> (rank & 63)) & 1;
  }
  bool contains(const VectorFq& x) const noexcept {
    return contains(space_.rank(x));
  }

  std::uint64_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  /// |this ∩ other| without materialising the intersection.
  std::uint64_t intersection_size(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;

  /// Ascending ranks.
  std::vector<std::uint64_t> ranks() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.bits_ == b.bits_;
  }

 private:
  void require_same_space(const PointSet& other) const;

  Space space_;
  std::vector<std::uint64_t> bits_;
};

/// a_1 x_1^2 + ... + a_n x_n^2 = rhs with every a_i nonzero.
struct DiagonalEq {
  std::vector<Elem> coeffs;
  Elem rhs;
};

/// Full enumeration of F_q^n. Throws ZeroCoefficient, Overflow.
std::uint64_t diagonal_count_bruteforce(const Field& field,
                                        const DiagonalEq& eq);

/// Number of solutions for every right-hand side at once, indexed by rank,
/// from one full enumeration of F_q^n.
std::vector<std::uint64_t> diagonal_value_counts(const Field& field,
                                                 std::span<const Elem> coeffs);

/// Exact solution count from the character-sum formulas:
///   n even: q^{n-1} + v(b) q^{n/2-1} chi((-1)^{n/2} D)
///   n odd:  q^{n-1} + q^{(n-1)/2} chi((-1)^{(n-1)/2} b D)
/// where D = a_1 ... a_n, v(0) = q - 1 and v(b) = -1 otherwise.
/// Throws ZeroCoefficient, BadDimension, Overflow.
std::uint64_t diagonal_count_closed(const Field& field, const DiagonalEq& eq);

/// Expected |N - q^{n-1}| for a diagonal equation in n variables.
std::uint64_t diagonal_deviation(std::uint64_t q, unsigned n, bool rhs_zero);

/// S_r(a) = { x : ||x - a|| = r }, n >= 2, r != 0.
struct SphereSpec {
  VectorFq center;
  Elem radius;

  friend bool operator==(const SphereSpec&, const SphereSpec&) = default;
};

/// H_r(a, d) = S_r(a) ∩ (a + d^⊥).
struct HypersphereSpec {
  VectorFq center;
  VectorFq direction;
  Elem radius;

  friend bool operator==(const HypersphereSpec&,
                         const HypersphereSpec&) = default;
};

/// Throws ZeroRadius, BadDimension.
void validate(const Space& space, const SphereSpec& s);
/// Throws ZeroRadius, ZeroDirection, BadDimension.
void validate(const Space& space, const HypersphereSpec& h);

PointSet sphere_points(const Space& space, const SphereSpec& s);
PointSet hypersphere_points(const Space& space, const HypersphereSpec& h);

/// Throws IdenticalSpheres when s1 == s2.
std::uint64_t sphere_intersection_size(const Space& space, const SphereSpec& s1,
                                       const SphereSpec& s2);

/// q^{n-2} + q^{floor((n-1)/2)}, the largest possible intersection of two
/// distinct spheres in F_q^n.
std::uint64_t sphere_intersection_bound(std::uint64_t q, unsigned n);

/// True iff every nonzero element is u^2 + v^2 for some u, v.
bool sum_two_squares_covers(const Field& field);

/// Scales d so that its first nonzero coordinate is 1.
VectorFq canonical_direction(const Field& field, const VectorFq& d);

}  // namespace kakeya
