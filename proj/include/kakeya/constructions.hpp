#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kakeya/field.hpp"
#include "kakeya/geometry.hpp"
#include "kakeya/numeric.hpp"

namespace kakeya {

/// One-dimensional circles {a - r, a + r}: which parameter must be covered.
enum class CircularKind { Radius, Center };

const char* to_string(CircularKind kind) noexcept;

/// Circle in F_q: the two points center ± radius, radius != 0.
struct Circle {
  Elem center;
  Elem radius;

  friend bool operator==(const Circle&, const Circle&) = default;
};

enum class WitnessKind {
  Radius,            // key r in F_q^*, sphere of radius r
  CenterCoordinate,  // key a_1 in F_q, sphere whose center starts with a_1
  Hypersphere,       // key r in F_q^*, hyper-sphere of radius r
  CircularRadius,    // key r in F_q^*, circle of radius ±r
  CircularCenter,    // key a in F_q, circle centered at a
};

const char* to_string(WitnessKind kind) noexcept;

using CertifiedObject = std::variant<SphereSpec, HypersphereSpec, Circle>;

struct WitnessEntry {
  Elem key;
  CertifiedObject object;
};

/// Per-parameter certificate: for every key, an object contained in the set.
struct KakeyaWitness {
  WitnessKind kind = WitnessKind::Radius;
  std::vector<WitnessEntry> entries;  // ascending key rank
};

/// Inclusion-exclusion bookkeeping for the union of the S_r.
struct RadiusAccounting {
  std::uint64_t sum_sphere_sizes = 0;
  /// Over ordered pairs r != s.
  std::uint64_t sum_pairwise_intersections = 0;
  /// Largest number of spheres through a single point.
  std::uint64_t max_multiplicity = 0;
  bool triple_intersections_empty = false;
  bool inclusion_exclusion_holds = false;
};

struct CenterAccounting {
  Elem nonsquare;
  /// |Q| minus the sum of the predicted main terms.
  Rational deviation;
  /// deviation / q^{n-2}
  Rational deviation_scaled;
};

struct HypersphereAccounting {
  std::uint64_t objects_used = 0;
  /// Centers a != 0 with ||a|| = 0, which would have radius 0.
  std::uint64_t isotropic_skipped = 0;
  bool on_null_quadric = false;
  /// q^{n-1} + q^{floor(n/2)} - q^{ceil((n-2)/2)}
  std::uint64_t null_quadric_bound = 0;
};

struct CircularAccounting {
  CircularKind kind = CircularKind::Radius;
  std::vector<Elem> elements;
  /// |K_p| of the prime-field seed (odd-power construction), else 0.
  std::uint64_t seed_size = 0;
};

struct ConstructionResult {
  std::string construction;
  std::string variant;  // empty for spherical constructions
  PointSet points;
  KakeyaWitness witness;
  std::uint64_t size = 0;
  std::vector<Rational> predicted_main_terms;
  std::variant<std::monostate, RadiusAccounting, CenterAccounting,
               HypersphereAccounting, CircularAccounting>
      accounting;

  const Space& space() const noexcept { return points.space(); }
  const Field& field() const noexcept { return points.space().field(); }
};

/// Union over r in F_q^* of S_r((r, 0, ..., 0)). Throws BadDimension (n < 2),
/// Overflow.
ConstructionResult radius_spherical(const Field& field, std::size_t n);

/// Q = { (x, y) : r - ||y|| is a square or zero } for a nonsquare r, which
/// holds S_r((a, 0, ..., 0)) for every a. Throws NotANonsquare.
ConstructionResult center_spherical(const Field& field, std::size_t n,
                                    Elem nonsquare);
ConstructionResult center_spherical(const Field& field, std::size_t n);

/// Union over a != 0 with ||a|| != 0 of H_{-||a||}(a, a). Throws
/// BadDimension (n < 3), Overflow.
ConstructionResult hypersphere_union(const Field& field, std::size_t n);

/// {0, 1, ..., s} ∪ ∓{c, 2c, ..., s c} with s = floor(sqrt p), c = ceil(sqrt p);
/// the minus sign for the radius variant. Requires a prime field.
ConstructionResult circular_prime(const Field& field, CircularKind kind);
ConstructionResult circular_prime(std::uint64_t p, CircularKind kind);

/// F_r ∪ t F_r for q = r^2. Throws NotASquareField if k is odd.
ConstructionResult circular_square(const Field& field, CircularKind kind);

/// K_1 ∪ K_2 for q = p^{2m+1}, m >= 1, using t as the defining element.
/// Throws WrongDegree if k is even or 1.
ConstructionResult circular_odd_power(const Field& field, CircularKind kind);

/// The residues of the prime-field seed set, ascending.
std::vector<std::uint64_t> prime_seed(std::uint64_t p, CircularKind kind);

/// Certificate for a one-dimensional set: for each required parameter the
/// first pair of elements (in rank order) realising it. Missing parameters
/// are simply absent.
KakeyaWitness circular_witness(const Field& field, std::span<const Elem> set,
                               CircularKind kind);

}  // namespace kakeya
