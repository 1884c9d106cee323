#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "kakeya/constructions.hpp"
#include "kakeya/geometry.hpp"
#include "kakeya/numeric.hpp"

namespace kakeya {

/// Lower bound on a set in F_q^n holding q - 1 distinct spheres (n >= 4) or
/// (q - 1)/2 distinct spheres (n = 2, 3).
struct BoundReport {
  enum class Branch { HighDimension, LowDimension };

  std::uint64_t q = 0;
  unsigned n = 0;
  Rational value;
  Branch branch = Branch::HighDimension;

  /// Set sizes are integers, so comparisons use the ceiling.
  std::int64_t ceiling() const noexcept { return value.ceil(); }
};

/// n >= 4:  q^n/2 + q^{n-1}/2 - q^{n-2} - q^{f+2}/2 + q^{f+1}/2, f = floor((n-1)/2)
/// n = 2,3: (q^n - q^{n-2})/4
/// Throws BadDimension for n < 2, Overflow.
BoundReport theorem1_bound(std::uint64_t q, unsigned n);

struct CircularBounds {
  std::uint64_t radius_min = 0;  // ceil(sqrt q)
  std::uint64_t center_min = 0;  // ceil(sqrt 2q)
};

CircularBounds circular_lower_bounds(std::uint64_t q);

/// K - K == F_q.
bool diff_cover(const Field& field, std::span<const Elem> set);
/// {x1 + x2 : x1 != x2 in K} == F_q.
bool sum_cover(const Field& field, std::span<const Elem> set);
bool circular_cover(const Field& field, std::span<const Elem> set,
                    CircularKind kind);

/// Elements of a one-dimensional point set.
std::vector<Elem> elements_of(const PointSet& line);

/// Default work budget for exhaustive scans, in object-subset tests.
inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

/// Checks key coverage, that each object matches its key, and that each
/// certified object's points lie in the set.
bool check_witness(const PointSet& set, const KakeyaWitness& witness);

bool verify_radius_kakeya(const PointSet& set, const KakeyaWitness& witness);
bool verify_center_kakeya(const PointSet& set, const KakeyaWitness& witness);

/// Exhaustive searches. Work is counted as the number of candidate
/// (center, radius) pairs, checked against the budget before any scan;
/// throws BudgetExceeded carrying the estimate.
std::uint64_t radius_kakeya_work(const Space& space);
std::uint64_t center_kakeya_work(const Space& space);
std::uint64_t hypersphere_kakeya_work(const Space& space);
bool verify_radius_kakeya_exhaustive(const PointSet& set,
                                     std::uint64_t budget = kDefaultWorkBudget);
bool verify_center_kakeya_exhaustive(const PointSet& set,
                                     std::uint64_t budget = kDefaultWorkBudget);
/// Some hyper-sphere of every radius, over all centers and directions.
bool verify_hypersphere_kakeya_exhaustive(
    const PointSet& set, std::uint64_t budget = kDefaultWorkBudget);

struct LemmaScan {
  std::uint64_t max_intersection = 0;
  std::uint64_t bound = 0;
  std::uint64_t pairs = 0;
  bool same_center_disjoint = true;

  bool holds() const noexcept {
    return max_intersection <= bound && same_center_disjoint;
  }
};

/// Every pair of distinct spheres in F_q^n. Budget counts pairs.
LemmaScan verify_intersection_lemma(const Field& field, std::size_t n,
                                    std::uint64_t budget = kDefaultWorkBudget);

enum class VerifyMode { Witness, Exhaustive, Both };

/// Verdicts and bound comparison attached to a construction.
struct Assessment {
  bool witness_valid = false;
  std::optional<bool> exhaustive_valid;
  Rational bound;
  /// Lower bounds must be met from above, upper bounds from below.
  bool bound_is_upper = false;
  bool bound_met = false;
  /// sqrt q <= |K| < 6 sqrt q, only for one-dimensional sets.
  std::optional<bool> circular_window;

  bool valid() const noexcept {
    return witness_valid && exhaustive_valid.value_or(true) && bound_met &&
           circular_window.value_or(true);
  }
};

Assessment assess(const ConstructionResult& result,
                  VerifyMode mode = VerifyMode::Witness,
                  std::uint64_t budget = kDefaultWorkBudget);

}  // namespace kakeya
