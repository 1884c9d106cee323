#pragma once

#include <cstdint>
#include <vector>

#include "kakeya/constructions.hpp"
#include "kakeya/field.hpp"

namespace kakeya {

struct SearchOptions {
  /// Largest q accepted by the exact search.
  std::uint64_t exact_limit = 31;
  /// Candidate-extension steps before BudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
  /// Largest C(q, size - 1) for which the unpruned certification runs.
  std::uint64_t certify_limit = 10'000'000;
};

struct SearchOutcome {
  std::uint64_t q = 0;
  CircularKind kind = CircularKind::Radius;
  /// Minimal size for the exact search, size found for greedy.
  std::uint64_t size = 0;
  std::vector<Elem> example;  // ascending rank
  std::uint64_t nodes_explored = 0;
  bool exact = false;
  /// An unpruned enumeration confirmed that no cover of size - 1 exists.
  bool certified = false;
};

/// Smallest subset of F_q whose difference set (radius) or restricted
/// sumset (center) is all of F_q. Sizes are tried upward from the counting
/// lower bound; within a size, sets are normalised to contain {0, 1} (both
/// cover properties are invariant under x -> λx + c) and extended in rank
/// order, pruning branches whose remaining elements cannot reach the
/// uncovered values. Throws BudgetExceeded past exact_limit or node_budget.
SearchOutcome minimal_circular_exact(const Field& field, CircularKind kind,
                                     const SearchOptions& options = {});

/// Greedy cover: adds the element covering the most new values, ties to
/// the smallest rank.
SearchOutcome greedy_circular(const Field& field, CircularKind kind);

/// Plain enumeration of every size-element subset, no normalisation and no
/// pruning. Returns true if one of them covers. Throws BudgetExceeded when
/// C(q, size) > limit.
bool cover_of_size_exists(const Field& field, CircularKind kind,
                          std::uint64_t size, std::uint64_t limit);

}  // namespace kakeya
