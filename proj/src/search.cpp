#include "kakeya/search.hpp"

#include <algorithm>
#include <string>

#include "kakeya/error.hpp"
#include "kakeya/verification.hpp"

namespace kakeya {

namespace {

// Multiplicity of every difference (radius) or restricted sum (center)
// realised by the current set, so elements can be removed again.
class Coverage {
 public:
  Coverage(const Field& field, CircularKind kind)
      : field_(field), kind_(kind), count_(field.q(), 0) {}

  void push(Elem y) {
    update(y, +1);
    set_.push_back(y);
  }

  void pop() {
    Elem y = set_.back();
    set_.pop_back();
    update(y, -1);
  }

  std::uint64_t covered() const noexcept { return covered_; }
  std::uint64_t uncovered() const noexcept { return field_.q() - covered_; }
  std::size_t size() const noexcept { return set_.size(); }
  const std::vector<Elem>& set() const noexcept { return set_; }

  /// Upper bound on how many new values j more elements can cover.
  std::uint64_t max_gain(std::uint64_t j) const noexcept {
    const std::uint64_t m = set_.size();
    const std::uint64_t pairs = m * j + j * (j - 1) / 2;
    return kind_ == CircularKind::Radius ? 2 * pairs : pairs;
  }

 private:
  void bump(Elem v, int delta) {
    auto& c = count_[v.rank];
    if (delta > 0) {
      if (c++ == 0) ++covered_;
    } else {
      if (--c == 0) --covered_;
    }
  }

  void update(Elem y, int delta) {
    if (kind_ == CircularKind::Radius) {
      bump(field_.zero(), delta);
      for (Elem x : set_) {
        bump(field_.sub(y, x), delta);
        bump(field_.sub(x, y), delta);
      }
    } else {
      for (Elem x : set_) bump(field_.add(x, y), delta);
    }
  }

  const Field& field_;
  CircularKind kind_;
  std::vector<std::uint32_t> count_;
  std::uint64_t covered_ = 0;
  std::vector<Elem> set_;
};

class ExactSearch {
 public:
  ExactSearch(const Field& field, CircularKind kind, std::uint64_t budget)
      : cover_(field, kind), q_(field.q()), budget_(budget) {}

  // Looks for a cover of the given size containing {0, 1}.
  bool run(std::uint64_t size) {
    cover_.push(Elem{0});
    cover_.push(Elem{1});
    nodes_ += 2;
    const bool found = extend(2, size - 2);
    if (!found) {
      cover_.pop();
      cover_.pop();
    }
    return found;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<Elem>& set() const noexcept { return cover_.set(); }

 private:
  bool extend(std::uint64_t next, std::uint64_t remaining) {
    if (remaining == 0) return cover_.uncovered() == 0;
    if (cover_.uncovered() > cover_.max_gain(remaining)) return false;
    for (std::uint64_t c = next; c + remaining <= q_; ++c) {
      if (++nodes_ > budget_)
        throw Error(ErrorCode::BudgetExceeded,
                    "exact search exceeded the node budget of " +
                        std::to_string(budget_));
      cover_.push(Elem{c});
      if (extend(c + 1, remaining - 1)) return true;
      cover_.pop();
    }
    return false;
  }

  Coverage cover_;
  std::uint64_t q_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

SearchOutcome minimal_circular_exact(const Field& field, CircularKind kind,
                                     const SearchOptions& options) {
  const std::uint64_t q = field.q();
  if (q > options.exact_limit)
    throw Error(ErrorCode::BudgetExceeded,
                "exact search limited to q <= " +
                    std::to_string(options.exact_limit) + ", got q = " +
                    std::to_string(q));
  const auto bounds = circular_lower_bounds(q);
  std::uint64_t size =
      kind == CircularKind::Radius ? bounds.radius_min : bounds.center_min;
  if (size < 2) size = 2;

  SearchOutcome out;
  out.q = q;
  out.kind = kind;
  out.exact = true;
  std::uint64_t nodes = 0;
  for (; size <= q; ++size) {
    ExactSearch search(field, kind, options.node_budget - nodes);
    const bool found = search.run(size);
    nodes += search.nodes();
    if (found) {
      out.example = search.set();
      break;
    }
  }
  if (out.example.empty())
    throw Error(ErrorCode::InvalidArgument, "no circular cover exists");
  out.size = size;
  out.nodes_explored = nodes;
  if (binomial_saturating(q, size - 1) <= options.certify_limit)
    out.certified = !cover_of_size_exists(field, kind, size - 1,
                                          options.certify_limit);
  std::sort(out.example.begin(), out.example.end());
  return out;
}

SearchOutcome greedy_circular(const Field& field, CircularKind kind) {
  const std::uint64_t q = field.q();
  Coverage cover(field, kind);
  std::vector<bool> chosen(q, false);
  std::uint64_t steps = 0;
  while (cover.uncovered() > 0 && cover.size() < q) {
    std::uint64_t best = q, best_gain = 0;
    for (std::uint64_t c = 0; c < q; ++c) {
      if (chosen[c]) continue;
      const std::uint64_t before = cover.covered();
      cover.push(Elem{c});
      const std::uint64_t gain = cover.covered() - before;
      cover.pop();
      ++steps;
      if (best == q || gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    chosen[best] = true;
    cover.push(Elem{best});
  }
  SearchOutcome out;
  out.q = q;
  out.kind = kind;
  out.example = cover.set();
  std::sort(out.example.begin(), out.example.end());
  out.size = out.example.size();
  out.nodes_explored = steps;
  return out;
}

bool cover_of_size_exists(const Field& field, CircularKind kind,
                          std::uint64_t size, std::uint64_t limit) {
  const std::uint64_t q = field.q();
  if (size > q) return false;
  const std::uint64_t total = binomial_saturating(q, size);
  if (total > limit)
    throw Error(ErrorCode::BudgetExceeded,
                "certification needs " + std::to_string(total) +
                    " subsets, limit is " + std::to_string(limit));
  if (size == 0) return false;
  std::vector<std::uint64_t> idx(size);
  for (std::uint64_t i = 0; i < size; ++i) idx[i] = i;
  std::vector<Elem> subset(size);
  for (;;) {
    for (std::uint64_t i = 0; i < size; ++i) subset[i] = Elem{idx[i]};
    if (circular_cover(field, subset, kind)) return true;
    std::uint64_t i = size;
    while (i > 0 && idx[i - 1] == q - size + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::uint64_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kakeya
