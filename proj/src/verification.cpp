#include "kakeya/verification.hpp"

#include <string>

#include "kakeya/error.hpp"

namespace kakeya {

BoundReport theorem1_bound(std::uint64_t q, unsigned n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "bound needs n >= 2");
  auto pw = [q](unsigned e) {
    std::uint64_t v = checked_pow(q, e);
    if (v > static_cast<std::uint64_t>(INT64_MAX / 4))
      throw Error(ErrorCode::Overflow, "bound does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
  };
  BoundReport out;
  out.q = q;
  out.n = n;
  if (n >= 4) {
    const unsigned f = (n - 1) / 2;
    out.branch = BoundReport::Branch::HighDimension;
    out.value = Rational(pw(n), 2) + Rational(pw(n - 1), 2) -
                Rational(pw(n - 2)) - Rational(pw(f + 2), 2) +
                Rational(pw(f + 1), 2);
  } else {
    out.branch = BoundReport::Branch::LowDimension;
    out.value = Rational(pw(n) - pw(n - 2), 4);
  }
  return out;
}

CircularBounds circular_lower_bounds(std::uint64_t q) {
  return {isqrt_ceil(q), isqrt_ceil(checked_mul(2, q))};
}

namespace {

// coverage[v] set for every value reached
template <class Combine>
bool covers(const Field& field, std::span<const Elem> set, bool distinct_only,
            Combine combine) {
  std::vector<bool> hit(field.q(), false);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (distinct_only && set[i] == set[j]) continue;
      const Elem v = combine(set[i], set[j]);
      if (!hit[v.rank]) {
        hit[v.rank] = true;
        if (++count == field.q()) return true;
      }
    }
  }
  return false;
}

void require_budget(std::uint64_t work, std::uint64_t budget) {
  if (work > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive scan needs " + std::to_string(work) +
                    " units of work, budget is " + std::to_string(budget));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

// All vectors of F_q^n grouped by norm.
std::vector<std::vector<VectorFq>> vectors_by_norm(const Space& space) {
  std::vector<std::vector<VectorFq>> out(space.field().q());
  VectorFq v = VectorFq::zeros(space.dim());
  do {
    out[space.norm(v).rank].push_back(v);
  } while (space.next(v));
  return out;
}

bool translate_contained(const PointSet& set, const VectorFq& center,
                         const std::vector<VectorFq>& offsets) {
  const Space& space = set.space();
  for (const VectorFq& v : offsets)
    if (!set.contains(space.add(center, v))) return false;
  return true;
}

bool key_range_ok(const KakeyaWitness& w, std::uint64_t first,
                  std::uint64_t q) {
  if (w.entries.size() != q - first) return false;
  for (std::size_t i = 0; i < w.entries.size(); ++i)
    if (w.entries[i].key.rank != first + i) return false;
  return true;
}

bool circle_ok(const PointSet& set, const Circle& c, Elem key,
               WitnessKind kind) {
  const Field& f = set.space().field();
  if (c.radius.is_zero()) return false;
  if (kind == WitnessKind::CircularRadius && c.radius != key) return false;
  if (kind == WitnessKind::CircularCenter && c.center != key) return false;
  return set.contains(f.add(c.center, c.radius).rank) &&
         set.contains(f.sub(c.center, c.radius).rank);
}

}  // namespace

bool diff_cover(const Field& field, std::span<const Elem> set) {
  return covers(field, set, false,
                [&](Elem a, Elem b) { return field.sub(a, b); });
}

bool sum_cover(const Field& field, std::span<const Elem> set) {
  return covers(field, set, true,
                [&](Elem a, Elem b) { return field.add(a, b); });
}

bool circular_cover(const Field& field, std::span<const Elem> set,
                    CircularKind kind) {
  return kind == CircularKind::Radius ? diff_cover(field, set)
                                      : sum_cover(field, set);
}

std::vector<Elem> elements_of(const PointSet& line) {
  if (line.space().dim() != 1)
    throw Error(ErrorCode::BadDimension, "expected a subset of F_q");
  std::vector<Elem> out;
  for (std::uint64_t r : line.ranks()) out.push_back(Elem{r});
  return out;
}

bool check_witness(const PointSet& set, const KakeyaWitness& witness) {
  const Space& space = set.space();
  const std::uint64_t q = space.field().q();
  const bool circular = witness.kind == WitnessKind::CircularRadius ||
                        witness.kind == WitnessKind::CircularCenter;
  if (circular != (space.dim() == 1)) return false;
  const bool keys_from_zero = witness.kind == WitnessKind::CenterCoordinate ||
                              witness.kind == WitnessKind::CircularCenter;
  if (!key_range_ok(witness, keys_from_zero ? 0 : 1, q)) return false;

  for (const WitnessEntry& e : witness.entries) {
    bool ok = false;
    if (const auto* s = std::get_if<SphereSpec>(&e.object)) {
      if (s->center.dim() != space.dim() || s->radius.is_zero()) return false;
      if (witness.kind == WitnessKind::Radius)
        ok = s->radius == e.key;
      else if (witness.kind == WitnessKind::CenterCoordinate)
        ok = s->center[0] == e.key;
      ok = ok && sphere_points(space, *s).is_subset_of(set);
    } else if (const auto* h = std::get_if<HypersphereSpec>(&e.object)) {
      if (h->center.dim() != space.dim() || h->direction.dim() != space.dim() ||
          h->radius.is_zero() || h->direction.is_zero())
        return false;
      if (witness.kind == WitnessKind::Hypersphere && h->radius == e.key) {
        const PointSet pts = hypersphere_points(space, *h);
        ok = !pts.empty() && pts.is_subset_of(set);
      }
    } else if (const auto* c = std::get_if<Circle>(&e.object)) {
      ok = circular && circle_ok(set, *c, e.key, witness.kind);
    }
    if (!ok) return false;
  }
  return true;
}

bool verify_radius_kakeya(const PointSet& set, const KakeyaWitness& witness) {
  return witness.kind == WitnessKind::Radius && check_witness(set, witness);
}

bool verify_center_kakeya(const PointSet& set, const KakeyaWitness& witness) {
  return witness.kind == WitnessKind::CenterCoordinate &&
         check_witness(set, witness);
}

std::uint64_t radius_kakeya_work(const Space& space) {
  return saturating_mul(space.size(), space.field().q() - 1);
}

std::uint64_t center_kakeya_work(const Space& space) {
  return radius_kakeya_work(space);
}

std::uint64_t hypersphere_kakeya_work(const Space& space) {
  return saturating_mul(space.size(), space.size() - 1);
}

bool verify_radius_kakeya_exhaustive(const PointSet& set,
                                     std::uint64_t budget) {
  const Space& space = set.space();
  if (space.dim() < 2)
    throw Error(ErrorCode::BadDimension, "spheres need n >= 2");
  require_budget(radius_kakeya_work(space), budget);
  const auto by_norm = vectors_by_norm(space);
  for (std::uint64_t r = 1; r < space.field().q(); ++r) {
    bool found = false;
    VectorFq a = VectorFq::zeros(space.dim());
    do {
      found = translate_contained(set, a, by_norm[r]);
    } while (!found && space.next(a));
    if (!found) return false;
  }
  return true;
}

bool verify_center_kakeya_exhaustive(const PointSet& set,
                                     std::uint64_t budget) {
  const Space& space = set.space();
  if (space.dim() < 2)
    throw Error(ErrorCode::BadDimension, "spheres need n >= 2");
  require_budget(center_kakeya_work(space), budget);
  const std::uint64_t q = space.field().q();
  const auto by_norm = vectors_by_norm(space);
  Space tail(space.field(), space.dim() - 1);
  for (std::uint64_t a1 = 0; a1 < q; ++a1) {
    bool found = false;
    VectorFq rest = VectorFq::zeros(space.dim() - 1);
    do {
      VectorFq a = VectorFq::zeros(space.dim());
      a[0] = Elem{a1};
      for (std::size_t i = 1; i < space.dim(); ++i) a[i] = rest[i - 1];
      for (std::uint64_t r = 1; r < q && !found; ++r)
        found = translate_contained(set, a, by_norm[r]);
    } while (!found && tail.next(rest));
    if (!found) return false;
  }
  return true;
}

bool verify_hypersphere_kakeya_exhaustive(const PointSet& set,
                                          std::uint64_t budget) {
  const Space& space = set.space();
  if (space.dim() < 2)
    throw Error(ErrorCode::BadDimension, "hyper-spheres need n >= 2");
  require_budget(hypersphere_kakeya_work(space), budget);
  const Field& field = space.field();
  const auto by_norm = vectors_by_norm(space);

  std::vector<VectorFq> directions;
  {
    VectorFq d = VectorFq::zeros(space.dim());
    while (space.next(d))
      if (canonical_direction(field, d) == d) directions.push_back(d);
  }
  for (std::uint64_t r = 1; r < field.q(); ++r) {
    bool found = false;
    for (const VectorFq& d : directions) {
      std::vector<VectorFq> offsets;
      for (const VectorFq& v : by_norm[r])
        if (space.dot(d, v).is_zero()) offsets.push_back(v);
      // an empty hyper-sphere is not a certificate
      if (offsets.empty()) continue;
      VectorFq a = VectorFq::zeros(space.dim());
      do {
        found = translate_contained(set, a, offsets);
      } while (!found && space.next(a));
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

LemmaScan verify_intersection_lemma(const Field& field, std::size_t n,
                                    std::uint64_t budget) {
  Space space(field, n);
  if (n < 2) throw Error(ErrorCode::BadDimension, "spheres need n >= 2");
  const std::uint64_t q = field.q();
  const std::uint64_t spheres = saturating_mul(space.size(), q - 1);
  require_budget(saturating_mul(spheres, spheres - 1) / 2, budget);

  LemmaScan scan;
  scan.bound = sphere_intersection_bound(q, static_cast<unsigned>(n));
  struct Entry {
    std::uint64_t center_rank;
    PointSet points;
  };
  std::vector<Entry> all;
  all.reserve(spheres);
  VectorFq a = VectorFq::zeros(n);
  do {
    for (std::uint64_t r = 1; r < q; ++r)
      all.push_back({space.rank(a), sphere_points(space, {a, Elem{r}})});
  } while (space.next(a));

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const std::uint64_t c = all[i].points.intersection_size(all[j].points);
      ++scan.pairs;
      if (c > scan.max_intersection) scan.max_intersection = c;
      if (all[i].center_rank == all[j].center_rank && c != 0)
        scan.same_center_disjoint = false;
    }
  }
  return scan;
}

Assessment assess(const ConstructionResult& result, VerifyMode mode,
                  std::uint64_t budget) {
  Assessment out;
  const Space& space = result.space();
  const bool run_witness = mode != VerifyMode::Exhaustive;
  const bool run_exhaustive = mode != VerifyMode::Witness;
  out.witness_valid = run_witness ? check_witness(result.points, result.witness)
                                  : true;

  const std::int64_t size = static_cast<std::int64_t>(result.size);
  if (const auto* circ = std::get_if<CircularAccounting>(&result.accounting)) {
    const std::uint64_t q = space.field().q();
    const auto lb = circular_lower_bounds(q);
    out.bound = Rational(static_cast<std::int64_t>(
        circ->kind == CircularKind::Radius ? lb.radius_min : lb.center_min));
    out.bound_met = size >= out.bound.ceil();
    const auto sq = static_cast<unsigned __int128>(result.size) * result.size;
    out.circular_window = sq >= q && sq < static_cast<unsigned __int128>(36) * q;
    if (run_exhaustive)
      out.exhaustive_valid =
          circular_cover(space.field(), circ->elements, circ->kind);
  } else if (const auto* hyp =
                 std::get_if<HypersphereAccounting>(&result.accounting)) {
    out.bound = Rational(static_cast<std::int64_t>(hyp->null_quadric_bound));
    out.bound_is_upper = true;
    out.bound_met = size <= out.bound.floor();
    if (run_exhaustive)
      out.exhaustive_valid =
          verify_hypersphere_kakeya_exhaustive(result.points, budget);
  } else {
    const auto b =
        theorem1_bound(space.field().q(), static_cast<unsigned>(space.dim()));
    out.bound = b.value;
    out.bound_met = size >= b.ceiling();
    if (run_exhaustive) {
      out.exhaustive_valid =
          result.witness.kind == WitnessKind::CenterCoordinate
              ? verify_center_kakeya_exhaustive(result.points, budget)
              : verify_radius_kakeya_exhaustive(result.points, budget);
    }
  }
  return out;
}

}  // namespace kakeya
