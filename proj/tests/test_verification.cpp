#include <doctest.h>

#include <random>
#include <vector>

#include "kakeya/constructions.hpp"
#include "kakeya/error.hpp"
#include "kakeya/verification.hpp"

using namespace kakeya;

namespace {

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

std::vector<Elem> elems(std::initializer_list<std::uint64_t> ranks) {
  std::vector<Elem> out;
  for (auto r : ranks) out.emplace_back(r);
  return out;
}

// Direct definitions, for comparison with the library covers.
bool naive_diff_cover(const Field& f, const std::vector<Elem>& k) {
  std::vector<bool> seen(f.q(), false);
  for (Elem a : k)
    for (Elem b : k) seen[f.sub(a, b).rank] = true;
  for (bool s : seen)
    if (!s) return false;
  return true;
}

bool naive_sum_cover(const Field& f, const std::vector<Elem>& k) {
  std::vector<bool> seen(f.q(), false);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      if (i != j) seen[f.add(k[i], k[j]).rank] = true;
  for (bool s : seen)
    if (!s) return false;
  return true;
}

}  // namespace

TEST_CASE("lower bound values") {
  auto b54 = theorem1_bound(5, 4);
  CHECK(b54.value == Rational(300));
  CHECK(b54.branch == BoundReport::Branch::HighDimension);
  auto b52 = theorem1_bound(5, 2);
  CHECK(b52.value == Rational(6));
  CHECK(b52.branch == BoundReport::Branch::LowDimension);
  CHECK(theorem1_bound(3, 3).value == Rational(6));
  CHECK(theorem1_bound(3, 2).value == Rational(2));
  // (7^2 - 1)/4
  CHECK(theorem1_bound(7, 2).value == Rational(12));
  CHECK(theorem1_bound(3, 4).value == Rational(81, 2) + Rational(27, 2) - Rational(9) -
                                          Rational(27, 2) + Rational(9, 2));
  CHECK(theorem1_bound(3, 4).ceiling() == 36);
  CHECK(code_of([] { theorem1_bound(5, 1); }) == ErrorCode::BadDimension);
  CHECK(code_of([] { theorem1_bound(1'000'003, 4); }) == ErrorCode::Overflow);
}

TEST_CASE("circular lower bounds") {
  CHECK(circular_lower_bounds(9).radius_min == 3);
  CHECK(circular_lower_bounds(9).center_min == 5);
  CHECK(circular_lower_bounds(5).radius_min == 3);
  CHECK(circular_lower_bounds(5).center_min == 4);
  CHECK(circular_lower_bounds(49).radius_min == 7);
  CHECK(circular_lower_bounds(49).center_min == 10);
}

TEST_CASE("cover examples") {
  Field f7 = Field::make(7);
  CHECK(diff_cover(f7, elems({0, 1, 3})));
  CHECK_FALSE(diff_cover(f7, elems({0, 1, 2})));
  CHECK(sum_cover(Field::make(3), elems({0, 1, 2})));
  CHECK_FALSE(sum_cover(Field::make(3), elems({0, 1})));
  CHECK_FALSE(diff_cover(f7, {}));
  CHECK_FALSE(sum_cover(f7, elems({3})));
  CHECK(circular_cover(f7, elems({0, 1, 3}), CircularKind::Radius));
}

TEST_CASE("covers agree with their definitions on random subsets") {
  std::mt19937_64 rng(99);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{7, 1}, {3, 2}, {13, 1}}) {
    Field f = Field::make(p, k);
    std::bernoulli_distribution take(0.35);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Elem> set;
      for (std::uint64_t r = 0; r < f.q(); ++r)
        if (take(rng)) set.emplace_back(r);
      CHECK(diff_cover(f, set) == naive_diff_cover(f, set));
      CHECK(sum_cover(f, set) == naive_sum_cover(f, set));
    }
  }
}

TEST_CASE("covers are invariant under affine maps") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{11, 1}, {3, 2}, {5, 2}}) {
    Field f = Field::make(p, k);
    std::uniform_int_distribution<std::uint64_t> any(0, f.q() - 1);
    std::uniform_int_distribution<std::uint64_t> nz(1, f.q() - 1);
    std::bernoulli_distribution take(0.4);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Elem> set;
      for (std::uint64_t r = 0; r < f.q(); ++r)
        if (take(rng)) set.emplace_back(r);
      const Elem lambda{nz(rng)}, c{any(rng)};
      std::vector<Elem> image;
      for (Elem x : set) image.push_back(f.add(f.mul(lambda, x), c));
      CHECK(diff_cover(f, set) == diff_cover(f, image));
      CHECK(sum_cover(f, set) == sum_cover(f, image));
    }
  }
}

TEST_CASE("witness and exhaustive verification agree on constructions") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
    Field f = Field::make(p, k);
    for (std::size_t n = 2; n <= 6; ++n) {
      if (checked_pow(f.q(), static_cast<unsigned>(n)) > 729) break;
      auto rad = radius_spherical(f, n);
      auto cen = center_spherical(f, n);
      auto a = assess(rad, VerifyMode::Both);
      CHECK(a.witness_valid);
      CHECK(a.exhaustive_valid == a.witness_valid);
      auto b = assess(cen, VerifyMode::Both);
      CHECK(b.exhaustive_valid == b.witness_valid);
      CHECK(verify_center_kakeya_exhaustive(cen.points));
      if (n >= 3) {
        auto h = assess(hypersphere_union(f, n), VerifyMode::Both);
        CHECK(h.witness_valid);
        CHECK(h.exhaustive_valid == true);
      }
    }
  }
}

TEST_CASE("exhaustive verdicts are monotone under supersets") {
  Field f = Field::make(3);
  Space s(f, 3);
  auto base = radius_spherical(f, 3).points;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    PointSet bigger = base;
    for (int i = 0; i < 3; ++i) bigger.insert(pick(rng));
    CHECK(verify_radius_kakeya_exhaustive(bigger));
  }
  CHECK(verify_radius_kakeya_exhaustive(PointSet::full(s)));
  CHECK(verify_center_kakeya_exhaustive(PointSet::full(s)));
  CHECK(verify_hypersphere_kakeya_exhaustive(PointSet::full(s)));
  CHECK_FALSE(verify_radius_kakeya_exhaustive(PointSet(s)));
  CHECK_FALSE(verify_center_kakeya_exhaustive(PointSet(s)));
  CHECK_FALSE(verify_hypersphere_kakeya_exhaustive(PointSet(s)));
}

TEST_CASE("witness checks reject tampered certificates") {
  Field f = Field::make(5);
  auto res = radius_spherical(f, 3);
  CHECK(check_witness(res.points, res.witness));

  auto missing = res.witness;
  missing.entries.pop_back();
  CHECK_FALSE(check_witness(res.points, missing));

  auto wrong_key = res.witness;
  wrong_key.entries[0].key = Elem{2};
  CHECK_FALSE(check_witness(res.points, wrong_key));

  PointSet smaller(res.space());
  CHECK_FALSE(check_witness(smaller, res.witness));
}

TEST_CASE("budget errors are raised before scanning") {
  Field f = Field::make(5);
  Space s(f, 4);
  CHECK(radius_kakeya_work(s) == 625 * 4);
  CHECK(code_of([&] { verify_radius_kakeya_exhaustive(PointSet::full(s), 100); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { verify_hypersphere_kakeya_exhaustive(PointSet::full(s), 1000); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { verify_intersection_lemma(f, 4, 1000); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("assessment of circular constructions") {
  auto res = circular_square(Field::make(3, 2), CircularKind::Radius);
  auto a = assess(res);
  CHECK(a.valid());
  CHECK(a.circular_window == true);
  CHECK(a.bound == Rational(3));
  CHECK(elements_of(res.points).size() == 5);

  auto h = assess(hypersphere_union(Field::make(3), 3));
  CHECK(h.bound_is_upper);
  CHECK(h.bound_met);
}
