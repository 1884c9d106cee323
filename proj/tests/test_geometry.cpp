#include <doctest.h>

#include <random>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/field.hpp"
#include "kakeya/geometry.hpp"
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

VectorFq vec(std::initializer_list<std::uint64_t> ranks) {
  std::vector<Elem> c;
  for (auto r : ranks) c.emplace_back(r);
  return VectorFq(std::move(c));
}

DiagonalEq eq(std::initializer_list<std::uint64_t> coeffs, std::uint64_t rhs) {
  DiagonalEq e;
  for (auto c : coeffs) e.coeffs.emplace_back(c);
  e.rhs = Elem{rhs};
  return e;
}

// Nested loops over raw coordinates, sharing nothing with Space.
std::uint64_t naive_count(const Field& f, const DiagonalEq& e) {
  const std::size_t n = e.coeffs.size();
  std::vector<std::uint64_t> x(n, 0);
  std::uint64_t count = 0;
  while (true) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < n; ++i)
      s = f.add(s, f.mul(e.coeffs[i], f.square(Elem{x[i]})));
    count += s == e.rhs;
    std::size_t i = 0;
    while (i < n && ++x[i] == f.q()) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("rank and unrank") {
  Space s(Field::make(5), 3);
  CHECK(s.size() == 125);
  CHECK(s.rank(vec({1, 2, 3})) == 1 + 2 * 5 + 3 * 25);
  for (std::uint64_t r = 0; r < s.size(); ++r) CHECK(s.rank(s.unrank(r)) == r);
  VectorFq x = VectorFq::zeros(3);
  std::uint64_t steps = 1;
  while (s.next(x)) {
    CHECK(s.rank(x) == steps);
    ++steps;
  }
  CHECK(steps == 125);
  CHECK(code_of([] { Space(Field::make(3), 0); }) == ErrorCode::BadDimension);
  CHECK(code_of([] { Space(Field::make(3), 26); }) == ErrorCode::Overflow);
}

TEST_CASE("norm and dot") {
  Space s5(Field::make(5), 2);
  CHECK(s5.norm(vec({1, 2})) == Elem{0});
  CHECK(s5.norm(vec({1, 1})) == Elem{2});
  CHECK(s5.dot(vec({1, 2}), vec({3, 4})) == Elem{1});
  Space s9(Field::make(3, 2), 2);
  // (t, 1): t^2 + 1 = 0 in F_9
  CHECK(s9.norm(vec({3, 1})) == Elem{0});
}

TEST_CASE("diagonal counts: worked examples") {
  Field f5 = Field::make(5);
  CHECK(diagonal_count_bruteforce(f5, eq({1, 1}, 1)) == 4);
  CHECK(diagonal_count_closed(f5, eq({1, 1}, 1)) == 4);
  Field f3 = Field::make(3);
  // x^2 + y^2 = 0 over F_3: only the origin
  CHECK(diagonal_count_bruteforce(f3, eq({1, 1}, 0)) == 1);
  CHECK(diagonal_count_closed(f3, eq({1, 1}, 0)) == 1);
  CHECK(diagonal_count_bruteforce(f3, eq({1}, 1)) == 2);
  CHECK(diagonal_count_bruteforce(f3, eq({1}, 2)) == 0);
  CHECK(diagonal_count_closed(f3, eq({1}, 2)) == 0);
  CHECK(code_of([&] { diagonal_count_closed(f5, eq({1, 0}, 1)); }) ==
        ErrorCode::ZeroCoefficient);
  CHECK(code_of([&] { diagonal_count_bruteforce(f5, eq({0}, 1)); }) ==
        ErrorCode::ZeroCoefficient);
}

TEST_CASE("diagonal counts: brute force matches nested loops") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
    Field f = Field::make(p, k);
    std::mt19937_64 rng(p * 31 + k);
    std::uniform_int_distribution<std::uint64_t> nz(1, f.q() - 1);
    for (unsigned n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        DiagonalEq e;
        for (unsigned i = 0; i < n; ++i) e.coeffs.emplace_back(nz(rng));
        for (std::uint64_t b = 0; b < f.q(); ++b) {
          e.rhs = Elem{b};
          CHECK(diagonal_count_bruteforce(f, e) == naive_count(f, e));
        }
      }
    }
  }
}

TEST_CASE("diagonal counts: closed form and magnitude law on random equations") {
  std::mt19937_64 rng(2024);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1},
                      {3, 2}, {11, 1}}) {
    Field f = Field::make(p, k);
    const std::uint64_t q = f.q();
    std::uniform_int_distribution<std::uint64_t> nz(1, q - 1);
    for (unsigned n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Elem> coeffs;
        for (unsigned i = 0; i < n; ++i) coeffs.emplace_back(nz(rng));
        auto hist = diagonal_value_counts(f, coeffs);
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < q; ++b) {
          DiagonalEq e{coeffs, Elem{b}};
          const std::uint64_t closed = diagonal_count_closed(f, e);
          CHECK(closed == hist[b]);
          const std::uint64_t main = ipow(q, n - 1);
          const std::uint64_t dev = closed > main ? closed - main : main - closed;
          CHECK(dev == diagonal_deviation(q, n, b == 0));
          total += hist[b];
        }
        CHECK(total == ipow(q, n));
      }
    }
  }
}

TEST_CASE("diagonal deviation values") {
  CHECK(diagonal_deviation(5, 2, false) == 1);
  CHECK(diagonal_deviation(5, 2, true) == 4);
  CHECK(diagonal_deviation(5, 3, true) == 0);
  CHECK(diagonal_deviation(5, 3, false) == 5);
  CHECK(diagonal_deviation(5, 4, true) == 20);
  CHECK(diagonal_deviation(5, 1, true) == 0);
}

TEST_CASE("sphere examples") {
  Field f3 = Field::make(3);
  Space s4(f3, 4);
  CHECK(sphere_points(s4, {VectorFq::zeros(4), Elem{1}}).size() == 24);
  Space s2(Field::make(5), 2);
  CHECK(sphere_points(s2, {VectorFq::zeros(2), Elem{1}}).size() == 4);
  CHECK(code_of([&] { sphere_points(s2, {VectorFq::zeros(2), Elem{0}}); }) ==
        ErrorCode::ZeroRadius);
  Space s1(Field::make(5), 1);
  CHECK(code_of([&] { validate(s1, SphereSpec{VectorFq::zeros(1), Elem{1}}); }) ==
        ErrorCode::BadDimension);
}

TEST_CASE("sphere size is translation invariant and matches the diagonal count") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
    Field f = Field::make(p, k);
    for (std::size_t n = 2; n <= 3; ++n) {
      Space s(f, n);
      std::mt19937_64 rng(n * 97 + p);
      std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
      for (std::uint64_t r = 1; r < f.q(); ++r) {
        DiagonalEq e{std::vector<Elem>(n, f.one()), Elem{r}};
        const std::uint64_t expected = diagonal_count_closed(f, e);
        for (int t = 0; t < 3; ++t) {
          SphereSpec sp{s.unrank(pick(rng)), Elem{r}};
          auto pts = sphere_points(s, sp);
          CHECK(pts.size() == expected);
          for (auto rank : pts.ranks())
            CHECK(s.norm(s.sub(s.unrank(rank), sp.center)) == Elem{r});
        }
      }
    }
  }
}

TEST_CASE("hypersphere examples") {
  Field f5 = Field::make(5);
  Space s(f5, 3);
  HypersphereSpec h{vec({1, 0, 0}), vec({1, 0, 0}), Elem{4}};
  auto pts = hypersphere_points(s, h);
  // x_1 = 1 and y^2 + z^2 = 4
  std::uint64_t expected = 0;
  for (std::uint64_t y = 0; y < 5; ++y)
    for (std::uint64_t z = 0; z < 5; ++z) expected += (y * y + z * z) % 5 == 4;
  CHECK(pts.size() == expected);
  CHECK(code_of([&] {
          hypersphere_points(s, {vec({1, 0, 0}), VectorFq::zeros(3), Elem{1}});
        }) == ErrorCode::ZeroDirection);
}

TEST_CASE("hypersphere depends only on the projective direction") {
  Field f = Field::make(5);
  Space s(f, 3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(1, s.size() - 1);
  std::uniform_int_distribution<std::uint64_t> scalar(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    VectorFq a = s.unrank(pick(rng) - 1);
    VectorFq d = s.unrank(pick(rng));
    Elem r{scalar(rng)};
    auto base = hypersphere_points(s, {a, d, r});
    CHECK(hypersphere_points(s, {a, s.scale(Elem{scalar(rng)}, d), r}) == base);
    CHECK(hypersphere_points(s, {a, canonical_direction(f, d), r}) == base);
    CHECK(base.is_subset_of(sphere_points(s, {a, r})));
  }
  CHECK(canonical_direction(f, vec({0, 3, 1})) == vec({0, 1, 2}));
}

TEST_CASE("intersection of two distinct spheres") {
  Field f5 = Field::make(5);
  Space s2(f5, 2);
  Space s3(f5, 3);
  CHECK(sphere_intersection_bound(5, 2) == 2);
  CHECK(sphere_intersection_bound(5, 3) == 10);
  CHECK(sphere_intersection_size(s2, {VectorFq::zeros(2), Elem{1}},
                                 {VectorFq::zeros(2), Elem{2}}) == 0);
  CHECK(code_of([&] {
          sphere_intersection_size(s2, {VectorFq::zeros(2), Elem{1}},
                                   {VectorFq::zeros(2), Elem{1}});
        }) == ErrorCode::IdenticalSpheres);
  for (const Space* s : {&s2, &s3}) {
    std::mt19937_64 rng(s->dim());
    std::uniform_int_distribution<std::uint64_t> pick(0, s->size() - 1);
    std::uniform_int_distribution<std::uint64_t> rad(1, 4);
    for (int t = 0; t < 100; ++t) {
      SphereSpec a{s->unrank(pick(rng)), Elem{rad(rng)}};
      SphereSpec b{s->unrank(pick(rng)), Elem{rad(rng)}};
      if (a == b) continue;
      const auto size = sphere_intersection_size(*s, a, b);
      CHECK(size == (sphere_points(*s, a) & sphere_points(*s, b)).size());
      CHECK(size <= sphere_intersection_bound(5, static_cast<unsigned>(s->dim())));
    }
  }
}

TEST_CASE("pairwise sphere scan on a small space") {
  auto scan = verify_intersection_lemma(Field::make(3), 2);
  CHECK(scan.holds());
  CHECK(scan.bound == 2);
  // 9 centers times 2 radii, unordered pairs
  CHECK(scan.pairs == 18 * 17 / 2);
}

TEST_CASE("every nonzero element is a sum of two squares") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1},
                      {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}}) {
    Field f = Field::make(p, k);
    CHECK(sum_two_squares_covers(f));
  }
}

TEST_CASE("point set operations") {
  Space s(Field::make(3), 2);
  std::vector<std::uint64_t> a{0, 1, 2, 5}, b{2, 5, 8};
  auto A = PointSet::from_ranks(s, a);
  auto B = PointSet::from_ranks(s, b);
  CHECK(A.size() == 4);
  CHECK((A | B).size() == 5);
  CHECK((A & B).ranks() == std::vector<std::uint64_t>{2, 5});
  CHECK(A.intersection_size(B) == 2);
  CHECK((A & B).is_subset_of(A));
  CHECK_FALSE(A.is_subset_of(B));
  CHECK(PointSet(s).empty());
  CHECK(PointSet::full(s).size() == 9);
  std::vector<std::uint64_t> bad{9};
  CHECK(code_of([&] { PointSet::from_ranks(s, bad); }) == ErrorCode::InvalidArgument);
  Space other(Field::make(3), 3);
  CHECK_THROWS_AS(A |= PointSet(other), Error);
}
