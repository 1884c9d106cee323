#include <doctest.h>

#include <cmath>
#include <set>
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

std::vector<std::uint64_t> ranks_of(const ConstructionResult& r) {
  return r.points.ranks();
}

const std::vector<std::pair<std::uint64_t, unsigned>> kFields{
    {3, 1}, {5, 1}, {7, 1}, {3, 2}};

}  // namespace

TEST_CASE("radius spheres meet only on the expected hyperplane") {
  for (auto [p, k] : kFields) {
    Field f = Field::make(p, k);
    Space s(f, 3);
    const Elem half = f.inv(f.from_int(2));
    for (std::uint64_t r = 1; r < f.q(); ++r) {
      for (std::uint64_t t = r + 1; t < f.q(); ++t) {
        VectorFq cr = VectorFq::zeros(3), ct = VectorFq::zeros(3);
        cr[0] = Elem{r};
        ct[0] = Elem{t};
        auto both = sphere_points(s, {cr, Elem{r}}) & sphere_points(s, {ct, Elem{t}});
        const Elem x1 = f.mul(f.sub(f.add(Elem{r}, Elem{t}), f.one()), half);
        for (auto rank : both.ranks()) CHECK(s.unrank(rank)[0] == x1);
      }
    }
  }
}

TEST_CASE("radius construction accounting") {
  for (auto [p, k] : kFields) {
    Field f = Field::make(p, k);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto res = radius_spherical(f, n);
      const auto& acc = std::get<RadiusAccounting>(res.accounting);
      CHECK(acc.triple_intersections_empty);
      CHECK(acc.inclusion_exclusion_holds);
      CHECK(acc.max_multiplicity <= 2);

      // direct recount of multiplicities
      Space s = res.space();
      std::vector<std::uint8_t> mult(s.size(), 0);
      std::uint64_t sum_sizes = 0;
      for (const auto& e : res.witness.entries) {
        auto pts = sphere_points(s, std::get<SphereSpec>(e.object));
        sum_sizes += pts.size();
        for (auto r : pts.ranks()) ++mult[r];
      }
      std::uint64_t covered = 0, doubles = 0, triples = 0;
      for (auto m : mult) {
        covered += m > 0;
        doubles += m == 2;
        triples += m >= 3;
      }
      CHECK(triples == 0);
      CHECK(covered == res.size);
      CHECK(sum_sizes == acc.sum_sphere_sizes);
      CHECK(acc.sum_pairwise_intersections == 2 * doubles);
      CHECK(res.witness.entries.size() == f.q() - 1);
      CHECK(verify_radius_kakeya(res.points, res.witness));
    }
  }
}

TEST_CASE("radius construction sizes") {
  // frozen from the construction sweep; each checked against the bound below
  CHECK(radius_spherical(Field::make(5), 4).size == 345);
  CHECK(radius_spherical(Field::make(3), 2).size == 6);
  CHECK(radius_spherical(Field::make(3, 2), 3).size == 397);
  CHECK(theorem1_bound(5, 4).ceiling() == 300);
  auto res = radius_spherical(Field::make(5), 4);
  CHECK(res.predicted_main_terms ==
        std::vector<Rational>{Rational(625, 2), Rational(125, 2), Rational(-25)});
  CHECK(code_of([] { radius_spherical(Field::make(5), 1); }) ==
        ErrorCode::BadDimension);
}

TEST_CASE("center construction contains every axis sphere") {
  for (auto [p, k] : kFields) {
    Field f = Field::make(p, k);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto res = center_spherical(f, n);
      Space s = res.space();
      const Elem r = f.smallest_nonsquare();
      CHECK(std::get<CenterAccounting>(res.accounting).nonsquare == r);
      CHECK(res.witness.entries.size() == f.q());
      for (std::uint64_t a = 0; a < f.q(); ++a) {
        VectorFq c = VectorFq::zeros(n);
        c[0] = Elem{a};
        CHECK(sphere_points(s, {c, r}).is_subset_of(res.points));
      }
      CHECK(verify_center_kakeya(res.points, res.witness));
      // membership rule checked point by point
      Space tail(f, n - 1);
      for (std::uint64_t rank = 0; rank < s.size(); ++rank) {
        VectorFq x = s.unrank(rank);
        VectorFq y(std::vector<Elem>(x.coords.begin() + 1, x.coords.end()));
        CHECK(res.points.contains(rank) == f.is_square(f.sub(r, tail.norm(y))));
      }
    }
  }
  CHECK(code_of([] { center_spherical(Field::make(5), 3, Elem{4}); }) ==
        ErrorCode::NotANonsquare);
  CHECK(code_of([] { center_spherical(Field::make(5), 3, Elem{0}); }) ==
        ErrorCode::NotANonsquare);
  CHECK(center_spherical(Field::make(5), 3, Elem{3}).size > 0);
}

TEST_CASE("center construction main terms and deviation") {
  auto res = center_spherical(Field::make(5), 5);
  CHECK(res.predicted_main_terms ==
        std::vector<Rational>{Rational(3125, 2), Rational(625, 2)});
  const auto& acc = std::get<CenterAccounting>(res.accounting);
  CHECK(Rational(static_cast<std::int64_t>(res.size)) ==
        Rational(1875) + acc.deviation);
  CHECK(acc.deviation_scaled == Rational(acc.deviation.num(), acc.deviation.den() * 125));
  CHECK(center_spherical(Field::make(5), 3).predicted_main_terms ==
        std::vector<Rational>{Rational(125, 2)});
}

TEST_CASE("hypersphere union lies on the null quadric") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}}) {
    Field f = Field::make(p, k);
    for (std::size_t n = 3; n <= 4; ++n) {
      auto res = hypersphere_union(f, n);
      const auto& acc = std::get<HypersphereAccounting>(res.accounting);
      Space s = res.space();
      for (auto r : ranks_of(res)) CHECK(s.norm(s.unrank(r)).is_zero());
      CHECK(acc.on_null_quadric);
      CHECK(res.size <= acc.null_quadric_bound);
      CHECK(acc.objects_used + acc.isotropic_skipped == s.size() - 1);
      CHECK(res.witness.entries.size() == f.q() - 1);
      CHECK(check_witness(res.points, res.witness));
    }
  }
  CHECK(hypersphere_union(Field::make(3), 3).size <= 9 + 3 - 1);
  CHECK(code_of([] { hypersphere_union(Field::make(3), 2); }) ==
        ErrorCode::BadDimension);
}

TEST_CASE("circular prime construction") {
  auto elems = [](const ConstructionResult& r) {
    std::vector<std::uint64_t> out;
    for (Elem e : std::get<CircularAccounting>(r.accounting).elements)
      out.push_back(e.rank);
    return out;
  };
  std::vector<std::uint64_t> expected{0, 1, 2, 4};
  CHECK(elems(circular_prime(5, CircularKind::Radius)) == expected);
  CHECK(elems(circular_prime(7, CircularKind::Radius)) == expected);
  CHECK(elems(circular_prime(5, CircularKind::Center)) ==
        std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(prime_seed(3, CircularKind::Radius) == std::vector<std::uint64_t>{0, 1});
  CHECK(prime_seed(3, CircularKind::Center) == std::vector<std::uint64_t>{0, 1, 2});
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    Field f = Field::make(p);
    for (auto kind : {CircularKind::Radius, CircularKind::Center}) {
      auto res = circular_prime(f, kind);
      auto e = std::get<CircularAccounting>(res.accounting).elements;
      CHECK(circular_cover(f, e, kind));
      CHECK(res.size <= 2 * isqrt_floor(p) + 1);
      CHECK(res.points.space().dim() == 1);
      CHECK(check_witness(res.points, res.witness));
    }
  }
  CHECK(code_of([] { circular_prime(Field::make(3, 2), CircularKind::Radius); }) ==
        ErrorCode::WrongDegree);
}

TEST_CASE("circular square construction") {
  for (auto [p, k, size] : {std::tuple<std::uint64_t, unsigned, std::uint64_t>{3, 2, 5},
                            {5, 2, 9}, {7, 2, 13}, {3, 4, 17}}) {
    Field f = Field::make(p, k);
    for (auto kind : {CircularKind::Radius, CircularKind::Center}) {
      auto res = circular_square(f, kind);
      CHECK(res.size == size);
      CHECK(circular_cover(f, std::get<CircularAccounting>(res.accounting).elements,
                           kind));
    }
  }
  CHECK(circular_square(Field::make(3, 2), CircularKind::Radius).points.ranks() ==
        std::vector<std::uint64_t>{0, 1, 2, 3, 6});
  CHECK(code_of([] { circular_square(Field::make(3, 3), CircularKind::Radius); }) ==
        ErrorCode::NotASquareField);
  CHECK(code_of([] { circular_square(Field::make(5), CircularKind::Radius); }) ==
        ErrorCode::NotASquareField);
}

TEST_CASE("circular odd power construction") {
  auto r27 = circular_odd_power(Field::make(3, 3), CircularKind::Radius);
  auto c27 = circular_odd_power(Field::make(3, 3), CircularKind::Center);
  CHECK(r27.size == 10);
  CHECK(c27.size == 15);
  for (auto kind : {CircularKind::Radius, CircularKind::Center}) {
    Field f = Field::make(5, 3);
    auto res = circular_odd_power(f, kind);
    const auto& acc = std::get<CircularAccounting>(res.accounting);
    CHECK(res.size == 9 * acc.seed_size);
    CHECK(circular_cover(f, acc.elements, kind));
    // |K| < 4 sqrt q + 2 sqrt(q/p)
    const double bound = 4 * std::sqrt(125.0) + 2 * std::sqrt(25.0);
    CHECK(static_cast<double>(res.size) < bound);
  }
  CHECK(code_of([] { circular_odd_power(Field::make(3, 2), CircularKind::Radius); }) ==
        ErrorCode::WrongDegree);
  CHECK(code_of([] { circular_odd_power(Field::make(3), CircularKind::Radius); }) ==
        ErrorCode::WrongDegree);
}

TEST_CASE("circular witness lists each parameter once") {
  Field f = Field::make(7);
  std::vector<Elem> k{Elem{0}, Elem{1}, Elem{2}, Elem{4}};
  auto w = circular_witness(f, k, CircularKind::Radius);
  CHECK(w.entries.size() == 6);
  std::set<std::uint64_t> keys;
  for (const auto& e : w.entries) keys.insert(e.key.rank);
  CHECK(keys.size() == 6);
  auto partial = circular_witness(f, std::vector<Elem>{Elem{0}, Elem{1}},
                                  CircularKind::Radius);
  CHECK(partial.entries.size() < 6);
}
