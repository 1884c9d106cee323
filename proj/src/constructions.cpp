#include "kakeya/constructions.hpp"

#include <algorithm>
#include <map>

#include "kakeya/error.hpp"

namespace kakeya {

const char* to_string(CircularKind kind) noexcept {
  return kind == CircularKind::Radius ? "radius" : "center";
}

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::Radius: return "radius";
    case WitnessKind::CenterCoordinate: return "center-coordinate";
    case WitnessKind::Hypersphere: return "hypersphere";
    case WitnessKind::CircularRadius: return "circular-radius";
    case WitnessKind::CircularCenter: return "circular-center";
  }
  return "unknown";
}

namespace {

Rational half_power(std::uint64_t q, unsigned e) {
  return Rational(static_cast<std::int64_t>(checked_pow(q, e)), 2);
}

Rational power(std::uint64_t q, unsigned e) {
  return Rational(static_cast<std::int64_t>(checked_pow(q, e)));
}

Space spherical_space(const Field& field, std::size_t n, std::size_t min_n) {
  if (n < min_n)
    throw Error(ErrorCode::BadDimension,
                "construction needs n >= " + std::to_string(min_n));
  return Space(field, n);
}

VectorFq axis_point(std::size_t n, Elem first) {
  VectorFq v = VectorFq::zeros(n);
  v[0] = first;
  return v;
}

ConstructionResult circular_result(const Field& field, std::string name,
                                   CircularKind kind,
                                   std::vector<Elem> elements,
                                   std::uint64_t seed_size,
                                   Rational predicted) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  Space line(field, 1);
  PointSet points(line);
  for (Elem e : elements) points.insert(e.rank);
  ConstructionResult out{std::move(name), to_string(kind), std::move(points),
                         circular_witness(field, elements, kind),
                         0, {predicted}, {}};
  out.size = out.points.size();
  out.accounting = CircularAccounting{kind, std::move(elements), seed_size};
  return out;
}

}  // namespace

ConstructionResult radius_spherical(const Field& field, std::size_t n) {
  Space space = spherical_space(field, n, 2);
  const std::uint64_t q = field.q();
  const auto dim = static_cast<unsigned>(n);

  ConstructionResult out{"radius-spherical", "", PointSet(space),
                         KakeyaWitness{WitnessKind::Radius, {}}, 0, {}, {}};
  RadiusAccounting acc;
  std::vector<PointSet> spheres;
  // layers[i] holds the points lying on more than i of the spheres so far
  std::vector<PointSet> layers;
  for (std::uint64_t r = 1; r < q; ++r) {
    SphereSpec spec{axis_point(n, Elem{r}), Elem{r}};
    PointSet s = sphere_points(space, spec);
    acc.sum_sphere_sizes += s.size();
    for (const PointSet& prev : spheres)
      acc.sum_pairwise_intersections += 2 * s.intersection_size(prev);
    for (std::size_t i = layers.size(); i-- > 0;) {
      PointSet lifted = layers[i] & s;
      if (lifted.empty()) continue;
      if (i + 1 == layers.size()) layers.emplace_back(space);
      layers[i + 1] |= lifted;
    }
    if (layers.empty()) layers.emplace_back(space);
    layers[0] |= s;
    out.witness.entries.push_back({Elem{r}, spec});
    spheres.push_back(std::move(s));
  }
  for (const PointSet& layer : layers) out.points |= layer;
  out.size = out.points.size();
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  acc.max_multiplicity = layers.size();
  acc.triple_intersections_empty = layers.size() <= 2;
  acc.inclusion_exclusion_holds =
      out.size + acc.sum_pairwise_intersections / 2 == acc.sum_sphere_sizes;
  out.predicted_main_terms = {half_power(q, dim), half_power(q, dim - 1),
                              -power(q, dim - 2)};
  out.accounting = acc;
  return out;
}

ConstructionResult center_spherical(const Field& field, std::size_t n) {
  return center_spherical(field, n, field.smallest_nonsquare());
}

ConstructionResult center_spherical(const Field& field, std::size_t n,
                                    Elem nonsquare) {
  Space space = spherical_space(field, n, 2);
  if (nonsquare.rank >= field.q() ||
      field.quadratic_character(nonsquare) != QuadChar::Nonsquare)
    throw Error(ErrorCode::NotANonsquare,
                "r = " + std::to_string(nonsquare.rank) +
                    " is not a nonsquare");
  const std::uint64_t q = field.q();
  const auto dim = static_cast<unsigned>(n);

  ConstructionResult out{"center-spherical", "", PointSet(space),
                         KakeyaWitness{WitnessKind::CenterCoordinate, {}}, 0,
                         {}, {}};
  // point rank = x + q * rank(y)
  Space tail(field, n - 1);
  VectorFq y = VectorFq::zeros(n - 1);
  std::uint64_t y_rank = 0;
  do {
    if (field.is_square(field.sub(nonsquare, tail.norm(y)))) {
      for (std::uint64_t x = 0; x < q; ++x) out.points.insert(x + q * y_rank);
    }
    ++y_rank;
  } while (tail.next(y));
  out.size = out.points.size();

  for (std::uint64_t a = 0; a < q; ++a)
    out.witness.entries.push_back(
        {Elem{a}, SphereSpec{axis_point(n, Elem{a}), nonsquare}});

  if (n >= 5)
    out.predicted_main_terms = {half_power(q, dim), half_power(q, dim - 1)};
  else
    out.predicted_main_terms = {half_power(q, dim)};
  Rational main;
  for (const Rational& t : out.predicted_main_terms) main = main + t;
  CenterAccounting acc;
  acc.nonsquare = nonsquare;
  acc.deviation = Rational(static_cast<std::int64_t>(out.size)) - main;
  acc.deviation_scaled =
      Rational(acc.deviation.num(),
               acc.deviation.den() *
                   static_cast<std::int64_t>(checked_pow(q, dim - 2)));
  out.accounting = acc;
  return out;
}

ConstructionResult hypersphere_union(const Field& field, std::size_t n) {
  Space space = spherical_space(field, n, 3);
  const std::uint64_t q = field.q();
  const auto dim = static_cast<unsigned>(n);

  ConstructionResult out{"hypersphere-union", "", PointSet(space),
                         KakeyaWitness{WitnessKind::Hypersphere, {}}, 0, {},
                         {}};
  HypersphereAccounting acc;
  std::map<std::uint64_t, HypersphereSpec> first_by_radius;
  VectorFq a = VectorFq::zeros(n);
  while (space.next(a)) {
    Elem radius = field.neg(space.norm(a));
    if (radius.is_zero()) {
      ++acc.isotropic_skipped;
      continue;
    }
    HypersphereSpec h{a, a, radius};
    out.points |= hypersphere_points(space, h);
    ++acc.objects_used;
    first_by_radius.try_emplace(radius.rank, std::move(h));
  }
  for (auto& [r, h] : first_by_radius)
    out.witness.entries.push_back({Elem{r}, h});
  out.size = out.points.size();

  acc.on_null_quadric = true;
  for (std::uint64_t r : out.points.ranks()) {
    if (!space.norm(space.unrank(r)).is_zero()) {
      acc.on_null_quadric = false;
      break;
    }
  }
  acc.null_quadric_bound = checked_pow(q, dim - 1) + checked_pow(q, dim / 2) -
                           checked_pow(q, (dim - 1) / 2);
  out.predicted_main_terms = {power(q, dim - 1)};
  out.accounting = acc;
  return out;
}

std::vector<std::uint64_t> prime_seed(std::uint64_t p, CircularKind kind) {
  const std::uint64_t s = isqrt_floor(p);
  const std::uint64_t c = isqrt_ceil(p);
  std::vector<std::uint64_t> seed;
  for (std::uint64_t i = 0; i <= s; ++i) seed.push_back(i % p);
  for (std::uint64_t j = 1; j <= s; ++j) {
    std::uint64_t v = mulmod(j, c, p);
    if (kind == CircularKind::Radius && v != 0) v = p - v;
    seed.push_back(v);
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return seed;
}

ConstructionResult circular_prime(std::uint64_t p, CircularKind kind) {
  return circular_prime(Field::make(p, 1), kind);
}

ConstructionResult circular_prime(const Field& field, CircularKind kind) {
  if (field.k() != 1)
    throw Error(ErrorCode::WrongDegree,
                "circular-prime needs a prime field (k = 1)");
  const std::uint64_t p = field.p();
  std::vector<Elem> elements;
  for (std::uint64_t v : prime_seed(p, kind)) elements.push_back(Elem{v});
  Rational predicted(
      static_cast<std::int64_t>(2 * isqrt_floor(p) + 1));
  return circular_result(field, "circular-prime", kind, std::move(elements), 0,
                         predicted);
}

ConstructionResult circular_square(const Field& field, CircularKind kind) {
  if (field.k() % 2 != 0)
    throw Error(ErrorCode::NotASquareField,
                "q = " + std::to_string(field.q()) + " is not a square");
  const std::uint64_t r = checked_pow(field.p(), field.k() / 2);
  const Elem alpha = field.generator();
  std::vector<Elem> elements;
  for (std::uint64_t x = 0; x < field.q(); ++x) {
    Elem e{x};
    if (field.pow(e, r) == e) {
      elements.push_back(e);
      elements.push_back(field.mul(alpha, e));
    }
  }
  Rational predicted(static_cast<std::int64_t>(2 * r - 1));
  return circular_result(field, "circular-square", kind, std::move(elements),
                         0, predicted);
}

ConstructionResult circular_odd_power(const Field& field, CircularKind kind) {
  const unsigned k = field.k();
  if (k % 2 == 0 || k < 3)
    throw Error(ErrorCode::WrongDegree,
                "circular-odd-power needs q = p^(2m+1) with m >= 1");
  const unsigned m = (k - 1) / 2;
  const std::uint64_t p = field.p();
  const Elem beta = field.generator();
  const std::vector<std::uint64_t> seed = prime_seed(p, kind);

  std::vector<Elem> elements;
  // blocks: beta^1..beta^m, then beta^{m+1}..beta^{2m}
  for (unsigned offset : {1u, m + 1}) {
    std::vector<Elem> basis;
    for (unsigned i = 0; i < m; ++i) basis.push_back(field.pow(beta, offset + i));
    std::vector<std::uint64_t> digits(m, 0);
    for (;;) {
      Elem tail;
      for (unsigned i = 0; i < m; ++i)
        tail = field.add(tail, field.mul(field.from_int(
                                             static_cast<std::int64_t>(digits[i])),
                                         basis[i]));
      for (std::uint64_t a0 : seed) elements.push_back(field.add(Elem{a0}, tail));
      unsigned i = 0;
      while (i < m && ++digits[i] == p) digits[i++] = 0;
      if (i == m) break;
    }
  }
  Rational predicted(static_cast<std::int64_t>(
      (2 * checked_pow(p, m) - 1) * seed.size()));
  return circular_result(field, "circular-odd-power", kind,
                         std::move(elements), seed.size(), predicted);
}

KakeyaWitness circular_witness(const Field& field, std::span<const Elem> set,
                               CircularKind kind) {
  const Elem half = field.inv(field.from_int(2));
  std::map<std::uint64_t, Circle> found;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      const Elem x1 = set[i], x2 = set[j];
      Circle c{field.mul(half, field.add(x1, x2)),
               field.mul(half, field.sub(x1, x2))};
      const Elem key = kind == CircularKind::Radius ? c.radius : c.center;
      found.try_emplace(key.rank, c);
    }
  }
  KakeyaWitness w{kind == CircularKind::Radius ? WitnessKind::CircularRadius
                                               : WitnessKind::CircularCenter,
                  {}};
  for (auto& [key, c] : found) w.entries.push_back({Elem{key}, c});
  return w;
}

}  // namespace kakeya
