#include "kakeya/geometry.hpp"

#include <bit>
#include <string>

#include "kakeya/error.hpp"
#include "kakeya/numeric.hpp"

namespace kakeya {

bool VectorFq::is_zero() const noexcept {
  for (Elem c : coords)
    if (!c.is_zero()) return false;
  return true;
}

Space::Space(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "dimension must be >= 1");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size = checked_mul(size, field_.q());
    if (size > kMaxPoints)
      throw Error(ErrorCode::Overflow,
                  "q^n exceeds the dense point-set cap of 2^40 points");
  }
  size_ = size;
}

std::uint64_t Space::rank(const VectorFq& x) const noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = n_; i-- > 0;) r = r * field_.q() + x.coords[i].rank;
  return r;
}

VectorFq Space::unrank(std::uint64_t r) const {
  if (r >= size_)
    throw Error(ErrorCode::InvalidArgument,
                "point rank " + std::to_string(r) + " out of range");
  VectorFq x = VectorFq::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    x.coords[i] = Elem{r % field_.q()};
    r /= field_.q();
  }
  return x;
}

bool Space::next(VectorFq& x) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (++x.coords[i].rank < field_.q()) return true;
    x.coords[i].rank = 0;
  }
  return false;
}

VectorFq Space::add(const VectorFq& x, const VectorFq& y) const {
  VectorFq r = VectorFq::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.add(x[i], y[i]);
  return r;
}

VectorFq Space::sub(const VectorFq& x, const VectorFq& y) const {
  VectorFq r = VectorFq::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.sub(x[i], y[i]);
  return r;
}

VectorFq Space::scale(Elem c, const VectorFq& x) const {
  VectorFq r = VectorFq::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.mul(c, x[i]);
  return r;
}

Elem Space::dot(const VectorFq& x, const VectorFq& y) const {
  Elem acc;
  for (std::size_t i = 0; i < n_; ++i)
    acc = field_.add(acc, field_.mul(x[i], y[i]));
  return acc;
}

Elem Space::norm(const VectorFq& x) const { return dot(x, x); }

// PointSet

PointSet::PointSet(Space space)
    : space_(std::move(space)), bits_((space_.size() + 63) / 64, 0) {}

PointSet PointSet::full(Space space) {
  PointSet s(std::move(space));
  for (auto& w : s.bits_) w = ~std::uint64_t{0};
  if (std::uint64_t tail = s.space_.size() % 64)
    s.bits_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

PointSet PointSet::from_ranks(Space space,
                              std::span<const std::uint64_t> ranks) {
  PointSet s(std::move(space));
  for (std::uint64_t r : ranks) {
    if (r >= s.space_.size())
      throw Error(ErrorCode::InvalidArgument,
                  "point rank " + std::to_string(r) + " out of range");
    s.insert(r);
  }
  return s;
}

std::uint64_t PointSet::size() const noexcept {
  std::uint64_t c = 0;
  for (auto w : bits_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

void PointSet::require_same_space(const PointSet& other) const {
  if (!(space_ == other.space_))
    throw Error(ErrorCode::InvalidArgument,
                "point sets live in different spaces");
}

PointSet& PointSet::operator|=(const PointSet& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

std::uint64_t PointSet::intersection_size(const PointSet& other) const {
  require_same_space(other);
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    c += static_cast<std::uint64_t>(std::popcount(bits_[i] & other.bits_[i]));
  return c;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_space(other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

std::vector<std::uint64_t> PointSet::ranks() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

// Diagonal equations

namespace {

void require_nonzero(std::span<const Elem> coeffs) {
  if (coeffs.empty())
    throw Error(ErrorCode::BadDimension, "diagonal equation needs n >= 1");
  for (Elem a : coeffs)
    if (a.is_zero())
      throw Error(ErrorCode::ZeroCoefficient,
                  "diagonal equation coefficients must be nonzero");
}

int chi_value(const Field& f, Elem x) {
  return static_cast<int>(f.quadratic_character(x));
}

}  // namespace

std::vector<std::uint64_t> diagonal_value_counts(const Field& field,
                                                 std::span<const Elem> coeffs) {
  require_nonzero(coeffs);
  Space space(field, coeffs.size());
  std::vector<std::uint64_t> counts(field.q(), 0);
  VectorFq x = VectorFq::zeros(coeffs.size());
  do {
    Elem value;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      value = field.add(value, field.mul(coeffs[i], field.square(x[i])));
    ++counts[value.rank];
  } while (space.next(x));
  return counts;
}

std::uint64_t diagonal_count_bruteforce(const Field& field,
                                        const DiagonalEq& eq) {
  return diagonal_value_counts(field, eq.coeffs)[eq.rhs.rank];
}

std::uint64_t diagonal_count_closed(const Field& field, const DiagonalEq& eq) {
  require_nonzero(eq.coeffs);
  const unsigned n = static_cast<unsigned>(eq.coeffs.size());
  const std::uint64_t q = field.q();
  Elem disc = field.one();
  for (Elem a : eq.coeffs) disc = field.mul(disc, a);
  const Elem minus_one = field.neg(field.one());

  const auto main = static_cast<std::int64_t>(checked_pow(q, n - 1));
  std::int64_t correction = 0;
  if (n % 2 == 0) {
    const unsigned h = n / 2;
    Elem arg = h % 2 == 0 ? disc : field.mul(minus_one, disc);
    const auto v = eq.rhs.is_zero() ? static_cast<std::int64_t>(q - 1)
                                    : std::int64_t{-1};
    correction = v * static_cast<std::int64_t>(checked_pow(q, h - 1)) *
                 chi_value(field, arg);
  } else if (!eq.rhs.is_zero()) {
    const unsigned h = (n - 1) / 2;
    Elem arg = field.mul(eq.rhs, disc);
    if (h % 2 == 1) arg = field.mul(minus_one, arg);
    correction = static_cast<std::int64_t>(checked_pow(q, h)) *
                 chi_value(field, arg);
  }
  return static_cast<std::uint64_t>(main + correction);
}

std::uint64_t diagonal_deviation(std::uint64_t q, unsigned n, bool rhs_zero) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "n must be >= 1");
  if (!rhs_zero) return checked_pow(q, (n - 1) / 2);
  // ceil((n-2)/2) == floor((n-1)/2) for every n >= 1
  return checked_pow(q, n / 2) - checked_pow(q, (n - 1) / 2);
}

// Spheres

void validate(const Space& space, const SphereSpec& s) {
  if (space.dim() < 2)
    throw Error(ErrorCode::BadDimension, "spheres need n >= 2");
  if (s.center.dim() != space.dim())
    throw Error(ErrorCode::InvalidArgument, "center has wrong dimension");
  if (s.radius.is_zero())
    throw Error(ErrorCode::ZeroRadius, "sphere radius must be nonzero");
}

void validate(const Space& space, const HypersphereSpec& h) {
  validate(space, SphereSpec{h.center, h.radius});
  if (h.direction.dim() != space.dim())
    throw Error(ErrorCode::InvalidArgument, "direction has wrong dimension");
  if (h.direction.is_zero())
    throw Error(ErrorCode::ZeroDirection,
                "hyper-sphere direction must be nonzero");
}

PointSet sphere_points(const Space& space, const SphereSpec& s) {
  validate(space, s);
  PointSet out(space);
  VectorFq x = VectorFq::zeros(space.dim());
  do {
    if (space.norm(space.sub(x, s.center)) == s.radius) out.insert(x);
  } while (space.next(x));
  return out;
}

PointSet hypersphere_points(const Space& space, const HypersphereSpec& h) {
  validate(space, h);
  PointSet out(space);
  VectorFq x = VectorFq::zeros(space.dim());
  do {
    VectorFq y = space.sub(x, h.center);
    if (space.dot(h.direction, y).is_zero() && space.norm(y) == h.radius)
      out.insert(x);
  } while (space.next(x));
  return out;
}

std::uint64_t sphere_intersection_size(const Space& space, const SphereSpec& s1,
                                       const SphereSpec& s2) {
  if (s1 == s2)
    throw Error(ErrorCode::IdenticalSpheres,
                "intersection of a sphere with itself");
  return sphere_points(space, s1).intersection_size(sphere_points(space, s2));
}

std::uint64_t sphere_intersection_bound(std::uint64_t q, unsigned n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "spheres need n >= 2");
  return checked_add(checked_pow(q, n - 2), checked_pow(q, (n - 1) / 2));
}

bool sum_two_squares_covers(const Field& field) {
  const std::uint64_t q = field.q();
  std::vector<bool> hit(q, false);
  std::vector<Elem> squares;
  {
    std::vector<bool> seen(q, false);
    for (std::uint64_t u = 0; u < q; ++u) {
      Elem s = field.square(Elem{u});
      if (!seen[s.rank]) {
        seen[s.rank] = true;
        squares.push_back(s);
      }
    }
  }
  for (Elem a : squares)
    for (Elem b : squares) hit[field.add(a, b).rank] = true;
  for (std::uint64_t r = 1; r < q; ++r)
    if (!hit[r]) return false;
  return true;
}

VectorFq canonical_direction(const Field& field, const VectorFq& d) {
  for (Elem c : d.coords) {
    if (!c.is_zero()) {
      Elem s = field.inv(c);
      VectorFq out = d;
      for (auto& x : out.coords) x = field.mul(s, x);
      return out;
    }
  }
  throw Error(ErrorCode::ZeroDirection, "direction must be nonzero");
}

}  // namespace kakeya
