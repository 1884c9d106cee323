#include "kakeya/field.hpp"

#include <algorithm>
#include <string>

#include "kakeya/error.hpp"
#include "kakeya/numeric.hpp"

namespace kakeya {

namespace {

constexpr std::uint64_t kTableLimit = 1024;

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : p - (b - a);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

// a mod f, f monic.
Poly poly_rem(Poly a, std::span<const std::uint64_t> f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = sub_mod(a[shift + i], mulmod(lead, f[i], p), p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, std::span<const std::uint64_t> f,
                 std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = add_mod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, std::span<const std::uint64_t> f,
                 std::uint64_t p) {
  Poly r{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_rem applies
    std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = mulmod(c, lead_inv, p);
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod f by i successive p-th powers.
Poly frobenius_x(unsigned i, std::span<const std::uint64_t> f,
                 std::uint64_t p) {
  Poly h = poly_rem(Poly{0, 1}, f, p);
  for (unsigned step = 0; step < i; ++step) h = poly_powmod(h, p, f, p);
  return h;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

namespace poly {

bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const unsigned k = static_cast<unsigned>(monic.size() - 1);
  if (k == 1) return true;
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/d)) - x, f) = 1 for every
  // prime d | k.
  Poly x = poly_rem(Poly{0, 1}, monic, p);
  if (frobenius_x(k, monic, p) != x) return false;
  for (unsigned d : prime_divisors(k)) {
    Poly h = frobenius_x(k / d, monic, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = sub_mod(h[1], 1, p);
    Poly g = poly_gcd(Poly(monic.begin(), monic.end()), h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  // Walk coefficient vectors (c_0, ..., c_{k-1}) in lexicographic order:
  // an odometer whose most significant digit is c_0.
  Poly f(k + 1, 0);
  f[k] = 1;
  for (;;) {
    if (is_irreducible(f, p)) return f;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && f[i] == p - 1) {
      f[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++f[i];
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace poly

struct Field::Impl {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  Poly modulus;
  Elem nonsquare;

  bool tabulated = false;
  std::vector<std::uint32_t> add_table, mul_table, neg_table, inv_table;
  std::vector<std::int8_t> chi_table;

  Poly decode(std::uint64_t r) const {
    Poly d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = r % p;
      r /= p;
    }
    return d;
  }

  std::uint64_t encode(const Poly& d) const {
    std::uint64_t r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
    return r;
  }

  std::uint64_t add_slow(std::uint64_t x, std::uint64_t y) const {
    if (k == 1) return add_mod(x, y, p);
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      r += add_mod(x % p, y % p, p) * scale;
      x /= p;
      y /= p;
      if (i + 1 < k) scale *= p;
    }
    return r;
  }

  std::uint64_t neg_slow(std::uint64_t x) const {
    if (k == 1) return x == 0 ? 0 : p - x;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t d = x % p;
      r += (d == 0 ? 0 : p - d) * scale;
      x /= p;
      if (i + 1 < k) scale *= p;
    }
    return r;
  }

  std::uint64_t mul_slow(std::uint64_t x, std::uint64_t y) const {
    if (k == 1) return mulmod(x, y, p);
    Poly a = decode(x), b = decode(y);
    trim(a);
    trim(b);
    Poly r = poly_mulmod(a, b, modulus, p);
    r.resize(k, 0);
    return encode(r);
  }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    return tabulated ? add_table[x * q + y] : add_slow(x, y);
  }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return tabulated ? mul_table[x * q + y] : mul_slow(x, y);
  }

  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int chi_slow(std::uint64_t x) const {
    if (x == 0) return 0;
    return pow(x, (q - 1) / 2) == 1 ? 1 : -1;
  }

  void build_tables() {
    add_table.resize(q * q);
    mul_table.resize(q * q);
    neg_table.resize(q);
    inv_table.resize(q);
    chi_table.resize(q);
    for (std::uint64_t x = 0; x < q; ++x) {
      neg_table[x] = static_cast<std::uint32_t>(neg_slow(x));
      for (std::uint64_t y = 0; y < q; ++y) {
        add_table[x * q + y] = static_cast<std::uint32_t>(add_slow(x, y));
        mul_table[x * q + y] = static_cast<std::uint32_t>(mul_slow(x, y));
      }
    }
    tabulated = true;
    for (std::uint64_t x = 1; x < q; ++x) {
      for (std::uint64_t y = 1; y < q; ++y) {
        if (mul_table[x * q + y] == 1) {
          inv_table[x] = static_cast<std::uint32_t>(y);
          break;
        }
      }
    }
    for (std::uint64_t x = 0; x < q; ++x)
      chi_table[x] = static_cast<std::int8_t>(chi_slow(x));
  }
};

Field Field::make(std::uint64_t p, unsigned k) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorCode::NonOddPrime,
                "p = " + std::to_string(p) + " is not an odd prime");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "degree k must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = checked_pow(p, k);
  if (k > 1) impl->modulus = poly::smallest_irreducible(p, k);
  if (impl->q <= kTableLimit) impl->build_tables();
  for (std::uint64_t r = 1; r < impl->q; ++r) {
    int c = impl->tabulated ? impl->chi_table[r] : impl->chi_slow(r);
    if (c < 0) {
      impl->nonsquare = Elem{r};
      break;
    }
  }
  return Field(std::move(impl));
}

std::uint64_t Field::p() const noexcept { return impl_->p; }
unsigned Field::k() const noexcept { return impl_->k; }
std::uint64_t Field::q() const noexcept { return impl_->q; }

std::span<const std::uint64_t> Field::modulus() const noexcept {
  return impl_->modulus;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::uint64_t p = impl_->p;
  if (v >= 0) return Elem{static_cast<std::uint64_t>(v) % p};
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
  return Elem{m == 0 ? 0 : p - m};
}

Elem Field::element(std::uint64_t rank) const {
  if (rank >= impl_->q)
    throw Error(ErrorCode::InvalidArgument,
                "rank " + std::to_string(rank) + " out of range for q = " +
                    std::to_string(impl_->q));
  return Elem{rank};
}

Elem Field::generator() const {
  if (impl_->k < 2)
    throw Error(ErrorCode::WrongDegree, "prime field has no generator t");
  return Elem{impl_->p};
}

Elem Field::add(Elem x, Elem y) const noexcept {
  return Elem{impl_->add(x.rank, y.rank)};
}

Elem Field::neg(Elem x) const noexcept {
  return Elem{impl_->tabulated ? impl_->neg_table[x.rank]
                               : impl_->neg_slow(x.rank)};
}

Elem Field::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const noexcept {
  return Elem{impl_->mul(x.rank, y.rank)};
}

Elem Field::inv(Elem x) const {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (impl_->tabulated) return Elem{impl_->inv_table[x.rank]};
  return Elem{impl_->pow(x.rank, impl_->q - 2)};
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
  return Elem{impl_->pow(x.rank, e)};
}

QuadChar Field::quadratic_character(Elem x) const noexcept {
  int c = impl_->tabulated ? impl_->chi_table[x.rank] : impl_->chi_slow(x.rank);
  return static_cast<QuadChar>(c);
}

Elem Field::smallest_nonsquare() const noexcept { return impl_->nonsquare; }

std::vector<std::uint64_t> Field::digits(Elem x) const {
  return impl_->decode(x.rank);
}

}  // namespace kakeya
