#include "kakeya/kakeya.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "kakeya/constructions.hpp"
#include "kakeya/error.hpp"
#include "kakeya/search.hpp"
#include "kakeya/serialize.hpp"
#include "kakeya/verification.hpp"

struct kk_field {
  kakeya::Field field;
};

struct kk_pointset {
  kakeya::PointSet set;
};

struct kk_construction {
  kakeya::ConstructionResult result;
  kakeya::Assessment assessment;
};

namespace {

using namespace kakeya;

thread_local std::string last_error;

kk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOddPrime: return KK_ERR_NON_ODD_PRIME;
    case ErrorCode::Overflow: return KK_ERR_OVERFLOW;
    case ErrorCode::DivisionByZero: return KK_ERR_DIVISION_BY_ZERO;
    case ErrorCode::ZeroCoefficient: return KK_ERR_ZERO_COEFFICIENT;
    case ErrorCode::ZeroRadius: return KK_ERR_ZERO_RADIUS;
    case ErrorCode::ZeroDirection: return KK_ERR_ZERO_DIRECTION;
    case ErrorCode::IdenticalSpheres: return KK_ERR_IDENTICAL_SPHERES;
    case ErrorCode::NotANonsquare: return KK_ERR_NOT_A_NONSQUARE;
    case ErrorCode::NotASquareField: return KK_ERR_NOT_A_SQUARE_FIELD;
    case ErrorCode::WrongDegree: return KK_ERR_WRONG_DEGREE;
    case ErrorCode::BadDimension: return KK_ERR_BAD_DIMENSION;
    case ErrorCode::BudgetExceeded: return KK_ERR_BUDGET_EXCEEDED;
    case ErrorCode::InvalidArgument: return KK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return KK_ERR_PARSE;
  }
  return KK_ERR_INTERNAL;
}

template <class Fn>
kk_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return KK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KK_ERR_OVERFLOW;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return KK_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const nlohmann::json& doc, char** out) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(doc.dump());
}

Elem checked_elem(const kk_field* f, std::uint64_t rank) {
  require(f != nullptr, "null field");
  return f->field.element(rank);
}

CircularKind circular_kind(kk_variant v) {
  return v == KK_VARIANT_CENTER ? CircularKind::Center : CircularKind::Radius;
}

VerifyMode verify_mode(kk_verify_mode m) {
  switch (m) {
    case KK_VERIFY_EXHAUSTIVE: return VerifyMode::Exhaustive;
    case KK_VERIFY_BOTH: return VerifyMode::Both;
    default: return VerifyMode::Witness;
  }
}

}  // namespace

extern "C" {

const char* kk_status_name(kk_status status) {
  switch (status) {
    case KK_OK: return "OK";
    case KK_ERR_NON_ODD_PRIME: return "NonOddPrime";
    case KK_ERR_OVERFLOW: return "Overflow";
    case KK_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case KK_ERR_ZERO_COEFFICIENT: return "ZeroCoefficient";
    case KK_ERR_ZERO_RADIUS: return "ZeroRadius";
    case KK_ERR_ZERO_DIRECTION: return "ZeroDirection";
    case KK_ERR_IDENTICAL_SPHERES: return "IdenticalSpheres";
    case KK_ERR_NOT_A_NONSQUARE: return "NotANonsquare";
    case KK_ERR_NOT_A_SQUARE_FIELD: return "NotASquareField";
    case KK_ERR_WRONG_DEGREE: return "WrongDegree";
    case KK_ERR_BAD_DIMENSION: return "BadDimension";
    case KK_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case KK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KK_ERR_PARSE: return "Parse";
    case KK_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* kk_last_error(void) { return last_error.c_str(); }

void kk_string_free(char* str) { std::free(str); }

kk_status kk_field_create(uint64_t p, unsigned k, kk_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new kk_field{Field::make(p, k)};
  });
}

kk_status kk_field_from_order(uint64_t q, kk_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    std::uint64_t p = 0;
    unsigned k = 0;
    if (!prime_power(q, p, k))
      throw Error(ErrorCode::NonOddPrime,
                  "q = " + std::to_string(q) + " is not a prime power");
    *out = new kk_field{Field::make(p, k)};
  });
}

void kk_field_destroy(kk_field* field) { delete field; }
uint64_t kk_field_p(const kk_field* field) { return field ? field->field.p() : 0; }
unsigned kk_field_k(const kk_field* field) { return field ? field->field.k() : 0; }
uint64_t kk_field_q(const kk_field* field) { return field ? field->field.q() : 0; }

kk_status kk_field_add(const kk_field* f, uint64_t x, uint64_t y, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = f->field.add(checked_elem(f, x), checked_elem(f, y)).rank;
  });
}

kk_status kk_field_mul(const kk_field* f, uint64_t x, uint64_t y, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = f->field.mul(checked_elem(f, x), checked_elem(f, y)).rank;
  });
}

kk_status kk_field_inv(const kk_field* f, uint64_t x, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = f->field.inv(checked_elem(f, x)).rank;
  });
}

kk_status kk_field_quadratic_character(const kk_field* f, uint64_t x, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = static_cast<int>(f->field.quadratic_character(checked_elem(f, x)));
  });
}

uint64_t kk_field_smallest_nonsquare(const kk_field* field) {
  return field ? field->field.smallest_nonsquare().rank : 0;
}

kk_status kk_diagonal_count(const kk_field* f, const uint64_t* coeffs, size_t n,
                            uint64_t rhs, kk_count_method method, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(coeffs != nullptr || n == 0, "null coefficient array");
    DiagonalEq eq;
    for (size_t i = 0; i < n; ++i) eq.coeffs.push_back(checked_elem(f, coeffs[i]));
    eq.rhs = checked_elem(f, rhs);
    *out = method == KK_COUNT_BRUTEFORCE ? diagonal_count_bruteforce(f->field, eq)
                                         : diagonal_count_closed(f->field, eq);
  });
}

kk_status kk_bound_json(uint64_t q, unsigned n, char** out_json) {
  return guarded([&] { emit(bound_json(theorem1_bound(q, n)), out_json); });
}

kk_status kk_circular_bounds_json(uint64_t q, char** out_json) {
  return guarded([&] {
    const auto b = circular_lower_bounds(q);
    emit(nlohmann::json{{"q", q}, {"radiusMin", b.radius_min}, {"centerMin", b.center_min}},
         out_json);
  });
}

kk_status kk_construct(const kk_field* f, unsigned n, kk_construction_kind kind,
                       kk_variant variant, uint64_t nonsquare_rank, kk_construction** out) {
  return guarded([&] {
    require(f != nullptr, "null field");
    require(out != nullptr, "null output pointer");
    const Field& field = f->field;
    const CircularKind ck = circular_kind(variant);
    ConstructionResult r = [&] {
      switch (kind) {
        case KK_RADIUS_SPHERICAL: return radius_spherical(field, n);
        case KK_CENTER_SPHERICAL:
          return nonsquare_rank == UINT64_MAX
                     ? center_spherical(field, n)
                     : center_spherical(field, n, Elem{nonsquare_rank});
        case KK_HYPERSPHERE_UNION: return hypersphere_union(field, n);
        case KK_CIRCULAR_PRIME: return circular_prime(field, ck);
        case KK_CIRCULAR_SQUARE: return circular_square(field, ck);
        case KK_CIRCULAR_ODD_POWER: return circular_odd_power(field, ck);
      }
      throw Error(ErrorCode::InvalidArgument, "unknown construction");
    }();
    Assessment a = assess(r);
    *out = new kk_construction{std::move(r), a};
  });
}

void kk_construction_destroy(kk_construction* c) { delete c; }

uint64_t kk_construction_size(const kk_construction* c) { return c ? c->result.size : 0; }

kk_status kk_construction_verify(kk_construction* c, kk_verify_mode mode, uint64_t budget) {
  return guarded([&] {
    require(c != nullptr, "null construction");
    c->assessment = assess(c->result, verify_mode(mode), budget);
  });
}

int kk_construction_valid(const kk_construction* c) {
  return c && c->assessment.valid() ? 1 : 0;
}

kk_status kk_construction_json(const kk_construction* c, char** out_json) {
  return guarded([&] {
    require(c != nullptr, "null construction");
    emit(construction_json(c->result, c->assessment), out_json);
  });
}

const char* kk_csv_header(void) {
  static const std::string header = csv_header();
  return header.c_str();
}

kk_status kk_construction_csv_row(const kk_construction* c, char** out_row) {
  return guarded([&] {
    require(c != nullptr, "null construction");
    require(out_row != nullptr, "null output pointer");
    *out_row = dup_string(construction_csv_row(c->result, c->assessment));
  });
}

kk_status kk_construction_points(const kk_construction* c, kk_pointset** out) {
  return guarded([&] {
    require(c != nullptr, "null construction");
    require(out != nullptr, "null output pointer");
    *out = new kk_pointset{c->result.points};
  });
}

kk_status kk_pointset_from_json(const char* json, kk_pointset** out) {
  return guarded([&] {
    require(json != nullptr, "null json");
    require(out != nullptr, "null output pointer");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("set file: ") + e.what());
    }
    *out = new kk_pointset{set_from_json(doc)};
  });
}

kk_status kk_pointset_to_json(const kk_pointset* set, char** out_json) {
  return guarded([&] {
    require(set != nullptr, "null point set");
    emit(set_file_json(set->set), out_json);
  });
}

void kk_pointset_destroy(kk_pointset* set) { delete set; }

uint64_t kk_pointset_size(const kk_pointset* set) { return set ? set->set.size() : 0; }

unsigned kk_pointset_dim(const kk_pointset* set) {
  return set ? static_cast<unsigned>(set->set.space().dim()) : 0;
}

kk_status kk_verify_set(const kk_pointset* s, kk_set_property property, uint64_t budget,
                        int* verdict, char** report_json) {
  return guarded([&] {
    require(s != nullptr, "null point set");
    require(verdict != nullptr, "null verdict pointer");
    const PointSet& set = s->set;
    const Space& space = set.space();
    const Field& field = space.field();
    const auto size = static_cast<std::int64_t>(set.size());
    nlohmann::json report{{"q", field.q()}, {"p", field.p()}, {"k", field.k()},
                          {"n", space.dim()}, {"mode", "exhaustive"}, {"size", size}};
    bool ok = false;
    std::optional<Rational> bound;
    const bool circular =
        property == KK_PROP_CIRCULAR_RADIUS || property == KK_PROP_CIRCULAR_CENTER;
    if (circular) {
      const CircularKind kind = property == KK_PROP_CIRCULAR_RADIUS ? CircularKind::Radius
                                                                    : CircularKind::Center;
      ok = circular_cover(field, elements_of(set), kind);
      const auto b = circular_lower_bounds(field.q());
      bound = Rational(static_cast<std::int64_t>(
          kind == CircularKind::Radius ? b.radius_min : b.center_min));
      report["property"] = kind == CircularKind::Radius ? "circular-radius" : "circular-center";
      report["work"] = set.size() * set.size();
    } else {
      switch (property) {
        case KK_PROP_RADIUS_SPHERES:
          report["property"] = "radius";
          report["work"] = radius_kakeya_work(space);
          ok = verify_radius_kakeya_exhaustive(set, budget);
          break;
        case KK_PROP_CENTER_SPHERES:
          report["property"] = "center";
          report["work"] = center_kakeya_work(space);
          ok = verify_center_kakeya_exhaustive(set, budget);
          break;
        default:
          report["property"] = "hypersphere";
          report["work"] = hypersphere_kakeya_work(space);
          ok = verify_hypersphere_kakeya_exhaustive(set, budget);
          break;
      }
      if (property != KK_PROP_HYPERSPHERES)
        bound = theorem1_bound(field.q(), static_cast<unsigned>(space.dim())).value;
    }
    report["verdict"] = ok;
    if (bound) {
      report["boundValue"] = rational_json(*bound);
      report["boundMet"] = size >= bound->ceil();
    } else {
      report["boundValue"] = nullptr;
      report["boundMet"] = nullptr;
    }
    *verdict = ok ? 1 : 0;
    if (report_json) emit(report, report_json);
  });
}

kk_status kk_intersection_lemma_json(const kk_field* f, unsigned n, uint64_t budget,
                                     char** out_json) {
  return guarded([&] {
    require(f != nullptr, "null field");
    const LemmaScan scan = verify_intersection_lemma(f->field, n, budget);
    emit(nlohmann::json{{"q", f->field.q()},
                        {"n", n},
                        {"pairs", scan.pairs},
                        {"maxIntersection", scan.max_intersection},
                        {"bound", scan.bound},
                        {"sameCenterDisjoint", scan.same_center_disjoint},
                        {"holds", scan.holds()}},
         out_json);
  });
}

kk_status kk_search_json(const kk_field* f, kk_variant kind, kk_search_method method,
                         uint64_t exact_limit, uint64_t node_budget, char** out_json) {
  return guarded([&] {
    require(f != nullptr, "null field");
    SearchOptions opts;
    if (exact_limit) opts.exact_limit = exact_limit;
    if (node_budget) opts.node_budget = node_budget;
    const SearchOutcome o = method == KK_SEARCH_GREEDY
                                ? greedy_circular(f->field, circular_kind(kind))
                                : minimal_circular_exact(f->field, circular_kind(kind), opts);
    emit(search_json(o), out_json);
  });
}

}  // extern "C"
