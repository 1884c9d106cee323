/*
 * C interface to the kakeya library.
 *
 * Every object is an opaque handle created by a kk_*_create / kk_construct
 * style call and released with the matching kk_*_destroy. Functions return
 * a kk_status; on failure kk_last_error() describes the problem for the
 * calling thread. Strings returned through char** outputs are owned by the
 * caller and must be released with kk_string_free().
 *
 * Field elements cross the boundary as ranks in [0, q): the base-p digits
 * of the rank are the coefficients of the residue polynomial, constant term
 * first. Points of F_q^n use rank(x) = sum_i rank(x_i) * q^i.
 */
#ifndef KAKEYA_H
#define KAKEYA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KAKEYA_BUILDING)
#    define KAKEYA_API __declspec(dllexport)
#  else
#    define KAKEYA_API __declspec(dllimport)
#  endif
#else
#  define KAKEYA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kk_status {
  KK_OK = 0,
  KK_ERR_NON_ODD_PRIME,
  KK_ERR_OVERFLOW,
  KK_ERR_DIVISION_BY_ZERO,
  KK_ERR_ZERO_COEFFICIENT,
  KK_ERR_ZERO_RADIUS,
  KK_ERR_ZERO_DIRECTION,
  KK_ERR_IDENTICAL_SPHERES,
  KK_ERR_NOT_A_NONSQUARE,
  KK_ERR_NOT_A_SQUARE_FIELD,
  KK_ERR_WRONG_DEGREE,
  KK_ERR_BAD_DIMENSION,
  KK_ERR_BUDGET_EXCEEDED,
  KK_ERR_INVALID_ARGUMENT,
  KK_ERR_PARSE,
  KK_ERR_INTERNAL
} kk_status;

typedef enum kk_construction_kind {
  KK_RADIUS_SPHERICAL = 0,
  KK_CENTER_SPHERICAL,
  KK_HYPERSPHERE_UNION,
  KK_CIRCULAR_PRIME,
  KK_CIRCULAR_SQUARE,
  KK_CIRCULAR_ODD_POWER
} kk_construction_kind;

/* Which parameter a one-dimensional set must cover. */
typedef enum kk_variant { KK_VARIANT_RADIUS = 0, KK_VARIANT_CENTER } kk_variant;

typedef enum kk_verify_mode {
  KK_VERIFY_WITNESS = 0,
  KK_VERIFY_EXHAUSTIVE,
  KK_VERIFY_BOTH
} kk_verify_mode;

/* Property checked by kk_verify_set. */
typedef enum kk_set_property {
  KK_PROP_RADIUS_SPHERES = 0,  /* a sphere of every radius */
  KK_PROP_CENTER_SPHERES,      /* a sphere for every first center coordinate */
  KK_PROP_HYPERSPHERES,        /* a hyper-sphere of every radius */
  KK_PROP_CIRCULAR_RADIUS,     /* n = 1: K - K = F_q */
  KK_PROP_CIRCULAR_CENTER      /* n = 1: restricted K + K = F_q */
} kk_set_property;

typedef enum kk_count_method { KK_COUNT_CLOSED = 0, KK_COUNT_BRUTEFORCE } kk_count_method;

typedef enum kk_search_method { KK_SEARCH_EXACT = 0, KK_SEARCH_GREEDY } kk_search_method;

typedef struct kk_field kk_field;
typedef struct kk_pointset kk_pointset;
typedef struct kk_construction kk_construction;

KAKEYA_API const char* kk_status_name(kk_status status);
KAKEYA_API const char* kk_last_error(void);
KAKEYA_API void kk_string_free(char* str);

/* Fields */
KAKEYA_API kk_status kk_field_create(uint64_t p, unsigned k, kk_field** out);
/* q must be an odd prime power. */
KAKEYA_API kk_status kk_field_from_order(uint64_t q, kk_field** out);
KAKEYA_API void kk_field_destroy(kk_field* field);
KAKEYA_API uint64_t kk_field_p(const kk_field* field);
KAKEYA_API unsigned kk_field_k(const kk_field* field);
KAKEYA_API uint64_t kk_field_q(const kk_field* field);
KAKEYA_API kk_status kk_field_add(const kk_field* field, uint64_t x, uint64_t y, uint64_t* out);
KAKEYA_API kk_status kk_field_mul(const kk_field* field, uint64_t x, uint64_t y, uint64_t* out);
KAKEYA_API kk_status kk_field_inv(const kk_field* field, uint64_t x, uint64_t* out);
/* -1, 0 or +1 */
KAKEYA_API kk_status kk_field_quadratic_character(const kk_field* field, uint64_t x, int* out);
KAKEYA_API uint64_t kk_field_smallest_nonsquare(const kk_field* field);

/* Solutions of coeffs[0] x_1^2 + ... + coeffs[n-1] x_n^2 = rhs. */
KAKEYA_API kk_status kk_diagonal_count(const kk_field* field, const uint64_t* coeffs,
                                       size_t n, uint64_t rhs, kk_count_method method,
                                       uint64_t* out);

/* Lower bound for sets holding enough spheres, as JSON. n >= 2. */
KAKEYA_API kk_status kk_bound_json(uint64_t q, unsigned n, char** out_json);
/* {"q", "radiusMin", "centerMin"} for subsets of F_q. */
KAKEYA_API kk_status kk_circular_bounds_json(uint64_t q, char** out_json);

/* Constructions. n is ignored for circular constructions (always 1).
 * nonsquare_rank selects r for KK_CENTER_SPHERICAL; pass UINT64_MAX for the
 * smallest nonsquare. The construction is verified in witness mode. */
KAKEYA_API kk_status kk_construct(const kk_field* field, unsigned n, kk_construction_kind kind,
                                  kk_variant variant, uint64_t nonsquare_rank,
                                  kk_construction** out);
KAKEYA_API void kk_construction_destroy(kk_construction* c);
KAKEYA_API uint64_t kk_construction_size(const kk_construction* c);
/* Re-verifies with the given mode; budget applies to exhaustive scans. */
KAKEYA_API kk_status kk_construction_verify(kk_construction* c, kk_verify_mode mode,
                                            uint64_t budget);
/* 1 when every check that ran passed and the bound is met, else 0. */
KAKEYA_API int kk_construction_valid(const kk_construction* c);
KAKEYA_API kk_status kk_construction_json(const kk_construction* c, char** out_json);
KAKEYA_API const char* kk_csv_header(void);
KAKEYA_API kk_status kk_construction_csv_row(const kk_construction* c, char** out_row);
KAKEYA_API kk_status kk_construction_points(const kk_construction* c, kk_pointset** out);

/* Point sets and the set-file format {"q","p","k","n","ranks"}. */
KAKEYA_API kk_status kk_pointset_from_json(const char* json, kk_pointset** out);
KAKEYA_API kk_status kk_pointset_to_json(const kk_pointset* set, char** out_json);
KAKEYA_API void kk_pointset_destroy(kk_pointset* set);
KAKEYA_API uint64_t kk_pointset_size(const kk_pointset* set);
KAKEYA_API unsigned kk_pointset_dim(const kk_pointset* set);

/* Exhaustive property check. *verdict is 1 or 0; report_json (optional)
 * receives the verdict with size and bound comparison. */
KAKEYA_API kk_status kk_verify_set(const kk_pointset* set, kk_set_property property,
                                   uint64_t budget, int* verdict, char** report_json);

/* Largest pairwise intersection over all distinct spheres of F_q^n. */
KAKEYA_API kk_status kk_intersection_lemma_json(const kk_field* field, unsigned n,
                                                uint64_t budget, char** out_json);

/* One-dimensional minimal (exact) or greedy covers. exact_limit and
 * node_budget of 0 select the defaults. */
KAKEYA_API kk_status kk_search_json(const kk_field* field, kk_variant kind,
                                    kk_search_method method, uint64_t exact_limit,
                                    uint64_t node_budget, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* KAKEYA_H */
