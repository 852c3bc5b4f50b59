/*
 * ettri: equilateral triangles with vertices in the integer cube {0..n}^3.
 *
 * C interface to the counting library (OEIS A102698). All functions return a
 * status code; results come back through out-parameters. List-returning
 * functions use the usual two-call pattern: pass out = NULL to query the
 * element count, then call again with a buffer of at least that capacity.
 * The breakdown report is an opaque handle that must be freed by the caller.
 *
 * Thread safety: every function is safe to call concurrently; a report handle
 * may be read from several threads but must not be freed while in use.
 */

#ifndef ETTRI_H
#define ETTRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ETTRI_API __declspec(dllexport)
#else
#define ETTRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ettri_status {
    ETTRI_OK = 0,
    ETTRI_ERR_INVALID = 1,       /* argument violates a precondition */
    ETTRI_ERR_UNSATISFIABLE = 2, /* no integral parametrization for a plane class */
    ETTRI_ERR_OVERFLOW = 3,      /* a count exceeded 64-bit range */
    ETTRI_ERR_LIMIT = 4,         /* brute-force size above the configured limit */
    ETTRI_ERR_GEOMETRY = 5,      /* degenerate or non-equilateral triangle */
    ETTRI_ERR_INTERNAL = 6,      /* invariant breach */
    ETTRI_ERR_NOSPACE = 7        /* caller buffer too small */
} ettri_status;

ETTRI_API const char* ettri_status_message(ettri_status status);

/* ET(n): the number of equilateral triangles in {0..n}^3. threads = 0 picks
 * the hardware concurrency. */
ETTRI_API ettri_status ettri_count(uint32_t n, uint32_t threads, uint64_t* total);

/* Independent brute-force count; refuses n > limit (pass 0 for the default
 * limit of 12). */
ETTRI_API ettri_status ettri_brute_force_count(uint32_t n, uint32_t limit, uint32_t threads,
                                               uint64_t* total);

/* Admissible side classes t <= n^2 (squared side = 2t), ascending. */
ETTRI_API ettri_status ettri_side_classes(uint32_t n, uint64_t* out, size_t capacity, size_t* count);

/* Odd d with d^2 | t, ascending. */
ETTRI_API ettri_status ettri_odd_square_divisors(uint64_t t, uint64_t* out, size_t capacity,
                                                 size_t* count);

/* Primitive sorted solutions of a^2 + b^2 + c^2 = 3 d^2 for odd d; each entry
 * is four int64 values a, b, c, d. capacity counts entries, not values. */
ETTRI_API ettri_status ettri_plane_solutions(uint32_t d, int64_t* out, size_t capacity, size_t* count);

/* Minimal triangles of side class t in the plane (a, b, c) fitting {0..bound}^3;
 * each entry is nine int64 values x1 y1 z1 x2 y2 z2 x3 y3 z3. */
ETTRI_API ettri_status ettri_minimal_triangles(uint64_t t, int64_t a, int64_t b, int64_t c,
                                               uint32_t bound, int64_t* out, size_t capacity,
                                               size_t* count);

/* Orbit statistics of a triangle given as nine coordinates; out_stats receives
 * t, alpha, beta, gamma. The input need not be anchored at the origin. */
ETTRI_API ettri_status ettri_orbit_stats(const int64_t vertices[9], uint64_t out_stats[4]);

/* Per-class breakdown of ET(n). */
typedef struct ettri_report ettri_report;

typedef struct ettri_class_view {
    uint64_t t_side;      /* squared side = 2 * t_side */
    int64_t a, b, c, d;   /* plane class */
    int64_t triangle[9];  /* canonical representative */
    uint64_t t;           /* bounding size of the representative */
    uint64_t alpha, beta, gamma;
    uint64_t count;       /* contribution to ET(n) */
} ettri_class_view;

ETTRI_API ettri_status ettri_report_create(uint32_t n, uint32_t threads, ettri_report** out);
ETTRI_API void ettri_report_free(ettri_report* report);
ETTRI_API uint32_t ettri_report_n(const ettri_report* report);
ETTRI_API uint64_t ettri_report_total(const ettri_report* report);
ETTRI_API size_t ettri_report_class_count(const ettri_report* report);
ETTRI_API ettri_status ettri_report_class(const ettri_report* report, size_t index,
                                          ettri_class_view* out);

/* Polynomial increment rows (n, u, v, w, s) for n = 1..n_max: coefficients of
 * the new-at-size-n contribution expanded in powers of (n' - n). */
typedef struct ettri_increment_row {
    uint32_t n;
    int64_t u, v, w, s;
} ettri_increment_row;

ETTRI_API ettri_status ettri_increments(uint32_t n_max, uint32_t threads, ettri_increment_row* out,
                                        size_t capacity, size_t* count);

/* Growth-exponent diagnostics a_n = ln ET(n) / ln(n + 1) for n = 1..n_max. */
ETTRI_API ettri_status ettri_ratios(uint32_t n_max, uint32_t threads, double* out, size_t capacity,
                                    size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* ETTRI_H */
