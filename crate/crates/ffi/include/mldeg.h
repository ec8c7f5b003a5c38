#ifndef MLDEG_H
#define MLDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MldegStatus {
  MLDEG_STATUS_OK = 0,
  MLDEG_STATUS_NULL_POINTER = 1,
  MLDEG_STATUS_INVALID_UTF8 = 2,
  MLDEG_STATUS_PARSE = 3,
  MLDEG_STATUS_DOMAIN = 4,
  MLDEG_STATUS_OVERFLOW = 5,
  MLDEG_STATUS_BUFFER_TOO_SMALL = 6,
  MLDEG_STATUS_UNCERTIFIED = 7,
  MLDEG_STATUS_INTERNAL = 8,
} MldegStatus;

typedef struct MldegArrangement MldegArrangement;

typedef struct MldegHomogeneous MldegHomogeneous;

typedef struct MldegLaurent MldegLaurent;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread; empty after a success.
// The pointer stays valid until the next call on this thread.
const char *mldeg_last_error(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must come from this library or be null.
void mldeg_string_free(char *s);

// Runs the command line `argv[0..argc]` (without the program name) and
// returns the JSON report in `*out`. `*exit_code` receives the CLI exit code.
//
// # Safety
// `argv` must point to `argc` valid C strings; `out` and `exit_code` must be writable.
enum MldegStatus mldeg_report_json(uintptr_t argc,
                                   const char *const *argv,
                                   char **out,
                                   int32_t *exit_code);

// Parses a JSON arrangement `{"dim": r, "hyperplanes": [{"a": [...], "b": ...}]}`.
//
// # Safety
// `json` must be a valid C string and `out` writable.
enum MldegStatus mldeg_arrangement_parse(const char *json, struct MldegArrangement **out);

// # Safety
// `h` must come from `mldeg_arrangement_parse` or be null.
void mldeg_arrangement_free(struct MldegArrangement *h);

// # Safety
// `h` must be a live handle and `dim`, `len` writable.
enum MldegStatus mldeg_arrangement_shape(const struct MldegArrangement *h,
                                         uintptr_t *dim,
                                         uintptr_t *len);

// Coefficients of the characteristic polynomial, constant term first.
//
// # Safety
// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
enum MldegStatus mldeg_arrangement_char_poly(const struct MldegArrangement *h,
                                             int64_t *buf,
                                             uintptr_t cap,
                                             uintptr_t *len);

// CSM vector `v_0, …, v_r` of an essential arrangement.
//
// # Safety
// As for `mldeg_arrangement_char_poly`.
enum MldegStatus mldeg_arrangement_csm(const struct MldegArrangement *h,
                                       int64_t *buf,
                                       uintptr_t cap,
                                       uintptr_t *len);

// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_arrangement_ml_degree(const struct MldegArrangement *h, int64_t *out);

// Number of regions and of bounded regions of a real arrangement.
//
// # Safety
// `h` must be a live handle and both outputs writable.
enum MldegStatus mldeg_arrangement_regions(const struct MldegArrangement *h,
                                           int64_t *regions,
                                           int64_t *bounded);

// Points of the complement over the prime field `F_p`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_arrangement_count_fp(const struct MldegArrangement *h,
                                            uint64_t p,
                                            uint64_t *out);

// Counts critical points of `Π f_i^(u_i)` on a line-arrangement complement.
//
// # Safety
// `h` must be a live handle, `u` must hold one exponent per line, `out` writable.
enum MldegStatus mldeg_critical_count_r2(const struct MldegArrangement *h,
                                         const int64_t *u,
                                         uintptr_t n,
                                         uint64_t seed,
                                         uintptr_t *out);

// Parses a Laurent polynomial; `nvars = 0` infers the variable count.
//
// # Safety
// `s` must be a valid C string and `out` writable.
enum MldegStatus mldeg_laurent_parse(const char *s, uintptr_t nvars, struct MldegLaurent **out);

// # Safety
// `h` must come from `mldeg_laurent_parse` or be null.
void mldeg_laurent_free(struct MldegLaurent *h);

// CSM vector of a nondegenerate hypersurface in the torus, from its Newton polytope.
//
// # Safety
// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
enum MldegStatus mldeg_laurent_csm(const struct MldegLaurent *h,
                                   int64_t *buf,
                                   uintptr_t cap,
                                   uintptr_t *len);

// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_laurent_ml_degree(const struct MldegLaurent *h, int64_t *out);

// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_laurent_statistical_ml_degree(const struct MldegLaurent *h, int64_t *out);

// Counts critical points of `x^(u1) y^(u2)` on a plane curve in the torus.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_curve_critical_count(const struct MldegLaurent *h,
                                            int64_t u1,
                                            int64_t u2,
                                            uint64_t seed,
                                            uintptr_t *out);

// Parses a homogeneous polynomial; `nvars = 0` infers the variable count.
//
// # Safety
// `s` must be a valid C string and `out` writable.
enum MldegStatus mldeg_homogeneous_parse(const char *s,
                                         uintptr_t nvars,
                                         struct MldegHomogeneous **out);

// # Safety
// `h` must come from `mldeg_homogeneous_parse` or be null.
void mldeg_homogeneous_free(struct MldegHomogeneous *h);

// Milnor numbers `μ^0, …, μ^n`; the last is the degree of the gradient map.
//
// # Safety
// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
enum MldegStatus mldeg_homogeneous_milnor(const struct MldegHomogeneous *h,
                                          int64_t *buf,
                                          uintptr_t cap,
                                          uintptr_t *len);

// # Safety
// `h` must be a live handle and `out` writable.
enum MldegStatus mldeg_homogeneous_gradient_degree(const struct MldegHomogeneous *h, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MLDEG_H */
