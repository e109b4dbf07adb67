/* C interface to the g_s factorization library.
 *
 * A gs_field handle owns one finite field F_q and, on first use, the derived
 * per-field tables. Every call that can fail returns a gs_status; on failure
 * gs_last_error() describes the problem for the calling thread. Strings
 * returned through char** are heap allocated and released with
 * gs_string_free. Handles may be shared between threads.
 */
#ifndef GSFACTOR_H
#define GSFACTOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GS_API __declspec(dllexport)
#else
#define GS_API __attribute__((visibility("default")))
#endif

typedef struct gs_field gs_field;

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_ARGUMENT = 1,     /* null pointer or invalid enum value */
  GS_ERR_PARSE = 2,        /* malformed field spec or element literal */
  GS_ERR_FIELD = 3,        /* q is not a supported odd prime power */
  GS_ERR_DOMAIN = 4,       /* operation undefined for its argument */
  GS_ERR_PRECONDITION = 5, /* e.g. s outside the degree-e case */
  GS_ERR_GUARD = 6,        /* field too large to enumerate */
  GS_ERR_INVARIANT = 7,    /* a verified identity failed */
  GS_ERR_INTERNAL = 8
} gs_status;

typedef enum gs_format { GS_FORMAT_TEXT = 0, GS_FORMAT_JSON = 1 } gs_format;

GS_API const char* gs_version(void);
GS_API const char* gs_status_name(gs_status status);
/* Message for the last failed call on this thread; "" if none. */
GS_API const char* gs_last_error(void);
GS_API uint64_t gs_default_seed(void);
GS_API int gs_is_odd_prime_power(uint64_t q);
GS_API void gs_string_free(char* s);

/* spec: "q=13", "q=9", "p=3,k=2" or "13". */
GS_API gs_status gs_field_open(const char* spec, gs_field** out);
GS_API gs_status gs_field_open_pk(uint64_t p, unsigned k, gs_field** out);
GS_API void gs_field_close(gs_field* field);
GS_API gs_status gs_field_info(const gs_field* field, uint64_t* p, unsigned* k, uint64_t* q);

/* n, E, tau, the square-pair set and |W|. */
GS_API gs_status gs_field_summary(gs_field* field, gs_format fmt, char** out);

/* Case report and closed-form factorization of g_s. s is an element literal:
 * an integer, a fraction such as "-1/2", or comma-separated base-p digits. */
GS_API gs_status gs_factor(gs_field* field, const char* s, uint64_t seed, gs_format fmt,
                           char** out);

/* Compares the closed form with the generic factorization for every s.
 * Returns GS_ERR_INVARIANT when any value disagrees; *out still holds the
 * report. verified and total may be null. */
GS_API gs_status gs_verify(gs_field* field, uint64_t seed, gs_format fmt, char** out,
                           uint64_t* verified, uint64_t* total);

/* One JSON object per line, one line per s in canonical order. */
GS_API gs_status gs_atlas(gs_field* field, uint64_t seed, char** out);

/* All s with g_s irreducible; also cross-checks against the order-2E scan. */
GS_API gs_status gs_irreducible_values(gs_field* field, gs_format fmt, char** out);

/* Constant terms of the degree-e factors for s and -s with their residues. */
GS_API gs_status gs_residuacity(gs_field* field, const char* s, uint64_t seed, gs_format fmt,
                                char** out);

/* Period families and, when q = +-1 mod 12, the cubic complement check.
 * Returns GS_ERR_INVARIANT when an applicable check fails. */
GS_API gs_status gs_check_corollaries(gs_field* field, uint64_t seed, gs_format fmt, char** out);

/* The sequence, period and beta for one c with c and 1-c nonzero squares. */
GS_API gs_status gs_profile(gs_field* field, const char* c, gs_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GSFACTOR_H */
