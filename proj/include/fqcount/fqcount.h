/* C interface to the fqcount library.
 *
 * Fields and extensions are opaque handles. Every call returns an fqc_status;
 * on failure the message is available from fqc_last_error() on the same
 * thread until the next call. Field elements are passed as integer codes
 * (sum of c_i p^i over the polynomial basis); fqc_field_from_int maps an
 * integer into the prime subfield.
 */
#ifndef FQCOUNT_FQCOUNT_H
#define FQCOUNT_FQCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FQC_BUILDING_LIBRARY)
#define FQC_API __attribute__((visibility("default")))
#else
#define FQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqc_status {
  FQC_OK = 0,
  FQC_INVALID_ARGUMENT = 1,
  FQC_PRECONDITION = 2, /* a curve or theorem hypothesis fails */
  FQC_BUDGET_EXCEEDED = 3,
  FQC_OVERFLOW = 4,
  FQC_INTERNAL = 5
} fqc_status;

typedef struct fqc_field fqc_field;
typedef struct fqc_extension fqc_extension;

FQC_API const char* fqc_last_error(void);
FQC_API const char* fqc_status_name(fqc_status s);

/* ---- fields ---- */
FQC_API fqc_status fqc_field_create(uint64_t p, unsigned k, fqc_field** out);
FQC_API void fqc_field_destroy(fqc_field* f);
FQC_API uint64_t fqc_field_characteristic(const fqc_field* f);
FQC_API unsigned fqc_field_degree(const fqc_field* f);
FQC_API uint64_t fqc_field_size(const fqc_field* f);
FQC_API uint64_t fqc_field_generator(const fqc_field* f);
/* Writes min(cap, k+1) modulus coefficients, low-to-high; *len gets k+1. */
FQC_API fqc_status fqc_field_modulus(const fqc_field* f, uint32_t* coeffs, size_t cap, size_t* len);
FQC_API uint64_t fqc_field_from_int(const fqc_field* f, int64_t v);

/* F_{q^n} over the field f, with the embedding of f. */
FQC_API fqc_status fqc_extension_create(const fqc_field* base, unsigned n, fqc_extension** out);
FQC_API void fqc_extension_destroy(fqc_extension* e);
FQC_API unsigned fqc_extension_degree(const fqc_extension* e);

/* ---- traces ---- */
typedef enum fqc_method { FQC_METHOD_AUTO = 0, FQC_METHOD_NAIVE = 1, FQC_METHOD_CONGRUENCE = 2 } fqc_method;

typedef struct fqc_trace_result {
  uint64_t q;
  int64_t trace;     /* valid when resolved != 0 */
  int resolved;
  int has_residue;   /* residue mod p from the binomial congruence */
  uint64_t residue;
} fqc_trace_result;

/* Trace of y^2 = A x^3 + B x + C. With FQC_METHOD_CONGRUENCE the residue is
 * always produced; the trace is resolved only where the residue pins it down
 * (prime field, p >= 17). FQC_METHOD_AUTO and FQC_METHOD_NAIVE always resolve.
 * Singular curves give FQC_PRECONDITION. */
FQC_API fqc_status fqc_trace(const fqc_field* f, uint64_t A, uint64_t B, uint64_t C, fqc_method method,
                             fqc_trace_result* out);
/* Trace of y^2 = a x^3 + b x^2 + c x + d, any nonzero a. */
FQC_API fqc_status fqc_trace_cubic(const fqc_field* f, const uint64_t coeffs[4], fqc_method method,
                                   int64_t* trace);
FQC_API fqc_status fqc_s_n(uint64_t q, int64_t trace, unsigned n, int64_t* out);
/* Writes the exact text form of omega into buf (NUL-terminated, truncated to cap). */
FQC_API fqc_status fqc_omega_string(uint64_t q, int64_t trace, char* buf, size_t cap);
FQC_API fqc_status fqc_binom_mod_p(uint64_t n, uint64_t m, uint64_t p, uint64_t* out);

/* ---- curve families ---- */
typedef enum fqc_family {
  FQC_Y2_CUBIC = 0,
  FQC_Y2_CUBIC_LINEAR,
  FQC_Y2_SEXTIC_EVEN,
  FQC_Y2_QUARTIC_EVEN,
  FQC_QUARTIC_PAIR_C1,
  FQC_QUARTIC_PAIR_C2,
  FQC_Y2_QUAD_PRODUCT,
  FQC_Y2_QUAD_RATIONAL,
  FQC_Y3_LINEAR_QUAD,
  FQC_Y3_CUBIC,
  FQC_Y3_SEXTIC,
  FQC_Y4_QUARTIC_EVEN,
  FQC_FAMILY_COUNT
} fqc_family;

typedef struct fqc_family_spec {
  fqc_family family;
  const uint64_t* coeffs; /* element codes in the base field */
  size_t ncoeffs;
  unsigned order;         /* i, quartic pair only */
  unsigned curve;         /* 1 or 2, y3-linear-quad only */
} fqc_family_spec;

FQC_API fqc_status fqc_family_from_name(const char* name, fqc_family* out);
FQC_API const char* fqc_family_name(fqc_family fam);
FQC_API size_t fqc_family_arity(fqc_family fam);

/* FQC_OK if admissible; otherwise FQC_PRECONDITION or FQC_INVALID_ARGUMENT
 * with the violated hypothesis in fqc_last_error(). */
FQC_API fqc_status fqc_family_check(const fqc_extension* e, const fqc_family_spec* spec);
FQC_API fqc_status fqc_count_closed(const fqc_extension* e, const fqc_family_spec* spec, int64_t* out);
/* Enumeration count including the family's points at infinity. budget 0 = default. */
FQC_API fqc_status fqc_count_oracle(const fqc_extension* e, const fqc_family_spec* spec, uint64_t budget,
                                    int64_t* out);

/* ---- maximal and minimal curves a X^d + b Y^d + c Z^d = 0 ---- */
typedef enum fqc_verdict { FQC_NEITHER = 0, FQC_MAXIMAL = 1, FQC_MINIMAL = 2 } fqc_verdict;

typedef struct fqc_certificate {
  fqc_verdict verdict;
  int64_t count; /* projective points over F_{q^{2n}} */
  int64_t lo, hi;
  int experimental;
} fqc_certificate;

FQC_API const char* fqc_verdict_name(fqc_verdict v);
FQC_API fqc_status fqc_classify(const fqc_field* base, unsigned degree, const uint64_t abc[3], unsigned n,
                                fqc_verdict* out);
FQC_API fqc_status fqc_certify(const fqc_field* base, unsigned degree, const uint64_t abc[3], unsigned n,
                               int experimental, uint64_t budget, fqc_certificate* out);
FQC_API fqc_status fqc_hasse_weil_interval(uint64_t q, unsigned n, unsigned g, int64_t* lo, int64_t* hi);

#ifdef __cplusplus
}
#endif

#endif
