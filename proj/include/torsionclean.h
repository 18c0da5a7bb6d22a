/*
 * torsionclean — exact computation of torsion-clean indices of finite rings.
 *
 * The library constructs finite rings from spec strings
 *
 *   ring  := field | "M(" int "," ring ")" | "T(" int "," ring ")"
 *          | "P(" ring {"," ring} ")" | "Q(" field "," int "," int ")"
 *   field := "GF(" int ")"            -- argument must be a prime power
 *
 * (M = full matrix ring, T = upper triangular, P = direct product,
 * Q(GF(q),e,v) = GF(q)[x_1..x_v] with every x_i^e = 0; M and T take field
 * entries), and exposes structure analysis, minimal (strong) torsion-clean
 * index searches with decomposition certificates, a verification suite of
 * structural identities, and survey rows — all over an exact integer
 * encoding of ring elements in [0, cardinality).
 *
 * Ring handles are opaque and immutable; elements cross this API as their
 * integer encodings. Reports cross as JSON strings allocated by the library;
 * release them with tc_string_free. All functions are thread-safe on
 * distinct handles; concurrent calls on one handle are safe as well (shared
 * caches are built once).
 */

#ifndef TORSIONCLEAN_H
#define TORSIONCLEAN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero codes match the CLI exit codes where meaningful. */
#define TC_OK 0
#define TC_ERR_PARSE 2      /* spec or literal syntax error */
#define TC_ABSENT 3         /* no (strong) decomposition / no strong index */
#define TC_ERR_SIZE_GUARD 4 /* construction exceeds the carrier size guard */
#define TC_ERR_ARGUMENT 5   /* invalid argument (range, mismatch, ...) */
#define TC_ERR_INTERNAL 6

typedef struct tc_ring tc_ring;

const char* tc_version(void);

/* Message for the most recent failing call on this thread. */
const char* tc_last_error(void);

void tc_string_free(char* s);

/* max_cardinality = 0 selects the default guard of 2^20 elements. */
int tc_ring_new(const char* spec, uint64_t max_cardinality, tc_ring** out);
void tc_ring_free(tc_ring* ring);

/* Canonical spec string; owned by the handle. */
const char* tc_ring_spec(const tc_ring* ring);
uint64_t tc_ring_cardinality(const tc_ring* ring);
uint64_t tc_ring_characteristic(const tc_ring* ring);

int tc_ring_zero(const tc_ring* ring, uint64_t* out);
int tc_ring_one(const tc_ring* ring, uint64_t* out);
int tc_ring_add(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out);
int tc_ring_sub(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out);
int tc_ring_mul(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out);
int tc_ring_neg(const tc_ring* ring, uint64_t a, uint64_t* out);

/* Accepts a decimal encoding or a nested bracket literal such as
 * "[[1,1],[1,0]]" with field-element codes at the leaves. */
int tc_element_parse(const tc_ring* ring, const char* text, uint64_t* out);
int tc_element_format(const tc_ring* ring, uint64_t enc, char** out);

typedef struct tc_index_options {
    int strong;              /* 0 = plain mode, 1 = strong mode */
    int conjugacy_reduction; /* scan one element per similarity class */
    int jobs;                /* parallel workers; 0 = all logical CPUs */
    int with_timing;         /* include elapsed_ms in the report */
} tc_index_options;

tc_index_options tc_index_options_default(void);

/* Structure report: idempotents, units with orders, unit group exponent,
 * Jacobson radical and its nil index, center size, structural flags. */
int tc_analyze_json(const tc_ring* ring, int jobs, char** out);

/* Minimal torsion-clean index with witnesses. Returns TC_ABSENT (with a
 * report naming the witness element) when strong mode admits no index. */
int tc_index_json(const tc_ring* ring, const tc_index_options* options, char** out);

/* Deterministic decomposition probe for one element: returns the
 * certificate minimizing (enc(e), enc(u)) under u^n = 1, or TC_ABSENT. */
int tc_decompose_json(const tc_ring* ring, uint64_t element, uint64_t n, int strong, char** out);

/* Runs one check (or all, when check_id is NULL) of the verification suite;
 * the result array carries pass/fail/not-applicable plus failure witnesses. */
int tc_verify_json(const tc_ring* ring, const char* check_id, int jobs, char** out);

/* Comma-separated stable check ids accepted by tc_verify_json. */
const char* tc_check_ids(void);

/* One survey row: cardinality, |U(R)|, exp(U(R)), plain/strong index,
 * characteristic, nil index of J(R), structural flags. */
int tc_survey_json(const tc_ring* ring, int conjugacy_reduction, int jobs, int with_timing,
                   char** out);

#ifdef __cplusplus
}
#endif

#endif /* TORSIONCLEAN_H */
