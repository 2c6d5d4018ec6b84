/*
 * hbn -- ampleness classification for line bundles on covers of the
 * projective line, driven by the splitting type of the pushforward.
 *
 * C interface of the shared library.  All functions are thread-safe as long
 * as distinct threads touch distinct handles.  Integers cross the boundary
 * as base-10 strings so that no value is ever truncated; every char* the
 * library hands out must be released with hbn_string_free().
 */
#ifndef HBN_H
#define HBN_H

#include <stddef.h>

#if defined(_WIN32)
#define HBN_API __declspec(dllexport)
#else
#define HBN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbn_status {
  HBN_OK = 0,
  HBN_END = 1,                     /* stream exhausted (not an error) */
  HBN_ERR_NULL_ARGUMENT = 2,
  HBN_ERR_PARSE = 3,               /* malformed numeral, list, or name */
  HBN_ERR_UNSORTED_PARTS = 4,      /* parts not nondecreasing, no sort requested */
  HBN_ERR_EMPTY_TYPE = 5,          /* zero parts supplied */
  HBN_ERR_NEGATIVE_GENUS = 6,
  HBN_ERR_EMPTY_LOCUS = 7,         /* rho' < 0 (or classical rho < 0) */
  HBN_ERR_RANK_TOO_SMALL = 8,      /* classification asked of a k = 1 type */
  HBN_ERR_BAD_AMPLE_DEGREE = 9,    /* p outside [0, k-1] */
  HBN_ERR_NONNEG_PARTS = 10,       /* count needs exactly p+1 nonnegative parts */
  HBN_ERR_INCONSISTENT_PROFILE = 11,
  HBN_ERR_DOMAIN = 12,             /* argument outside a stated formula domain */
  HBN_ERR_VIOLATIONS = 13,         /* verify found failing property instances */
  HBN_ERR_INTERNAL = 14
} hbn_status;

/* Stable identifier for a status, e.g. "unsorted-parts". */
HBN_API const char* hbn_status_name(hbn_status status);

/* Explanation of the most recent failure on this thread (empty if none). */
HBN_API const char* hbn_last_error_message(void);

HBN_API const char* hbn_version(void);

HBN_API void hbn_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Datum: genus g >= 0 plus a splitting type e_1 <= ... <= e_k with a  */
/* nonempty locus (rho' = g - u(e) >= 0).                              */
/* ------------------------------------------------------------------ */

typedef struct hbn_datum hbn_datum;

/*
 * genus: base-10 numeral.  parts: comma-separated base-10 numerals.
 * sort_parts != 0 permits unordered input (it is normalized and the datum
 * remembers that it was reordered); otherwise unordered input is refused.
 */
HBN_API hbn_status hbn_datum_create(const char* genus, const char* parts, int sort_parts,
                                    hbn_datum** out);
HBN_API void hbn_datum_destroy(hbn_datum* datum);

HBN_API int hbn_datum_rank(const hbn_datum* datum);
HBN_API int hbn_datum_was_reordered(const hbn_datum* datum);

typedef enum hbn_invariant {
  HBN_INV_GENUS = 0,
  HBN_INV_RANK = 1,
  HBN_INV_DEG_E = 2,        /* sum of the parts */
  HBN_INV_U = 3,            /* h^1 of End: codimension of the stratum */
  HBN_INV_RHO = 4,          /* expected dimension g - u */
  HBN_INV_H0 = 5,
  HBN_INV_R = 6,            /* h0 - 1 */
  HBN_INV_DEG_L = 7,        /* deg e + g + k - 1 */
  HBN_INV_NONNEG_PARTS = 8
} hbn_invariant;

HBN_API hbn_status hbn_datum_invariant(const hbn_datum* datum, hbn_invariant which, char** out);

/* ------------------------------------------------------------------ */
/* Core arithmetic on bare part lists (no genus involved).             */
/* ------------------------------------------------------------------ */

/* h0 of the twist O(e)(n). */
HBN_API hbn_status hbn_h0_twisted(const char* parts, const char* n, char** out);

/* Shifts every part by n; writes the comma-separated result. */
HBN_API hbn_status hbn_twist(const char* parts, const char* n, char** out);

/*
 * Recovers a splitting type from samples "n:h0,n:h0,..." covering a
 * contiguous twist window that starts at value 0; writes the parts as a
 * comma-separated list.
 */
HBN_API hbn_status hbn_type_from_h0_profile(const char* samples, char** out);

/* ------------------------------------------------------------------ */
/* Decisions.                                                          */
/* ------------------------------------------------------------------ */

typedef struct hbn_decision {
  int value;            /* 0 or 1 */
  int case_number;      /* clause index inside its theorem; 0 when value = 0 */
  char case_label[24];  /* e.g. "VA.Case7", "Bpf.Subbundle", "None" */
} hbn_decision;

/*
 * Basepoint-freeness of the general member.  When the verdict comes from the
 * pullback clause and pullback_twist is non-NULL, *pullback_twist receives
 * the degree of the line bundle downstairs (otherwise NULL is stored).
 */
HBN_API hbn_status hbn_basepoint_free(const hbn_datum* datum, hbn_decision* out,
                                      char** pullback_twist);

HBN_API hbn_status hbn_birationally_rel_pva(const hbn_datum* datum, int p, hbn_decision* out);
HBN_API hbn_status hbn_rel_pva(const hbn_datum* datum, int p, hbn_decision* out);
HBN_API hbn_status hbn_birationally_va(const hbn_datum* datum, hbn_decision* out);
HBN_API hbn_status hbn_very_ample(const hbn_datum* datum, hbn_decision* out);

/* Sufficient twist chains; birational != 0 selects the weaker chain. */
HBN_API hbn_status hbn_pva_sufficient(const hbn_datum* datum, int p, int birational, int* holds);

/* Conjectural p-very-ampleness criterion (>= p+2 nonneg parts, r >= 2p+1). */
HBN_API hbn_status hbn_conjectured_pva(const hbn_datum* datum, int p, int* holds);

/* Very ampleness of a general g^r_d without gonality constraints. */
HBN_API hbn_status hbn_classical_va(const char* g, const char* r, const char* d, int* value);
HBN_API hbn_status hbn_classical_rho(const char* g, const char* r, const char* d, char** out);

/* ------------------------------------------------------------------ */
/* Counts.                                                             */
/* ------------------------------------------------------------------ */

typedef struct hbn_count {
  char* n;          /* dependent fibral divisors, with multiplicity */
  char* deg_z;
  char* deg_h;
  char* deg_pi;
  char* deg_l;
  char edge_case[16];  /* "GenusZero", "RelVACase2".."4", "Positive", "NotApplicable" */
} hbn_count;

/*
 * Strict count: requires exactly p+1 nonnegative parts
 * (HBN_ERR_NONNEG_PARTS otherwise).  Free the strings with hbn_count_clear.
 */
HBN_API hbn_status hbn_dependent_divisor_count(const hbn_datum* datum, int p, hbn_count* out);
HBN_API void hbn_count_clear(hbn_count* count);

/* Intersection with the Hirzebruch directrix for k = 2 types (0, e2). */
HBN_API hbn_status hbn_directrix_intersection(const char* g, const char* e2, char** out);

/* ------------------------------------------------------------------ */
/* Formatted reports (exactly what the CLI prints).                    */
/* ------------------------------------------------------------------ */

typedef enum hbn_format { HBN_FORMAT_JSON = 0, HBN_FORMAT_CSV = 1, HBN_FORMAT_PLAIN = 2 } hbn_format;

/*
 * Full classification report.  ps selects the twist degrees (n_ps = 0 with
 * ps = NULL reports every p in [0, k-1]).
 */
HBN_API hbn_status hbn_classify_report(const hbn_datum* datum, const int* ps, size_t n_ps,
                                       hbn_format format, char** out);

HBN_API hbn_status hbn_count_report(const hbn_datum* datum, int p, hbn_format format, char** out);

/* ------------------------------------------------------------------ */
/* Streams.                                                            */
/* ------------------------------------------------------------------ */

/* Splitting types of one rank, lexicographic, optional total-degree filter. */
typedef struct hbn_type_stream hbn_type_stream;
HBN_API hbn_status hbn_type_stream_create(int k, int part_min, int part_max,
                                          const char* degree_or_null, hbn_type_stream** out);
/* Writes one rendered type per call; HBN_END when exhausted. */
HBN_API hbn_status hbn_type_stream_next(hbn_type_stream* stream, hbn_format format, char** line);
HBN_API void hbn_type_stream_destroy(hbn_type_stream* stream);

typedef struct hbn_domain {
  int k_min;
  int k_max;
  int part_min;
  int part_max;
  int genus_slack;   /* genus runs from u(e) to u(e) + genus_slack */
  const int* ps;     /* NULL: all p in [0, k-1] per rank */
  size_t n_ps;
} hbn_domain;

/*
 * Classification-table stream over every valid datum in the domain
 * (k ascending, types lexicographic, genus ascending).  CSV output emits the
 * header line first; JSON output is one object per line.
 */
typedef struct hbn_table_stream hbn_table_stream;
HBN_API hbn_status hbn_table_stream_create(const hbn_domain* domain, hbn_format format,
                                           hbn_table_stream** out);
HBN_API hbn_status hbn_table_stream_next(hbn_table_stream* stream, char** line);
HBN_API void hbn_table_stream_destroy(hbn_table_stream* stream);

/* ------------------------------------------------------------------ */
/* Verification sweeps.                                                */
/* ------------------------------------------------------------------ */

typedef struct hbn_verify_options {
  hbn_domain domain;
  const char* properties;  /* comma-separated ids, NULL or "" for all */
  const char* mutation;    /* fault injection name, NULL or "" for none */
  int jobs;                /* worker threads; 0 picks the hardware count */
} hbn_verify_options;

/*
 * Re-checks every selected invariant over the domain.  Returns HBN_OK when
 * all hold, HBN_ERR_VIOLATIONS otherwise; *report receives the rendered
 * report either way, and *violations the number of failing instances.
 */
HBN_API hbn_status hbn_verify(const hbn_verify_options* options, hbn_format format, char** report,
                              long* violations);

/* Comma-separated list of property ids hbn_verify understands. */
HBN_API char* hbn_known_properties(void);

/* Comma-separated list of fault-injection names for the self-test. */
HBN_API char* hbn_known_mutations(void);

#ifdef __cplusplus
}
#endif

#endif /* HBN_H */
