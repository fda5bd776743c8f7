/*
 * garsia: certified lower bounds for the Garsia entropy of Bernoulli
 * convolutions with algebraic parameter beta in (1,2).
 *
 * The library computes m_n, the maximal number of depth-n word boxes sharing
 * a point in the coordinate space spanned by the Galois conjugates of
 * modulus > 1, derives L_n = n log 2 - log m_n, and certifies
 * dim_H(nu_beta) = 1 whenever L_n/(n log beta) > 1 or the real-conjugate
 * entropy-ratio threshold applies.
 *
 * All functions returning int yield GARSIA_OK (0) on success or a
 * GARSIA_ERR_* code; garsia_status_str translates codes. Handles are opaque
 * and freed with the matching *_free call. All operations are pure with
 * respect to their handles: distinct handles may be used from distinct
 * threads concurrently.
 */

#ifndef GARSIA_H
#define GARSIA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GARSIA_OK               0
#define GARSIA_ERR_PARSE        1  /* malformed input text */
#define GARSIA_ERR_DOMAIN       2  /* precondition violated */
#define GARSIA_ERR_BUDGET       3  /* enumeration or memory budget exceeded */
#define GARSIA_ERR_NO_BETA1     4  /* polynomial has no root in (1,2) */
#define GARSIA_ERR_AMBIGUOUS    5  /* several roots in (1,2); index required */
#define GARSIA_ERR_UNIT_MODULUS 6  /* requested conjugate too close to |z|=1 */
#define GARSIA_ERR_NO_CONVERGE  7  /* root finding exhausted its budget */
#define GARSIA_ERR_INAPPLICABLE 8  /* criterion does not apply to the input */
#define GARSIA_ERR_ARG          9  /* null pointer or malformed argument */
#define GARSIA_ERR_INTERNAL     10

const char *garsia_status_str(int status);

typedef struct garsia_poly garsia_poly;
typedef struct garsia_system garsia_system;

/* ------------------------------------------------------------------ */
/* integer polynomials                                                  */

/* text: comma-separated integer coefficients in ascending degree order,
 * e.g. "-1,-1,1" for x^2-x-1. */
int garsia_poly_parse(const char *text, garsia_poly **out);
void garsia_poly_free(garsia_poly *p);
int garsia_poly_degree(const garsia_poly *p);
long long garsia_poly_height(const garsia_poly *p);
int garsia_poly_coeff(const garsia_poly *p, int i, long long *out);
int garsia_poly_is_monic(const garsia_poly *p);
/* Writes the display form ("x^4-x-1") into buf; always NUL-terminated. */
int garsia_poly_format(const garsia_poly *p, char *buf, size_t cap);

#define GARSIA_TRANSFORM_REVERSE 0 /* x^d p(1/x), leading sign normalized  */
#define GARSIA_TRANSFORM_NEGATE  1 /* p(-x), leading sign normalized       */
int garsia_poly_transform(const garsia_poly *p, int which, garsia_poly **out);

/* ------------------------------------------------------------------ */
/* roots                                                                */

typedef struct {
    double re, im;
    double radius;    /* certified inclusion radius (absolute) */
    int conj_pair;    /* index of the conjugate partner, -1 for real roots */
    int unit_modulus; /* 1 when | |z|-1 | is below the detection band */
} garsia_root;

/* All complex roots with certified radii <= tol (pass 0 for the default).
 * Real roots first (descending), then conjugate pairs (descending modulus,
 * Im > 0 representative first). *count is set to the degree; at most cap
 * entries are written. */
int garsia_find_roots(const garsia_poly *p, double tol, garsia_root *roots, int cap, int *count);

/* ------------------------------------------------------------------ */
/* conjugate systems                                                    */

/* indices == NULL: beta1 is the unique root in (1,2) and the conjugates are
 * all roots of modulus > 1 (one representative per conjugate pair, unit-
 * modulus roots excluded). Otherwise indices (into garsia_find_roots order)
 * select the conjugates explicitly; beta1_index = -1 keeps the automatic
 * beta1 choice. */
int garsia_system_create(const garsia_poly *p, const int *indices, int n_indices,
                         int beta1_index, garsia_system **out);

/* System at free parameter values (no polynomial): conjugate k is
 * re[k] + i*im[k]; im[k] = 0 marks a real conjugate. */
int garsia_system_create_free(double beta1, const double *re, const double *im, int k,
                              garsia_system **out);
void garsia_system_free(garsia_system *s);

double garsia_system_beta1(const garsia_system *s);
int garsia_system_dimension(const garsia_system *s); /* ambient axis count */
int garsia_system_conjugate_count(const garsia_system *s);
int garsia_system_conjugate(const garsia_system *s, int k, double *re, double *im);
/* One warning per call, empty string when exhausted. */
int garsia_system_warning(const garsia_system *s, int k, char *buf, size_t cap);

/* Overrides the tail truncation depth N (0 = automatic per axis). An
 * explicit N must be >= every word length later used with the system. */
int garsia_system_set_tail_depth(garsia_system *s, int N);

/* b2 -> equal-entropy representative > 1 (error for b2 in {-1,0,1}). */
int garsia_normalize_conjugate(double b2, double *out);

/* ------------------------------------------------------------------ */
/* stabbing depth                                                       */

typedef struct {
    int n;
    long long mn;
    double ln;     /* n log 2 - log mn */
    double ratio;  /* ln / (n log beta1) */
    double margin; /* winning-cell width: robustness heuristic only */
} garsia_depth;

/* m_n over all 2^n word boxes. witness (dimension doubles) and cell
 * (2*dimension doubles: lo then hi per axis) may be NULL. */
int garsia_compute_mn(const garsia_system *s, int n, garsia_depth *out, double *witness,
                      double *cell);

/* compute_mn for n = 1..n_max, early exit on ratio > 1. first_certifying_n
 * receives 0 when no n certifies. */
int garsia_best_bound(const garsia_system *s, int n_max, garsia_depth *best,
                      int *first_certifying_n);

typedef struct {
    long long m_lower, m_upper;
    int certified;      /* 1: m_n constant on the rectangle */
    double ln_constant; /* valid when certified */
} garsia_region_depth;

/* Interval recomputation over the parameter rectangle centered at the
 * system's values; halfwidths has one entry per axis (complex conjugates:
 * real then imaginary part). */
int garsia_certify_region(const garsia_system *s, const double *halfwidths, int n,
                          garsia_region_depth *out);

/* Lower bound for m_n from the children of length-(n-1) boxes meeting the
 * seed cells (n_seeds boxes of 2*dimension doubles each: lo then hi). */
int garsia_seeded_mn_lower_bound(const garsia_system *s, int n, const double *seed_cells,
                                 int n_seeds, long long *out);

/* ------------------------------------------------------------------ */
/* exact oracle                                                         */

#define GARSIA_ORACLE_BUDGET 14

/* eps: n entries from {-1,0,1}. *collides = 1 iff sum eps_i x^(n-i) is
 * divisible by the monic p (exact integer arithmetic). */
int garsia_oracle_collision(const garsia_poly *p, const signed char *eps, int n, int *collides);

/* word: string over '0','1'; *count receives N_n(word). */
int garsia_oracle_count(const garsia_poly *p, const char *word, long long *count);

/* H_n (natural log) and max N_n; per_word (2^n entries, word index taken
 * with a_1 as most significant bit) may be NULL. */
int garsia_oracle_entropy(const garsia_poly *p, int n, double *Hn, long long *maxN,
                          long long *per_word);

#define GARSIA_WORD_REV 0
#define GARSIA_WORD_NEG 1
/* In-place word transform on a '0'/'1' string. */
int garsia_word_transform(char *word, int which);

/* ------------------------------------------------------------------ */
/* criteria                                                             */

#define GARSIA_THRESHOLD_ORIGINAL 0.82
#define GARSIA_THRESHOLD_IMPROVED 0.9804085

#define GARSIA_METHOD_NONE      0
#define GARSIA_METHOD_THRESHOLD 1
#define GARSIA_METHOD_BOX_BOUND 2

typedef struct {
    int certified; /* 1 = dimension-one-certified */
    int method;
    double value; /* threshold ratio r, or box ratio */
    int n_used;
    long long mn;
    char details[240];
} garsia_verdict;

/* r = log(beta1)/|log|conj|| < threshold certifies dimension one. The radii
 * widen the comparison; pass 0 for exact inputs. */
int garsia_threshold_criterion(double beta1, double conj, double threshold, double beta1_radius,
                               double conj_radius, garsia_verdict *out);

/* Threshold criterion on every real conjugate, then the box bound up to
 * n_max (interval-checked before certifying). n_max = 0 skips the box
 * route. */
int garsia_dimension_report(const garsia_poly *p, int n_max, double threshold, int tail_N,
                            garsia_verdict *out);

/* *needed = 0 only when height > 1 and assert_full_witness is set. */
int garsia_height_check(const garsia_poly *p, int assert_full_witness, int *needed, char *note,
                        size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GARSIA_H */
