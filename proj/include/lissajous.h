/* C interface to the Chebyshev-Lissajous polynomial library.
 *
 * All functions returning liss_status use 0 for success. Output strings
 * are heap-allocated and must be released with liss_string_free; handles
 * with the matching *_free function. Angles are passed as reduced
 * fractions (p, q) meaning p*pi/q.
 */
#ifndef LISSAJOUS_H
#define LISSAJOUS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LISS_OK = 0,
    LISS_ERR_ARG = 2,        /* invalid argument / out of range */
    LISS_ERR_DEGENERATE = 3, /* sin(delta) = 0 passed to a non-degenerate entry */
    LISS_ERR_VERIFY = 4,     /* residual above tolerance */
    LISS_ERR_IO = 5,         /* file output failure */
    LISS_ERR_DOMAIN = 6,     /* mixed coefficient domains */
    LISS_ERR_INTERNAL = 7
} liss_status;

typedef struct liss_poly liss_poly;
typedef struct liss_factorization liss_factorization;

const char* liss_version(void);

void liss_string_free(char* s);
void liss_poly_free(liss_poly* p);
void liss_factorization_free(liss_factorization* f);

/* --- polynomials ------------------------------------------------------ */

/* Chebyshev polynomial T_n, exact integer coefficients. 0 <= n <= 512. */
liss_status liss_cheb(int n, liss_poly** out);

/* T_m(T_n(x)), expanded. */
liss_status liss_cheb_nested(int m, int n, liss_poly** out);

/* T_n(x)^2 - 2cos(delta) T_n(x) T_m(y) + T_m(y)^2 - sin^2(delta),
 * delta = dp*pi/dq, at `prec` bits. */
liss_status liss_build_nondegenerate(int m, int n, long dp, long dq,
                                     unsigned prec, liss_poly** out);

/* T_n(x) + T_m(y) (sign '+') or T_n(x) - T_m(y) (sign '-'), exact. */
liss_status liss_build_degenerate(int n, int m, char sign, liss_poly** out);

int liss_poly_degx(const liss_poly* p);
int liss_poly_degy(const liss_poly* p);
size_t liss_poly_term_count(const liss_poly* p);

/* JSON: array of [i, j, "coefficient"] triples in graded-lex order. */
liss_status liss_poly_to_json(const liss_poly* p, char** out);
/* Human-readable, e.g. "4*x^3 - 3*x". */
liss_status liss_poly_to_text(const liss_poly* p, char** out);

/* --- factorization ---------------------------------------------------- */

liss_status liss_factor_nondegenerate(int m, int n, long dp, long dq,
                                      unsigned prec, liss_factorization** out);
liss_status liss_factor_degenerate(int n, int m, char sign, unsigned prec,
                                   liss_factorization** out);

size_t liss_factorization_count(const liss_factorization* f);

/* Residual of constant * product(factors) against the generating
 * polynomial. *pass is 1 when residual <= tolerance. */
liss_status liss_factorization_verify(const liss_factorization* f, double tolerance,
                                      char** residual, int* pass);

/* Full factorization JSON including the verification residual. */
liss_status liss_factorization_to_json(const liss_factorization* f, double tolerance,
                                       char** out);

/* --- classification --------------------------------------------------- */

/* {"d":..,"irreducibleOverR":..,"irreducibleOverC":..,"predictedFactorCount":..} */
liss_status liss_classify_nondegenerate(int m, int n, long dp, long dq, char** out);
liss_status liss_classify_degenerate(int n, int m, char sign, char** out);

/* --- plotting ---------------------------------------------------------- */

/* Factor the polynomial, sample each component, write one SVG with all
 * components and, when csv_prefix is non-NULL, one CSV per component at
 * "<csv_prefix><k>.csv". Returns a JSON summary (residuals, conic report).
 * Verification failure of the factorization maps to LISS_ERR_VERIFY. */
liss_status liss_plot_nondegenerate(int m, int n, long dp, long dq, unsigned prec,
                                    int points, double tolerance, const char* svg_path,
                                    const char* csv_prefix, char** summary);
liss_status liss_plot_degenerate(int n, int m, char sign, unsigned prec, int points,
                                 double tolerance, const char* svg_path,
                                 const char* csv_prefix, char** summary);

/* --- verification sweeps ----------------------------------------------- */

/* suite: theorem1 | theorem2 | general | degenerate | all.
 * *all_pass is 1 when every case passed. The report is plain text, one
 * line per suite with the worst residual. */
liss_status liss_verify_suite(const char* suite, int max_index, unsigned prec,
                              double tolerance, char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* LISSAJOUS_H */
