/* ranum: exact real numeral systems with redundant digit alphabets.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this API; all functions that can fail return a
 * ranum_status and optionally fill *err with a malloc'd diagnostic naming the
 * violated precondition (release with ranum_string_free). Returned strings
 * are owned by the caller. Handles are immutable after creation and may be
 * shared freely across threads.
 */
#ifndef RANUM_RANUM_H
#define RANUM_RANUM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ranum_status {
  RANUM_OK = 0,
  RANUM_ERR_DOMAIN = 1,   /* violated precondition / unsupported domain */
  RANUM_ERR_PARSE = 2,    /* malformed literal */
  RANUM_ERR_INTERNAL = 3  /* broken internal invariant (a bug) */
} ranum_status;

/* Exact value u + v*sqrt(d). */
typedef struct ranum_real ranum_real;
/* Base-alphabet pair (a, r) with its represented interval [0, r/(a-1)]. */
typedef struct ranum_system ranum_system;
/* Eventually periodic digit sequence (preperiod + nonempty period). */
typedef struct ranum_stream ranum_stream;

const char* ranum_version(void);

void ranum_string_free(char* s);
void ranum_real_free(ranum_real* x);
void ranum_system_free(ranum_system* sys);
void ranum_stream_free(ranum_stream* s);

/* ---- exact values ------------------------------------------------------ */

/* Literal grammar: "3", "-7/3", "(1+1*sqrt5)/2", "phi". */
ranum_status ranum_real_parse(const char* literal, ranum_real** out, char** err);

/* (u_num/u_den) + (v_num/v_den) * sqrt(d); square factors of d fold into v. */
ranum_status ranum_real_make(long u_num, long u_den, long v_num, long v_den, long d,
                             ranum_real** out, char** err);

/* Exact literal; re-parses to an equal value. Caller frees. */
char* ranum_real_format(const ranum_real* x);

/* Decimal with `digits` fractional digits, truncated toward minus infinity. */
ranum_status ranum_real_decimal(const ranum_real* x, int digits, char** out, char** err);

ranum_status ranum_real_add(const ranum_real* x, const ranum_real* y, ranum_real** out,
                            char** err);
ranum_status ranum_real_sub(const ranum_real* x, const ranum_real* y, ranum_real** out,
                            char** err);
ranum_status ranum_real_mul(const ranum_real* x, const ranum_real* y, ranum_real** out,
                            char** err);
ranum_status ranum_real_div(const ranum_real* x, const ranum_real* y, ranum_real** out,
                            char** err);

/* *out = -1, 0, +1; exact, never floating point. */
ranum_status ranum_real_cmp(const ranum_real* x, const ranum_real* y, int* out, char** err);

/* Greatest integer <= x, as a decimal big-integer string. */
ranum_status ranum_real_floor(const ranum_real* x, char** out, char** err);

/* ---- systems and digit streams ----------------------------------------- */

ranum_status ranum_system_new(const ranum_real* base, int r, ranum_system** out, char** err);

/* JSON: base, r, upper endpoint, redundancy flags. */
char* ranum_system_describe(const ranum_system* sys);

/* Stream literal: "110(01)" for r <= 9, "10,3,0(2,1)" for r > 9. */
ranum_status ranum_stream_parse(const char* text, int r, ranum_stream** out, char** err);

char* ranum_stream_format(const ranum_stream* s, int r);

/* ---- representations ---------------------------------------------------- */

/* Exact value of the stream in the system. */
ranum_status ranum_eval_stream(const ranum_system* sys, const ranum_stream* s, ranum_real** out,
                               char** err);

/* Exact value of the stream in the classical base-(r+1) system. */
ranum_status ranum_stream_classical_value(const ranum_stream* s, int r, ranum_real** out,
                                          char** err);

/* n-digit greedy (lazy = 0) or lazy (lazy = 1) expansion of x in [0, U].
 * *word_out receives the word literal; *rem_out the exact remainder, with
 * x == eval(word) + a^(-n) * remainder. */
ranum_status ranum_expand(const ranum_system* sys, const ranum_real* x, int lazy, int n,
                          char** word_out, ranum_real** rem_out, char** err);

/* *out = 1 if a terminating representation was found (searching greedy and
 * lazy expansions up to `depth` digits), else 0. Rational bases only. */
ranum_status ranum_is_ra_rational(const ranum_system* sys, const ranum_stream* s, int depth,
                                  int* out, char** err);

/* ---- cylinder geometry --------------------------------------------------- */

/* JSON report for the cylinder with the given base word: exact interval,
 * optionally its r+1 children (with_children != 0) and the overlap of
 * children (overlap_digit, overlap_digit+1) when overlap_digit >= 0. */
ranum_status ranum_cylinder_report(const ranum_system* sys, const char* word, int with_children,
                                   int overlap_digit, char** json_out, char** err);

/* JSON report of parameter coincidences: integer_coincidence, half_length,
 * property11_m (list), golden, half_overlap_ratio. */
ranum_status ranum_coincidence_report(const ranum_system* sys, int max_m, char** json_out,
                                      char** err);

/* *out = 1 when two equal-rank words denote the same cylinder, decided by
 * the exact criterion sum a^(-i)(alpha_i - beta_i) == 0. */
ranum_status ranum_words_equal(const ranum_system* sys, const char* word1, const char* word2,
                               int* out, char** err);

/* ---- the digit-transplant function f ------------------------------------ */

/* f(x) for x given by classical base-(r+1) digits; (r)-tail forms of binary
 * points are rejected (the (0)-tail form is the canonical argument). */
ranum_status ranum_f_eval(const ranum_system* sys, const ranum_stream* s, ranum_real** out,
                          char** err);

/* Jump (left limit minus value) at the binary point with terminating digits
 * `prefix_word` of length k; equals (r+1-a)/(a^k (a-1)). */
ranum_status ranum_f_jump(const ranum_system* sys, const char* prefix_word, int k,
                          ranum_real** out, char** err);

/* JSON non-monotonicity certificate on the source cylinder `base_word`. */
ranum_status ranum_f_witness(const ranum_system* sys, const char* base_word, char** json_out,
                             char** err);

/* V_n = ((r+1)/a)^n * U, the rank-n image-cylinder length sum. */
ranum_status ranum_f_variation(const ranum_system* sys, int n, ranum_real** out, char** err);

/* Graph of f sampled on the (r+1)-adic grid of the given depth.
 * format "csv": x_exact,x_decimal,y_exact,y_decimal,side rows.
 * format "svg": polyline with open/closed jump markers, width x height px. */
ranum_status ranum_f_graph(const ranum_system* sys, int depth, const char* format, int width,
                           int height, char** out, char** err);

/* ---- fractal constructions ---------------------------------------------- */

/* CSV cover of the {0,2}-digit Cantor set for levels 1..levels; base in (2,3),
 * r fixed at 2. Columns: level,index,lo_exact,hi_exact,lo_decimal,hi_decimal. */
ranum_status ranum_cantor_cover_csv(const ranum_real* base, int levels, char** out, char** err);

/* JSON: symbolic dimension log(2)/log(a) plus decimal value. */
ranum_status ranum_cantor_dimension(const ranum_real* base, char** json_out, char** err);

/* *out = 1 when every digit of the stream lies in {0, 2}. */
ranum_status ranum_cantor_member(const ranum_real* base, const ranum_stream* s, int* out,
                                 char** err);

/* CSV preimages of y0 in the golden system: all 2^len words over {4,5} with
 * the chosen periodic tail. Columns: octal_word,tail,x_exact,x_decimal. */
ranum_status ranum_levelset_enum_csv(int len, int tail, char** out, char** err);

/* JSON closure of the seed stream under (1,0,0) <-> (0,1,1) substitution in
 * the golden system, capped at canonical length max_len. */
ranum_status ranum_substitutions(const char* seed, int max_len, char** json_out, char** err);

/* JSON: the certified level-set dimension lower bound, the exact ratio 1/3. */
ranum_status ranum_levelset_dimension(char** json_out, char** err);

/* ---- verification -------------------------------------------------------- */

/* Runs the property suites applicable to the system. suite is one of
 * "all", "cylinders", "function", "fractal". *all_passed is 1 when every
 * applicable check passed. */
ranum_status ranum_verify(const ranum_system* sys, const char* suite, int* all_passed,
                          char** json_out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* RANUM_RANUM_H */
