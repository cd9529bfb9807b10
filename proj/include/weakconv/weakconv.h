/* weakconv C API: opaque handles, status codes, UTF-8 strings.
 *
 * Every function that can fail returns a wc_status; WC_OK is 0.  On failure
 * the thread-local message from wc_last_error() describes what went wrong
 * and out-parameters are left untouched.  Handles are created and destroyed
 * by this library only; functions interoperate (convolution, multipliers)
 * when they were created from the same wc_group handle.
 *
 * Complex vectors cross the boundary as interleaved doubles
 * [re0, im0, re1, im1, ...] of length 2 * group order.
 */
#ifndef WEAKCONV_H
#define WEAKCONV_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) && !defined(WC_API)
#define WC_API __attribute__((visibility("default")))
#elif !defined(WC_API)
#define WC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wc_status {
  WC_OK = 0,
  WC_INVALID_ARGUMENT = 1,
  WC_VALIDATION = 2,
  WC_CAPACITY = 3,
  WC_DOMAIN_MISMATCH = 4,
  WC_UNSUPPORTED_GROUP = 5,
  WC_DEGENERATE_INPUT = 6,
  WC_IO = 7,
  WC_PARSE = 8,
  WC_INTERNAL = 9
} wc_status;

/* Kernel side of a convolution operator. */
#define WC_SIDE_LEFT 0  /* T f = k * f */
#define WC_SIDE_RIGHT 1 /* T f = f * k */
#define WC_SIDE_BOTH 2  /* reports only: estimate both sides */

typedef struct wc_group wc_group;
typedef struct wc_function wc_function;

WC_API const char* wc_version(void);
WC_API const char* wc_status_name(wc_status status);

/* Message from the most recent failure on this thread; never NULL. */
WC_API const char* wc_last_error(void);

/* -------------------------------------------------------------- groups -- */

/* Shorthand ("cyclic(32)", "product(dihedral(4),cyclic(3))", ...), inline
 * JSON ({"kind":"cyclic","n":32}), or a path to a JSON spec / Cayley-table
 * file. */
WC_API wc_status wc_group_from_spec(const char* spec, wc_group** out);
WC_API wc_status wc_group_cyclic(uint64_t n, wc_group** out);
WC_API wc_status wc_group_torus_grid(uint64_t n, uint32_t dim, wc_group** out);
WC_API wc_status wc_group_dihedral(uint64_t n, wc_group** out);
WC_API wc_status wc_group_symmetric(uint32_t n, wc_group** out);
WC_API void wc_group_free(wc_group* g);

WC_API size_t wc_group_order(const wc_group* g);
WC_API double wc_group_weight(const wc_group* g);
WC_API const char* wc_group_label(const wc_group* g);
WC_API int wc_group_is_abelian(const wc_group* g);
WC_API wc_status wc_group_mul(const wc_group* g, uint32_t a, uint32_t b,
                              uint32_t* out);
WC_API wc_status wc_group_inverse(const wc_group* g, uint32_t a,
                                  uint32_t* out);

/* ----------------------------------------------------------- functions -- */

/* n_doubles must be 2 * order (interleaved re/im). */
WC_API wc_status wc_function_create(const wc_group* g, const double* values,
                                    size_t n_doubles, wc_function** out);
/* Value 1/weight at `at`, zero elsewhere (unit L1 mass). */
WC_API wc_status wc_function_point_mass(const wc_group* g, uint32_t at,
                                        wc_function** out);
/* JSON (canonical) or CSV index,re,im; the format is sniffed. */
WC_API wc_status wc_function_read(const wc_group* g, const char* path,
                                  wc_function** out);
WC_API wc_status wc_function_write(const wc_function* f, const char* path,
                                   int as_csv);
WC_API void wc_function_free(wc_function* f);

WC_API size_t wc_function_size(const wc_function* f);
/* Copies 2 * size doubles; capacity is in doubles. */
WC_API wc_status wc_function_copy_values(const wc_function* f, double* out,
                                         size_t capacity);

/* --------------------------------------------------------------- norms -- */

/* mu{|f| > alpha}, strict inequality. */
WC_API wc_status wc_distribution_function(const wc_function* f, double alpha,
                                          double* out);
/* Weak-L^p quasi-norm, p strictly between 1 and infinity. */
WC_API wc_status wc_weak_norm(const wc_function* f, double p, double* out);
WC_API wc_status wc_strong_norm(const wc_function* f, double p, double* out);
/* L^{p,q}; q = INFINITY selects the weak quasi-norm. */
WC_API wc_status wc_lorentz_norm(const wc_function* f, double p, double q,
                                 double* out);
WC_API wc_status wc_sup_norm(const wc_function* f, double* out);

/* ----------------------------------------------------------- operators -- */

WC_API wc_status wc_convolve(const wc_function* a, const wc_function* b,
                             wc_function** out);
/* Transform-side convolution; abelian grid groups only. */
WC_API wc_status wc_fft_convolve(const wc_function* a, const wc_function* b,
                                 wc_function** out);
/* side: WC_SIDE_LEFT or WC_SIDE_RIGHT. */
WC_API wc_status wc_apply_convolution(const wc_function* kernel, int side,
                                      const wc_function* f, wc_function** out);
/* Applies the Fourier multiplier whose symbol is the transform of `kernel`:
 * the scalar symbol on abelian grid groups, the matrix symbol through the
 * built-in irrep tables elsewhere.  Equal to f * kernel up to roundoff. */
WC_API wc_status wc_apply_multiplier_kernel(const wc_function* kernel,
                                            const wc_function* f,
                                            wc_function** out);
/* Same, with the symbol loaded from a file (kind scalar or matrix). */
WC_API wc_status wc_apply_multiplier_symbol_file(const wc_group* g,
                                                 const char* symbol_path,
                                                 const wc_function* f,
                                                 wc_function** out);

/* ----------------------------------------------------------- estimates -- */

/* weak_norm(op f, p) / ||f||_1 for the operator with this kernel and side. */
WC_API wc_status wc_rayleigh_ratio(const wc_function* kernel, int side,
                                   const wc_function* f, double p,
                                   double* out);
/* weak_norm(k*f, p) / (weak_norm(k, p) ||f||_1). */
WC_API wc_status wc_weak_young_ratio(const wc_function* k,
                                     const wc_function* f, double p,
                                     double* out);

/* ------------------------------------------------------------- reports -- */
/* Reports come back as a heap string (*out); free with wc_string_free.
 * as_csv selects the flattened CSV rendering instead of canonical JSON. */

WC_API wc_status wc_report_norm(const wc_function* f, double p, double q,
                                int as_csv, char** out);

/* Summary (L1/L2/sup norms, output path) for a function a subcommand just
 * wrote; `kind` tags which operation produced it. */
WC_API wc_status wc_report_output_summary(const char* kind,
                                          const wc_function* result,
                                          const char* out_path, int as_csv,
                                          char** out);

/* Fejer family on torus_grid(grid_n, 1).  When verify is nonzero the report
 * includes the approximate-identity checks at exponent p over windows of the
 * given radii against a built-in trigonometric test function, and *ok_out
 * reports whether every check passed. */
WC_API wc_status wc_report_fejer(uint64_t grid_n, const uint64_t* orders,
                                 size_t n_orders, int verify, double p,
                                 const double* window_radii, size_t n_radii,
                                 int as_csv, int* ok_out, char** out);

/* Operator-norm sandwich for one kernel.  side: WC_SIDE_LEFT, WC_SIDE_RIGHT
 * or WC_SIDE_BOTH.  upper_constant 0 selects the default p/(p-1).  *ok_out
 * reports whether every estimated side satisfied both sandwich flags. */
WC_API wc_status wc_report_estimate(const wc_function* kernel, double p,
                                    size_t trials, uint64_t seed, int side,
                                    double upper_constant, int include_witness,
                                    int as_csv, int* ok_out, char** out);

/* Full randomized suite: sandwich over `kernels` random kernels per p plus a
 * weak-Young sweep over wy_pairs random pairs.  side must be WC_SIDE_LEFT or
 * WC_SIDE_RIGHT. */
WC_API wc_status wc_report_verify_theorem1(const wc_group* g, const double* ps,
                                           size_t n_ps, size_t kernels,
                                           size_t trials, size_t wy_pairs,
                                           uint64_t seed, int side,
                                           double upper_constant, int as_csv,
                                           int* all_ok_out, char** out);

WC_API void wc_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WEAKCONV_H */
