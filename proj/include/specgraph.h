/*
 * specgraph C API
 *
 * Shared-library interface to the specgraph core: discrete Schrödinger
 * operators L_{b,c} on weighted graphs over measure spaces (X,m), their
 * spectra, heat kernels and spectral comparison reports.
 *
 * Conventions
 *   - Every fallible call returns an sg_status; results travel through out
 *     parameters.  SG_OK is zero.
 *   - On failure, sg_last_error() returns a thread-local message describing
 *     what went wrong (valid until the next failing call on the thread).
 *   - Objects are opaque handles created and released by matching
 *     sg_*_free calls; passing NULL to a free function is a no-op.
 *   - Vertices are 0-based indices; family rules use the 1-based index of
 *     the underlying infinite path family.
 */

#ifndef SPECGRAPH_H
#define SPECGRAPH_H

#include <stddef.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_NULL_ARGUMENT = 1,
    SG_ERR_INVALID_ARGUMENT = 2,
    SG_ERR_INVALID_GRAPH = 3,
    SG_ERR_PARSE = 4,
    SG_ERR_IO = 5,
    SG_ERR_DIMENSION = 6,
    SG_ERR_NO_CONVERGENCE = 7,
    SG_ERR_DEGENERATE = 8,
    SG_ERR_UNKNOWN = 99
} sg_status;

typedef enum sg_flavor {
    SG_FLAVOR_NEUMANN = 0,
    SG_FLAVOR_DIRICHLET = 1
} sg_flavor;

typedef enum sg_verdict {
    SG_VERDICT_CONSISTENT_WITH_ZERO = 0,
    SG_VERDICT_SPECTRA_DIFFER = 1,
    SG_VERDICT_CONTRADICTION = 2
} sg_verdict;

typedef enum sg_tail_kind {
    SG_TAIL_BRACKET = 0,
    SG_TAIL_DIVERGENT = 1,
    SG_TAIL_UNKNOWN = 2
} sg_tail_kind;

typedef struct sg_graph sg_graph;
typedef struct sg_family sg_family;
typedef struct sg_operator sg_operator;
typedef struct sg_spectrum sg_spectrum;
typedef struct sg_comparison sg_comparison;
typedef struct sg_convergence sg_convergence;

SG_API const char* sg_status_name(sg_status status);
SG_API const char* sg_last_error(void);
SG_API void sg_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

SG_API sg_status sg_graph_create(size_t order, sg_graph** out);
SG_API void sg_graph_free(sg_graph* g);

SG_API size_t sg_graph_order(const sg_graph* g);
SG_API sg_status sg_graph_set_measure(sg_graph* g, size_t x, double m);
SG_API sg_status sg_graph_set_potential(sg_graph* g, size_t x, double c);
SG_API sg_status sg_graph_set_edge(sg_graph* g, size_t x, size_t y, double b);
SG_API sg_status sg_graph_set_label(sg_graph* g, size_t x, const char* label);
SG_API sg_status sg_graph_get_measure(const sg_graph* g, size_t x, double* out);
SG_API sg_status sg_graph_get_potential(const sg_graph* g, size_t x, double* out);
SG_API sg_status sg_graph_get_edge(const sg_graph* g, size_t x, size_t y, double* out);
/* label as a fresh string, release with sg_string_free */
SG_API sg_status sg_graph_get_label(const sg_graph* g, size_t x, char** out);

/* weighted degree sum_y b(x,y) */
SG_API sg_status sg_graph_degree(const sg_graph* g, size_t x, double* out);
/* sum_x f(x) g(x) m(x); f and g hold one value per vertex */
SG_API sg_status sg_graph_inner_product(const sg_graph* g, const double* f,
                                        const double* g_vec, double* out);

/* newline-separated validation report, empty string when the graph is
 * valid; release with sg_string_free */
SG_API sg_status sg_graph_validate(const sg_graph* g, char** report);

SG_API sg_status sg_graph_read_file(const char* path, sg_graph** out);
SG_API sg_status sg_graph_write_file(const sg_graph* g, const char* path);

/* path graph on 1..n with m(k)=k^-4, b(k,k+1)=k^2, c=0 */
SG_API sg_status sg_graph_paper_path(size_t n, sg_graph** out);

/* c_M: first `keep` entries of c, zero afterwards; c and out hold one value
 * per vertex */
SG_API sg_status sg_graph_truncate_potential(const sg_graph* g, const double* c,
                                             size_t keep, double* out);

/* ---- rule-defined families ------------------------------------------- */

/* value of a rule at the 1-based vertex index */
typedef double (*sg_rule_fn)(size_t index, void* user_data);

SG_API sg_status sg_family_paper_path(sg_family** out);
SG_API sg_status sg_family_custom(sg_rule_fn m_rule, sg_rule_fn b_rule,
                                  sg_rule_fn c_rule, void* user_data,
                                  sg_family** out);
SG_API void sg_family_free(sg_family* f);

/* finite section on vertices 1..n; Dirichlet folds the dropped crossing
 * edge into the potential of the boundary vertex */
SG_API sg_status sg_family_truncate(const sg_family* f, size_t n,
                                    sg_flavor flavor, sg_graph** out);

/* ---- operator --------------------------------------------------------- */

SG_API sg_status sg_operator_assemble(const sg_graph* g, sg_operator** out);
SG_API void sg_operator_free(sg_operator* op);

SG_API size_t sg_operator_dim(const sg_operator* op);
SG_API sg_status sg_operator_entry(const sg_operator* op, size_t i, size_t j,
                                   double* out);
SG_API double sg_operator_inf_norm(const sg_operator* op);
SG_API double sg_operator_max_potential_ratio(const sg_operator* op);
SG_API sg_flavor sg_operator_flavor(const sg_operator* op);

/* (L f)(x) from the defining formula, independent of the matrix */
SG_API sg_status sg_operator_apply(const sg_operator* op, const double* f,
                                   double* out);
/* Q_{b,c}(f,g) */
SG_API sg_status sg_quadratic_form(const sg_graph* g, const double* f,
                                   const double* g_vec, double* out);

/* ---- spectrum --------------------------------------------------------- */

SG_API sg_status sg_spectrum_compute(const sg_operator* op, sg_spectrum** out);
SG_API void sg_spectrum_free(sg_spectrum* s);

SG_API size_t sg_spectrum_size(const sg_spectrum* s);
SG_API sg_status sg_spectrum_eigenvalue(const sg_spectrum* s, size_t n, double* out);
/* eigenfunction values, one per vertex */
SG_API sg_status sg_spectrum_eigenfunction(const sg_spectrum* s, size_t n,
                                           double* out);
SG_API sg_status sg_spectrum_residual(const sg_spectrum* s, size_t n, double* out);
SG_API double sg_spectrum_residual_bound(const sg_spectrum* s);
/* #{ n : lambda_n <= t } */
SG_API size_t sg_spectrum_count_below(const sg_spectrum* s, double t);

/* eigenvalues by an independent Jacobi rotation sweep, ascending; out holds
 * sg_operator_dim doubles */
SG_API sg_status sg_jacobi_eigenvalues(const sg_operator* op, double* out);

/* ---- heat kernel ------------------------------------------------------ */

SG_API sg_status sg_heat_kernel(const sg_spectrum* s, double t, size_t x,
                                size_t y, double* out);
SG_API sg_status sg_heat_apply(const sg_spectrum* s, double t, const double* f,
                               double* out);
SG_API sg_status sg_heat_kernel_via_indicators(const sg_operator* op, double t,
                                               size_t x, size_t y, double* out);

/* ---- analysis --------------------------------------------------------- */

/* d(x) = |m(x) sum_n |f_n(x)|^2 - 1|; out holds one value per vertex */
SG_API sg_status sg_local_weyl_defects(const sg_spectrum* s, double* out);

/* compares the spectra of the graph with and without the added potential c */
SG_API sg_status sg_spectral_comparison(const sg_graph* g, const double* c,
                                        sg_comparison** out);
SG_API void sg_comparison_free(sg_comparison* r);
SG_API size_t sg_comparison_size(const sg_comparison* r);
SG_API sg_status sg_comparison_lambda_base(const sg_comparison* r, size_t n,
                                           double* out);
SG_API sg_status sg_comparison_lambda_shifted(const sg_comparison* r, size_t n,
                                              double* out);
SG_API sg_status sg_comparison_diff(const sg_comparison* r, size_t n, double* out);
SG_API sg_status sg_comparison_partial_sum(const sg_comparison* r, size_t n,
                                           double* out);
SG_API double sg_comparison_target(const sg_comparison* r);
SG_API double sg_comparison_discrepancy(const sg_comparison* r);

/* d/dtau lambda_n(tau c); SG_ERR_DEGENERATE when the eigenvalue is not
 * numerically simple at tau */
SG_API sg_status sg_hadamard_derivative(const sg_graph* g, const double* c,
                                        double tau, size_t n, double* out);
/* central difference over [tau-h, tau+h]; the stencil must stay in [0,1] */
SG_API sg_status sg_hadamard_fd(const sg_graph* g, const double* c, double tau,
                                size_t n, double h, double* out);

SG_API sg_status sg_ambarzumian_check(const sg_spectrum* with_potential,
                                      const sg_spectrum* base, const sg_graph* g,
                                      const double* c, double tol,
                                      sg_verdict* out);

/* comparison study across truncation sizes (both flavors per size); the
 * potential rule uses the closed-form grammar of sg_potential_parse */
SG_API sg_status sg_convergence_study(const sg_family* f, const char* c_rule,
                                      const size_t* sizes, size_t n_sizes,
                                      size_t gap_count, sg_convergence** out);
SG_API void sg_convergence_free(sg_convergence* s);
/* results are indexed 0..2*n_sizes-1, size-major, Neumann before Dirichlet */
SG_API size_t sg_convergence_count(const sg_convergence* s);
SG_API sg_status sg_convergence_result_size(const sg_convergence* s, size_t i,
                                            size_t* out);
SG_API sg_status sg_convergence_result_flavor(const sg_convergence* s, size_t i,
                                              sg_flavor* out);
SG_API sg_status sg_convergence_result_sum(const sg_convergence* s, size_t i,
                                           double* out);
SG_API sg_status sg_convergence_result_target(const sg_convergence* s, size_t i,
                                              double* out);
SG_API sg_status sg_convergence_result_discrepancy(const sg_convergence* s,
                                                   size_t i, double* out);
SG_API sg_status sg_convergence_result_gap(const sg_convergence* s, size_t i,
                                           size_t k, double* out);
SG_API sg_tail_kind sg_convergence_tail_kind(const sg_convergence* s);
SG_API sg_status sg_convergence_tail_bounds(const sg_convergence* s,
                                            size_t size_index, double* lower,
                                            double* upper);

/* ---- potential specs --------------------------------------------------- */

/* closed form `const | [a*] n [^k] [+ b]` (integer k, negative allowed) or a
 * path to a per-vertex value file; fills out[0..n-1] */
SG_API sg_status sg_potential_parse(const char* spec, size_t n, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SPECGRAPH_H */
