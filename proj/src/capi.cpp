#include "specgraph.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "specgraph/analysis.hpp"
#include "specgraph/eigensolve.hpp"
#include "specgraph/family.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph_io.hpp"
#include "specgraph/heat.hpp"
#include "specgraph/operator.hpp"
#include "specgraph/potential_spec.hpp"

using namespace specgraph;

struct sg_graph {
    Graph graph;
};
struct sg_family {
    GraphFamily family;
};
struct sg_operator {
    OperatorMatrix op;
};
struct sg_spectrum {
    Spectrum spectrum;
};
struct sg_comparison {
    ComparisonReport report;
};
struct sg_convergence {
    ConvergenceStudy study;
};

namespace {

thread_local std::string g_last_error;

sg_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return SG_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidGraph:
        return SG_ERR_INVALID_GRAPH;
    case ErrorCode::Parse:
        return SG_ERR_PARSE;
    case ErrorCode::Io:
        return SG_ERR_IO;
    case ErrorCode::Dimension:
        return SG_ERR_DIMENSION;
    case ErrorCode::NoConvergence:
        return SG_ERR_NO_CONVERGENCE;
    case ErrorCode::DegenerateEigenvalue:
        return SG_ERR_DEGENERATE;
    }
    return SG_ERR_UNKNOWN;
}

sg_status fail(sg_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

sg_status fail_null(const char* what) {
    return fail(SG_ERR_NULL_ARGUMENT, std::string(what) + " must not be NULL");
}

// runs the body, translating exceptions into status codes
template <typename Fn> sg_status guarded(Fn&& fn) {
    try {
        fn();
        return SG_OK;
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(SG_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(SG_ERR_UNKNOWN, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sg_status comparison_entry(const sg_comparison* r, size_t n, double* out,
                           const std::vector<double>& values) {
    if (!r || !out)
        return fail_null(r ? "out" : "report");
    if (n >= values.size())
        return fail(SG_ERR_INVALID_ARGUMENT, "index out of range");
    *out = values[n];
    return SG_OK;
}

sg_status convergence_result(const sg_convergence* s, size_t i,
                             const SizeFlavorResult** out) {
    if (!s)
        return fail_null("study");
    if (i >= s->study.results.size())
        return fail(SG_ERR_INVALID_ARGUMENT, "result index out of range");
    *out = &s->study.results[i];
    return SG_OK;
}

} // namespace

extern "C" {

const char* sg_status_name(sg_status status) {
    switch (status) {
    case SG_OK:
        return "ok";
    case SG_ERR_NULL_ARGUMENT:
        return "null argument";
    case SG_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case SG_ERR_INVALID_GRAPH:
        return "invalid graph";
    case SG_ERR_PARSE:
        return "parse error";
    case SG_ERR_IO:
        return "io error";
    case SG_ERR_DIMENSION:
        return "dimension mismatch";
    case SG_ERR_NO_CONVERGENCE:
        return "no convergence";
    case SG_ERR_DEGENERATE:
        return "degenerate eigenvalue";
    case SG_ERR_UNKNOWN:
        return "unknown error";
    }
    return "?";
}

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_string_free(char* s) { delete[] s; }

/* ---- graphs ---------------------------------------------------------- */

sg_status sg_graph_create(size_t order, sg_graph** out) {
    if (!out)
        return fail_null("out");
    return guarded([&] { *out = new sg_graph{Graph(order)}; });
}

void sg_graph_free(sg_graph* g) { delete g; }

size_t sg_graph_order(const sg_graph* g) { return g ? g->graph.order() : 0; }

sg_status sg_graph_set_measure(sg_graph* g, size_t x, double m) {
    if (!g)
        return fail_null("graph");
    return guarded([&] { g->graph.set_measure(x, m); });
}

sg_status sg_graph_set_potential(sg_graph* g, size_t x, double c) {
    if (!g)
        return fail_null("graph");
    return guarded([&] { g->graph.set_potential(x, c); });
}

sg_status sg_graph_set_edge(sg_graph* g, size_t x, size_t y, double b) {
    if (!g)
        return fail_null("graph");
    return guarded([&] { g->graph.set_edge_weight(x, y, b); });
}

sg_status sg_graph_set_label(sg_graph* g, size_t x, const char* label) {
    if (!g || !label)
        return fail_null(g ? "label" : "graph");
    return guarded([&] { g->graph.set_label(x, label); });
}

sg_status sg_graph_get_measure(const sg_graph* g, size_t x, double* out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = g->graph.measure(x); });
}

sg_status sg_graph_get_potential(const sg_graph* g, size_t x, double* out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = g->graph.potential(x); });
}

sg_status sg_graph_get_edge(const sg_graph* g, size_t x, size_t y, double* out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = g->graph.edge_weight(x, y); });
}

sg_status sg_graph_get_label(const sg_graph* g, size_t x, char** out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = copy_string(g->graph.display_label(x)); });
}

sg_status sg_graph_degree(const sg_graph* g, size_t x, double* out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = g->graph.degree(x); });
}

sg_status sg_graph_inner_product(const sg_graph* g, const double* f,
                                 const double* g_vec, double* out) {
    if (!g || !f || !g_vec || !out)
        return fail_null("argument");
    return guarded([&] {
        const std::size_t n = g->graph.order();
        *out = weighted_inner_product(g->graph, {f, n}, {g_vec, n});
    });
}

sg_status sg_graph_validate(const sg_graph* g, char** report) {
    if (!g || !report)
        return fail_null(g ? "report" : "graph");
    return guarded([&] {
        std::string joined;
        for (const auto& item : g->graph.validate()) {
            if (!joined.empty())
                joined += '\n';
            joined += item;
        }
        *report = copy_string(joined);
    });
}

sg_status sg_graph_read_file(const char* path, sg_graph** out) {
    if (!path || !out)
        return fail_null(path ? "out" : "path");
    return guarded([&] { *out = new sg_graph{read_graph_file(path)}; });
}

sg_status sg_graph_write_file(const sg_graph* g, const char* path) {
    if (!g || !path)
        return fail_null(g ? "path" : "graph");
    return guarded([&] { write_graph_file(g->graph, path); });
}

sg_status sg_graph_paper_path(size_t n, sg_graph** out) {
    if (!out)
        return fail_null("out");
    return guarded([&] { *out = new sg_graph{generate_paper_path(n)}; });
}

sg_status sg_graph_truncate_potential(const sg_graph* g, const double* c,
                                      size_t keep, double* out) {
    if (!g || !c || !out)
        return fail_null("argument");
    return guarded([&] {
        const auto truncated = truncate_potential({c, g->graph.order()}, keep);
        std::memcpy(out, truncated.data(), truncated.size() * sizeof(double));
    });
}

/* ---- families --------------------------------------------------------- */

sg_status sg_family_paper_path(sg_family** out) {
    if (!out)
        return fail_null("out");
    return guarded([&] { *out = new sg_family{GraphFamily::paper_path()}; });
}

sg_status sg_family_custom(sg_rule_fn m_rule, sg_rule_fn b_rule, sg_rule_fn c_rule,
                           void* user_data, sg_family** out) {
    if (!out)
        return fail_null("out");
    if (!m_rule || !b_rule || !c_rule)
        return fail_null("rule");
    return guarded([&] {
        auto wrap = [user_data](sg_rule_fn fn) {
            return [fn, user_data](std::size_t k) { return fn(k, user_data); };
        };
        *out = new sg_family{
            GraphFamily::custom(wrap(m_rule), wrap(b_rule), wrap(c_rule))};
    });
}

void sg_family_free(sg_family* f) { delete f; }

sg_status sg_family_truncate(const sg_family* f, size_t n, sg_flavor flavor,
                             sg_graph** out) {
    if (!f || !out)
        return fail_null(f ? "out" : "family");
    return guarded([&] {
        *out = new sg_graph{f->family.truncate(
            n, flavor == SG_FLAVOR_DIRICHLET ? TruncationFlavor::Dirichlet
                                             : TruncationFlavor::Neumann)};
    });
}

/* ---- operator --------------------------------------------------------- */

sg_status sg_operator_assemble(const sg_graph* g, sg_operator** out) {
    if (!g || !out)
        return fail_null(g ? "out" : "graph");
    return guarded([&] { *out = new sg_operator{assemble(g->graph)}; });
}

void sg_operator_free(sg_operator* op) { delete op; }

size_t sg_operator_dim(const sg_operator* op) { return op ? op->op.dimension() : 0; }

sg_status sg_operator_entry(const sg_operator* op, size_t i, size_t j, double* out) {
    if (!op || !out)
        return fail_null(op ? "out" : "operator");
    return guarded([&] {
        if (i >= op->op.dimension() || j >= op->op.dimension())
            raise(ErrorCode::InvalidArgument, "matrix index out of range");
        *out = op->op.entry(i, j);
    });
}

double sg_operator_inf_norm(const sg_operator* op) {
    return op ? op->op.inf_norm() : 0.0;
}

double sg_operator_max_potential_ratio(const sg_operator* op) {
    return op ? op->op.max_potential_ratio() : 0.0;
}

sg_flavor sg_operator_flavor(const sg_operator* op) {
    if (op && op->op.flavor() == TruncationFlavor::Dirichlet)
        return SG_FLAVOR_DIRICHLET;
    return SG_FLAVOR_NEUMANN;
}

sg_status sg_operator_apply(const sg_operator* op, const double* f, double* out) {
    if (!op || !f || !out)
        return fail_null("argument");
    return guarded([&] {
        const auto result = apply_operator(op->op, {f, op->op.dimension()});
        std::memcpy(out, result.data(), result.size() * sizeof(double));
    });
}

sg_status sg_quadratic_form(const sg_graph* g, const double* f,
                            const double* g_vec, double* out) {
    if (!g || !f || !g_vec || !out)
        return fail_null("argument");
    return guarded([&] {
        const std::size_t n = g->graph.order();
        *out = quadratic_form(g->graph, {f, n}, {g_vec, n});
    });
}

/* ---- spectrum --------------------------------------------------------- */

sg_status sg_spectrum_compute(const sg_operator* op, sg_spectrum** out) {
    if (!op || !out)
        return fail_null(op ? "out" : "operator");
    return guarded([&] { *out = new sg_spectrum{eigendecompose(op->op)}; });
}

void sg_spectrum_free(sg_spectrum* s) { delete s; }

size_t sg_spectrum_size(const sg_spectrum* s) { return s ? s->spectrum.size() : 0; }

sg_status sg_spectrum_eigenvalue(const sg_spectrum* s, size_t n, double* out) {
    if (!s || !out)
        return fail_null(s ? "out" : "spectrum");
    return guarded([&] {
        if (n >= s->spectrum.size())
            raise(ErrorCode::InvalidArgument, "eigenpair index out of range");
        *out = s->spectrum.eigenvalue(n);
    });
}

sg_status sg_spectrum_eigenfunction(const sg_spectrum* s, size_t n, double* out) {
    if (!s || !out)
        return fail_null(s ? "out" : "spectrum");
    return guarded([&] {
        const auto f = s->spectrum.eigenfunction(n);
        std::memcpy(out, f.data(), f.size() * sizeof(double));
    });
}

sg_status sg_spectrum_residual(const sg_spectrum* s, size_t n, double* out) {
    if (!s || !out)
        return fail_null(s ? "out" : "spectrum");
    return guarded([&] {
        if (n >= s->spectrum.size())
            raise(ErrorCode::InvalidArgument, "eigenpair index out of range");
        *out = s->spectrum.residual(n);
    });
}

double sg_spectrum_residual_bound(const sg_spectrum* s) {
    return s ? s->spectrum.residual_bound() : 0.0;
}

size_t sg_spectrum_count_below(const sg_spectrum* s, double t) {
    return s ? s->spectrum.count_below(t) : 0;
}

sg_status sg_jacobi_eigenvalues(const sg_operator* op, double* out) {
    if (!op || !out)
        return fail_null(op ? "out" : "operator");
    return guarded([&] {
        const auto values = jacobi_eigenvalues(op->op.matrix());
        std::memcpy(out, values.data(), values.size() * sizeof(double));
    });
}

/* ---- heat kernel ------------------------------------------------------ */

sg_status sg_heat_kernel(const sg_spectrum* s, double t, size_t x, size_t y,
                         double* out) {
    if (!s || !out)
        return fail_null(s ? "out" : "spectrum");
    return guarded([&] { *out = HeatKernel(s->spectrum).kernel(t, x, y); });
}

sg_status sg_heat_apply(const sg_spectrum* s, double t, const double* f,
                        double* out) {
    if (!s || !f || !out)
        return fail_null("argument");
    return guarded([&] {
        const auto result = HeatKernel(s->spectrum)
                                .semigroup_apply(t, {f, s->spectrum.dimension()});
        std::memcpy(out, result.data(), result.size() * sizeof(double));
    });
}

sg_status sg_heat_kernel_via_indicators(const sg_operator* op, double t, size_t x,
                                        size_t y, double* out) {
    if (!op || !out)
        return fail_null(op ? "out" : "operator");
    return guarded([&] { *out = heat_kernel_via_indicators(op->op, t, x, y); });
}

/* ---- analysis --------------------------------------------------------- */

sg_status sg_local_weyl_defects(const sg_spectrum* s, double* out) {
    if (!s || !out)
        return fail_null(s ? "out" : "spectrum");
    return guarded([&] {
        const auto defects = local_weyl_defects(s->spectrum);
        std::memcpy(out, defects.data(), defects.size() * sizeof(double));
    });
}

sg_status sg_spectral_comparison(const sg_graph* g, const double* c,
                                 sg_comparison** out) {
    if (!g || !c || !out)
        return fail_null("argument");
    return guarded([&] {
        *out = new sg_comparison{
            spectral_comparison(g->graph, {c, g->graph.order()})};
    });
}

void sg_comparison_free(sg_comparison* r) { delete r; }

size_t sg_comparison_size(const sg_comparison* r) {
    return r ? r->report.diffs.size() : 0;
}

sg_status sg_comparison_lambda_base(const sg_comparison* r, size_t n, double* out) {
    if (!r)
        return fail_null("report");
    return comparison_entry(r, n, out, r->report.lambdas_base);
}

sg_status sg_comparison_lambda_shifted(const sg_comparison* r, size_t n,
                                       double* out) {
    if (!r)
        return fail_null("report");
    return comparison_entry(r, n, out, r->report.lambdas_shifted);
}

sg_status sg_comparison_diff(const sg_comparison* r, size_t n, double* out) {
    if (!r)
        return fail_null("report");
    return comparison_entry(r, n, out, r->report.diffs);
}

sg_status sg_comparison_partial_sum(const sg_comparison* r, size_t n, double* out) {
    if (!r)
        return fail_null("report");
    return comparison_entry(r, n, out, r->report.partial_sums);
}

double sg_comparison_target(const sg_comparison* r) {
    return r ? r->report.target : 0.0;
}

double sg_comparison_discrepancy(const sg_comparison* r) {
    return r ? r->report.discrepancy : 0.0;
}

sg_status sg_hadamard_derivative(const sg_graph* g, const double* c, double tau,
                                 size_t n, double* out) {
    if (!g || !c || !out)
        return fail_null("argument");
    return guarded([&] {
        *out = hadamard_derivative(g->graph, {c, g->graph.order()}, tau, n);
    });
}

sg_status sg_hadamard_fd(const sg_graph* g, const double* c, double tau, size_t n,
                         double h, double* out) {
    if (!g || !c || !out)
        return fail_null("argument");
    return guarded([&] {
        *out = hadamard_fd_oracle(g->graph, {c, g->graph.order()}, tau, n, h);
    });
}

sg_status sg_ambarzumian_check(const sg_spectrum* with_potential,
                               const sg_spectrum* base, const sg_graph* g,
                               const double* c, double tol, sg_verdict* out) {
    if (!with_potential || !base || !g || !c || !out)
        return fail_null("argument");
    return guarded([&] {
        const auto verdict = ambarzumian_check(
            with_potential->spectrum, base->spectrum, g->graph.measures(),
            {c, g->graph.order()}, tol);
        switch (verdict) {
        case AmbarzumianVerdict::ConsistentWithZero:
            *out = SG_VERDICT_CONSISTENT_WITH_ZERO;
            break;
        case AmbarzumianVerdict::SpectraDiffer:
            *out = SG_VERDICT_SPECTRA_DIFFER;
            break;
        case AmbarzumianVerdict::Contradiction:
            *out = SG_VERDICT_CONTRADICTION;
            break;
        }
    });
}

sg_status sg_convergence_study(const sg_family* f, const char* c_rule,
                               const size_t* sizes, size_t n_sizes,
                               size_t gap_count, sg_convergence** out) {
    if (!f || !c_rule || !sizes || !out)
        return fail_null("argument");
    return guarded([&] {
        const PotentialSpec spec = PotentialSpec::parse(c_rule);
        *out = new sg_convergence{
            convergence_study(f->family, spec, {sizes, n_sizes}, gap_count)};
    });
}

void sg_convergence_free(sg_convergence* s) { delete s; }

size_t sg_convergence_count(const sg_convergence* s) {
    return s ? s->study.results.size() : 0;
}

sg_status sg_convergence_result_size(const sg_convergence* s, size_t i,
                                     size_t* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    *out = r->size;
    return SG_OK;
}

sg_status sg_convergence_result_flavor(const sg_convergence* s, size_t i,
                                       sg_flavor* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    *out = r->flavor == TruncationFlavor::Dirichlet ? SG_FLAVOR_DIRICHLET
                                                    : SG_FLAVOR_NEUMANN;
    return SG_OK;
}

sg_status sg_convergence_result_sum(const sg_convergence* s, size_t i,
                                    double* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    *out = r->report.partial_sums.empty() ? 0.0 : r->report.partial_sums.back();
    return SG_OK;
}

sg_status sg_convergence_result_target(const sg_convergence* s, size_t i,
                                       double* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    *out = r->report.target;
    return SG_OK;
}

sg_status sg_convergence_result_discrepancy(const sg_convergence* s, size_t i,
                                            double* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    *out = r->report.discrepancy;
    return SG_OK;
}

sg_status sg_convergence_result_gap(const sg_convergence* s, size_t i, size_t k,
                                    double* out) {
    const SizeFlavorResult* r = nullptr;
    if (auto st = convergence_result(s, i, &r); st != SG_OK)
        return st;
    if (!out)
        return fail_null("out");
    if (k >= r->leading_diffs.size())
        return fail(SG_ERR_INVALID_ARGUMENT, "gap index out of range");
    *out = r->leading_diffs[k];
    return SG_OK;
}

sg_tail_kind sg_convergence_tail_kind(const sg_convergence* s) {
    if (!s)
        return SG_TAIL_UNKNOWN;
    switch (s->study.tail_kind) {
    case TailKind::Bracket:
        return SG_TAIL_BRACKET;
    case TailKind::Divergent:
        return SG_TAIL_DIVERGENT;
    case TailKind::Unknown:
        return SG_TAIL_UNKNOWN;
    }
    return SG_TAIL_UNKNOWN;
}

sg_status sg_convergence_tail_bounds(const sg_convergence* s, size_t size_index,
                                     double* lower, double* upper) {
    if (!s || !lower || !upper)
        return fail_null("argument");
    if (s->study.tail_kind != TailKind::Bracket)
        return fail(SG_ERR_INVALID_ARGUMENT, "study has no tail bracket");
    if (size_index >= s->study.tail_bounds.size())
        return fail(SG_ERR_INVALID_ARGUMENT, "size index out of range");
    *lower = s->study.tail_bounds[size_index].first;
    *upper = s->study.tail_bounds[size_index].second;
    return SG_OK;
}

/* ---- potential specs --------------------------------------------------- */

sg_status sg_potential_parse(const char* spec, size_t n, double* out) {
    if (!spec || !out)
        return fail_null(spec ? "out" : "spec");
    return guarded([&] {
        const auto values = parse_potential_spec(spec, n);
        std::memcpy(out, values.data(), values.size() * sizeof(double));
    });
}

} // extern "C"
