#ifndef SPECGRAPH_ANALYSIS_HPP
#define SPECGRAPH_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specgraph/eigensolve.hpp"
#include "specgraph/family.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/potential_spec.hpp"

namespace specgraph {

/// Per-index eigenvalue differences between the induced realization L_c and
/// the base realization on the same graph, against the exact finite target
/// sum_x c(x)/m(x).
struct ComparisonReport {
    std::vector<double> lambdas_base;    // lambda_n(0)
    std::vector<double> lambdas_shifted; // lambda_n(c)
    std::vector<double> diffs;           // lambda_n(c) - lambda_n(0)
    std::vector<double> partial_sums;    // running sums of diffs
    double target = 0.0;                 // sum_x c(x)/m(x)
    double discrepancy = 0.0;            // |partial_sums.back() - target|
};

/// Solves both spectra and fills the report.  The graph's own potential is
/// the base; `c` is the added comparison potential (entrywise >= 0).
ComparisonReport spectral_comparison(const Graph& graph, std::span<const double> c);

/// d(x) = | m(x) * sum_n |f_n(x)|^2 - 1 | for every vertex; requires a
/// complete spectrum.
std::vector<double> local_weyl_defects(const Spectrum& spectrum);

/// d/dtau lambda_n(tau c) = sum_x c(x) |f_n^{tau c}(x)|^2, evaluated at the
/// given tau in [0,1].  Refuses eigenvalues that are not numerically simple
/// (relative gap < 1e-8), since the derivative only exists almost
/// everywhere.
double hadamard_derivative(const Graph& graph, std::span<const double> c,
                           double tau, std::size_t n);

/// Central difference (lambda_n((tau+h)c) - lambda_n((tau-h)c)) / (2h).
/// The stencil must stay inside [0,1]; an eigenvalue crossing inside the
/// stencil (detected through the eigenvector overlap) is an error.
double hadamard_fd_oracle(const Graph& graph, std::span<const double> c,
                          double tau, std::size_t n, double h);

enum class AmbarzumianVerdict {
    ConsistentWithZero, // spectra agree within tol and sum c/m <= N*tol
    SpectraDiffer,      // hypothesis of the inverse theorem not met
    Contradiction,      // spectra agree but sum c/m > N*tol: impossible data
};

const char* verdict_name(AmbarzumianVerdict verdict);

AmbarzumianVerdict ambarzumian_check(const Spectrum& spectrum_c,
                                     const Spectrum& spectrum_base,
                                     std::span<const double> measure,
                                     std::span<const double> c, double tol);

/// Closed-form information about the infinite comparison series
/// sum_{n>N} c(n)/m(n) of a truncation family.
enum class TailKind {
    Bracket,   // summable monomial ratio; per-size bounds available
    Divergent, // ratio not summable: the +infinity branch of the identity
    Unknown,   // no closed form registered
};

struct SizeFlavorResult {
    std::size_t size = 0;
    TruncationFlavor flavor = TruncationFlavor::Neumann;
    ComparisonReport report;
    std::vector<double> leading_diffs; // first K entries of report.diffs
};

struct ConvergenceStudy {
    std::vector<std::size_t> sizes;
    std::size_t gap_count = 0;
    std::vector<SizeFlavorResult> results; // size-major, Neumann then Dirichlet
    TailKind tail_kind = TailKind::Unknown;
    /// Integral-comparison bounds on sum_{n>N} c(n)/m(n), aligned with
    /// `sizes`; only meaningful for TailKind::Bracket.
    std::vector<std::pair<double, double>> tail_bounds;
};

/// Truncates the family at every requested size with both flavors, runs the
/// spectral comparison with the rule-defined potential and records the first
/// `gap_count` eigenvalue differences per solve.
ConvergenceStudy convergence_study(const GraphFamily& family,
                                   const PotentialSpec& c_rule,
                                   std::span<const std::size_t> sizes,
                                   std::size_t gap_count);

} // namespace specgraph

#endif
