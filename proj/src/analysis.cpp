#include "specgraph/analysis.hpp"

#include <cmath>
#include <string>

#include "specgraph/errors.hpp"
#include "specgraph/operator.hpp"

namespace specgraph {

namespace {

void check_comparison_potential(const Graph& graph, std::span<const double> c) {
    if (c.size() != graph.order())
        raise(ErrorCode::Dimension,
              "potential has " + std::to_string(c.size()) + " entries, graph has " +
                  std::to_string(graph.order()) + " vertices");
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (!std::isfinite(c[x]) || c[x] < 0.0)
            raise(ErrorCode::InvalidArgument,
                  "comparison potential must be finite and nonnegative, c(" +
                      graph.display_label(x) + ") = " + std::to_string(c[x]));
    }
}

Graph shifted_graph(const Graph& graph, std::span<const double> c, double tau) {
    std::vector<double> total(graph.order());
    for (std::size_t x = 0; x < graph.order(); ++x)
        total[x] = graph.potentials()[x] + tau * c[x];
    return graph.with_potential(total);
}

// relative-gap simplicity test used by the eigenvalue derivative
bool is_simple(const std::vector<double>& lambdas, std::size_t n) {
    const double tol = 1e-8 * (1.0 + std::abs(lambdas[n]));
    if (n > 0 && lambdas[n] - lambdas[n - 1] < tol)
        return false;
    if (n + 1 < lambdas.size() && lambdas[n + 1] - lambdas[n] < tol)
        return false;
    return true;
}

} // namespace

ComparisonReport spectral_comparison(const Graph& graph, std::span<const double> c) {
    check_comparison_potential(graph, c);

    const Spectrum base = eigendecompose(assemble(graph));
    const Spectrum shifted = eigendecompose(assemble(shifted_graph(graph, c, 1.0)));

    const std::size_t n = graph.order();
    ComparisonReport report;
    report.lambdas_base = base.eigenvalues();
    report.lambdas_shifted = shifted.eigenvalues();
    report.diffs.resize(n);
    report.partial_sums.resize(n);
    double running = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        report.diffs[k] = report.lambdas_shifted[k] - report.lambdas_base[k];
        running += report.diffs[k];
        report.partial_sums[k] = running;
    }
    double target = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        target += c[x] / graph.measures()[x];
    report.target = target;
    report.discrepancy = std::abs(running - target);
    return report;
}

std::vector<double> local_weyl_defects(const Spectrum& spectrum) {
    if (!spectrum.complete())
        raise(ErrorCode::Dimension,
              "local Weyl law needs all " + std::to_string(spectrum.dimension()) +
                  " eigenpairs, got " + std::to_string(spectrum.size()));
    const std::size_t n = spectrum.dimension();
    std::vector<double> defects(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        double sum = 0.0;
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
            const double fx = spectrum.eigenfunction(k)[x];
            sum += fx * fx;
        }
        defects[x] = std::abs(spectrum.measure()[x] * sum - 1.0);
    }
    return defects;
}

double hadamard_derivative(const Graph& graph, std::span<const double> c,
                           double tau, std::size_t n) {
    check_comparison_potential(graph, c);
    if (!(tau >= 0.0 && tau <= 1.0))
        raise(ErrorCode::InvalidArgument,
              "tau must lie in [0,1], got " + std::to_string(tau));
    if (n >= graph.order())
        raise(ErrorCode::InvalidArgument,
              "eigenvalue index " + std::to_string(n) + " out of range");

    const Spectrum spectrum = eigendecompose(assemble(shifted_graph(graph, c, tau)));
    if (!is_simple(spectrum.eigenvalues(), n))
        raise(ErrorCode::DegenerateEigenvalue,
              "eigenvalue " + std::to_string(n) + " is not numerically simple at tau=" +
                  std::to_string(tau));

    const auto f = spectrum.eigenfunction(n);
    double derivative = 0.0;
    for (std::size_t x = 0; x < graph.order(); ++x)
        derivative += c[x] * f[x] * f[x];
    return derivative;
}

double hadamard_fd_oracle(const Graph& graph, std::span<const double> c,
                          double tau, std::size_t n, double h) {
    check_comparison_potential(graph, c);
    if (!(h > 0.0))
        raise(ErrorCode::InvalidArgument, "step h must be positive");
    if (tau - h < 0.0 || tau + h > 1.0)
        raise(ErrorCode::InvalidArgument,
              "stencil [" + std::to_string(tau - h) + ", " + std::to_string(tau + h) +
                  "] leaves [0,1]");
    if (n >= graph.order())
        raise(ErrorCode::InvalidArgument,
              "eigenvalue index " + std::to_string(n) + " out of range");

    const Spectrum lo = eigendecompose(assemble(shifted_graph(graph, c, tau - h)));
    const Spectrum hi = eigendecompose(assemble(shifted_graph(graph, c, tau + h)));
    if (!is_simple(lo.eigenvalues(), n) || !is_simple(hi.eigenvalues(), n))
        raise(ErrorCode::DegenerateEigenvalue,
              "eigenvalue " + std::to_string(n) +
                  " is not numerically simple across the stencil");

    // branch tracking: the n-th eigenvectors at both ends must overlap
    const auto f_lo = lo.eigenfunction(n);
    const auto f_hi = hi.eigenfunction(n);
    double overlap = 0.0;
    for (std::size_t x = 0; x < graph.order(); ++x)
        overlap += f_lo[x] * f_hi[x] * lo.measure()[x];
    if (std::abs(overlap) < 0.70710678118654752)
        raise(ErrorCode::DegenerateEigenvalue,
              "eigenvalue crossing detected inside the stencil at index " +
                  std::to_string(n));

    return (hi.eigenvalue(n) - lo.eigenvalue(n)) / (2.0 * h);
}

const char* verdict_name(AmbarzumianVerdict verdict) {
    switch (verdict) {
    case AmbarzumianVerdict::ConsistentWithZero:
        return "consistent-with-zero";
    case AmbarzumianVerdict::SpectraDiffer:
        return "spectra-differ";
    case AmbarzumianVerdict::Contradiction:
        return "contradiction";
    }
    return "?";
}

AmbarzumianVerdict ambarzumian_check(const Spectrum& spectrum_c,
                                     const Spectrum& spectrum_base,
                                     std::span<const double> measure,
                                     std::span<const double> c, double tol) {
    const std::size_t n = spectrum_base.size();
    if (spectrum_c.size() != n || measure.size() != n || c.size() != n)
        raise(ErrorCode::Dimension, "ambarzumian check needs matching dimensions");

    double max_gap = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        max_gap = std::max(max_gap, std::abs(spectrum_c.eigenvalue(k) -
                                             spectrum_base.eigenvalue(k)));
    if (max_gap > tol)
        return AmbarzumianVerdict::SpectraDiffer;

    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        sum += c[x] / measure[x];
    return sum > static_cast<double>(n) * tol
               ? AmbarzumianVerdict::Contradiction
               : AmbarzumianVerdict::ConsistentWithZero;
}

ConvergenceStudy convergence_study(const GraphFamily& family,
                                   const PotentialSpec& c_rule,
                                   std::span<const std::size_t> sizes,
                                   std::size_t gap_count) {
    if (sizes.empty())
        raise(ErrorCode::InvalidArgument, "convergence study needs at least one size");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] >= sizes[i + 1])
            raise(ErrorCode::InvalidArgument, "sizes must be strictly ascending");
    if (c_rule.kind() != PotentialSpec::Kind::Formula)
        raise(ErrorCode::InvalidArgument,
              "convergence study needs a closed-form potential rule");

    ConvergenceStudy study;
    study.sizes.assign(sizes.begin(), sizes.end());
    study.gap_count = gap_count;

    // closed-form tail of sum_{n>N} c(n)/m(n): only the paper family with a
    // pure monomial rule c(n) = a*n^k has one; the ratio is then a*n^(k+4)
    if (family.kind() == GraphFamily::Kind::PaperPath && c_rule.is_monomial()) {
        const double a = c_rule.scale();
        const int p = c_rule.exponent() + 4;
        if (a == 0.0) {
            study.tail_kind = TailKind::Bracket;
            for (std::size_t i = 0; i < sizes.size(); ++i)
                study.tail_bounds.emplace_back(0.0, 0.0);
        } else if (a > 0.0 && p < -1) {
            // integral comparison: a*(N+1)^(p+1)/(-p-1) < tail < a*N^(p+1)/(-p-1)
            study.tail_kind = TailKind::Bracket;
            for (const std::size_t size : sizes) {
                const double lower =
                    a * std::pow(static_cast<double>(size + 1), p + 1) / (-p - 1);
                const double upper =
                    a * std::pow(static_cast<double>(size), p + 1) / (-p - 1);
                study.tail_bounds.emplace_back(lower, upper);
            }
        } else {
            study.tail_kind = TailKind::Divergent;
        }
    }

    for (const std::size_t size : sizes) {
        const std::vector<double> c = c_rule.evaluate(size);
        for (const TruncationFlavor flavor :
             {TruncationFlavor::Neumann, TruncationFlavor::Dirichlet}) {
            try {
                SizeFlavorResult result;
                result.size = size;
                result.flavor = flavor;
                result.report = spectral_comparison(family.truncate(size, flavor), c);
                const std::size_t keep = std::min(gap_count, size);
                result.leading_diffs.assign(result.report.diffs.begin(),
                                            result.report.diffs.begin() + keep);
                study.results.push_back(std::move(result));
            } catch (const Error& e) {
                raise(e.code(), "size " + std::to_string(size) + " (" +
                                    flavor_name(flavor) + "): " + e.what());
            }
        }
    }
    return study;
}

} // namespace specgraph
