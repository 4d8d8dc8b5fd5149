#ifndef SPECGRAPH_HEAT_HPP
#define SPECGRAPH_HEAT_HPP

#include <span>
#include <vector>

#include "specgraph/eigensolve.hpp"

namespace specgraph {

/// Heat kernel of e^{-tL} as the Mercer sum over a computed spectrum,
///
///     p_t(x,y) = sum_n e^{-t lambda_n} f_n(x) f_n(y),
///
/// with t = 0 admitted by convention and returning the completeness kernel
/// delta_{xy}/m(x).  Lightweight view; the Spectrum must outlive it.
class HeatKernel {
public:
    explicit HeatKernel(const Spectrum& spectrum);

    double kernel(double t, std::size_t x, std::size_t y) const;

    /// (e^{-tL} f)(x) through the spectral expansion of f.
    std::vector<double> semigroup_apply(double t, std::span<const double> f) const;

    const Spectrum& spectrum() const noexcept { return *spectrum_; }

private:
    const Spectrum* spectrum_;
};

/// p_t(x,y) = <1_{x}, e^{-tL} 1_{y}> / (m(x) m(y)), evaluated through
/// indicator functions and its own eigendecomposition of `op`; serves as the
/// independent route against HeatKernel::kernel.
double heat_kernel_via_indicators(const OperatorMatrix& op, double t,
                                  std::size_t x, std::size_t y);

} // namespace specgraph

#endif
