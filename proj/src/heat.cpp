#include "specgraph/heat.hpp"

#include <cmath>
#include <string>

#include "specgraph/errors.hpp"

namespace specgraph {

namespace {

void check_time(double t) {
    if (!(t >= 0.0))
        raise(ErrorCode::InvalidArgument,
              "heat kernel time must be nonnegative, got " + std::to_string(t));
}

void check_vertex(const Spectrum& s, std::size_t x) {
    if (x >= s.dimension())
        raise(ErrorCode::InvalidArgument,
              "vertex index " + std::to_string(x) + " out of range");
}

} // namespace

HeatKernel::HeatKernel(const Spectrum& spectrum) : spectrum_(&spectrum) {
    if (!spectrum.complete())
        raise(ErrorCode::Dimension,
              "heat kernel needs a complete spectrum (" +
                  std::to_string(spectrum.size()) + " of " +
                  std::to_string(spectrum.dimension()) + " pairs)");
}

double HeatKernel::kernel(double t, std::size_t x, std::size_t y) const {
    check_time(t);
    const Spectrum& s = *spectrum_;
    check_vertex(s, x);
    check_vertex(s, y);
    if (t == 0.0) // completeness kernel by convention
        return (x == y) ? 1.0 / s.measure()[x] : 0.0;
    double sum = 0.0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        const auto f = s.eigenfunction(n);
        sum += std::exp(-t * s.eigenvalue(n)) * f[x] * f[y];
    }
    return sum;
}

std::vector<double> HeatKernel::semigroup_apply(double t,
                                                std::span<const double> f) const {
    check_time(t);
    const Spectrum& s = *spectrum_;
    const std::size_t n = s.dimension();
    if (f.size() != n)
        raise(ErrorCode::Dimension,
              "function has " + std::to_string(f.size()) + " entries, expected " +
                  std::to_string(n));
    if (t == 0.0)
        return std::vector<double>(f.begin(), f.end());

    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const auto fk = s.eigenfunction(k);
        double coeff = 0.0; // <f_k, f>_{ell^2(X,m)}
        for (std::size_t x = 0; x < n; ++x)
            coeff += fk[x] * f[x] * s.measure()[x];
        coeff *= std::exp(-t * s.eigenvalue(k));
        for (std::size_t x = 0; x < n; ++x)
            out[x] += coeff * fk[x];
    }
    return out;
}

double heat_kernel_via_indicators(const OperatorMatrix& op, double t,
                                  std::size_t x, std::size_t y) {
    check_time(t);
    const std::size_t n = op.dimension();
    if (x >= n || y >= n)
        raise(ErrorCode::InvalidArgument, "vertex index out of range");

    const Spectrum spectrum = eigendecompose(op);
    HeatKernel hk(spectrum);

    std::vector<double> indicator_y(n, 0.0);
    indicator_y[y] = 1.0;
    const std::vector<double> evolved = hk.semigroup_apply(t, indicator_y);

    // <1_{x}, e^{-tL} 1_{y}> / (m(x) m(y))
    const double inner = evolved[x] * spectrum.measure()[x];
    return inner / (spectrum.measure()[x] * spectrum.measure()[y]);
}

} // namespace specgraph
