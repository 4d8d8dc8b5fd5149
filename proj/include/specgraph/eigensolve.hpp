#ifndef SPECGRAPH_EIGENSOLVE_HPP
#define SPECGRAPH_EIGENSOLVE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "specgraph/matrix.hpp"
#include "specgraph/operator.hpp"

namespace specgraph {

/// Full eigendecomposition of an OperatorMatrix with eigenfunctions mapped
/// back to ell^2(X,m): ascending eigenvalues, weighted-orthonormal
/// eigenfunctions f_n(x) = v_n(x)/sqrt(m(x)) and certified residuals
/// r_n = ||A v_n - lambda_n v_n||_2.
class Spectrum {
public:
    Spectrum(std::vector<double> lambdas, Matrix eigenfunctions,
             std::vector<double> residuals, std::vector<double> measure);

    std::size_t size() const noexcept { return lambdas_.size(); }       // eigenpairs
    std::size_t dimension() const noexcept { return measure_.size(); }  // vertices
    bool complete() const noexcept { return size() == dimension(); }

    double eigenvalue(std::size_t n) const { return lambdas_.at(n); }
    const std::vector<double>& eigenvalues() const noexcept { return lambdas_; }

    /// Row n of the eigenfunction matrix, one value per vertex.
    std::span<const double> eigenfunction(std::size_t n) const;

    double residual(std::size_t n) const { return residuals_.at(n); }
    double residual_bound() const noexcept { return residual_bound_; }

    const std::vector<double>& measure() const noexcept { return measure_; }

    /// #{ n : lambda_n <= t }.
    std::size_t count_below(double t) const;

private:
    std::vector<double> lambdas_;
    Matrix funcs_; // row n = f_n
    std::vector<double> residuals_;
    double residual_bound_ = 0.0;
    std::vector<double> measure_;
};

/// Householder reduction to tridiagonal form followed by implicit-shift QL
/// (30 sweeps per eigenvalue), stable ascending sort, Gram-Schmidt
/// re-orthonormalization inside numerically degenerate clusters
/// (gap < 1e-8*(1+|lambda|)) and a deterministic sign convention (first
/// component of largest magnitude positive).  Residuals are computed against
/// the original matrix; the solve fails if the certified bound exceeds
/// 1e-9*(1+||A||_inf).
Spectrum eigendecompose(const OperatorMatrix& op);

/// Cyclic Jacobi rotations, eigenvalues only.  Independent cross-check route
/// for moderate sizes.
std::vector<double> jacobi_eigenvalues(const Matrix& a, int max_sweeps = 50);

} // namespace specgraph

#endif
