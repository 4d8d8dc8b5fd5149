#ifndef SPECGRAPH_OPERATOR_HPP
#define SPECGRAPH_OPERATOR_HPP

#include <span>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/matrix.hpp"

namespace specgraph {

/// Matrix realization of L_{b,c} on ell^2(X,m) after the unitary change to
/// unweighted coordinates:
///
///     A = M^{1/2} L M^{-1/2},
///     A(x,x) = (deg(x) + c(x)) / m(x),
///     A(x,y) = -b(x,y) / sqrt(m(x) m(y))      (x != y).
///
/// A is symmetric with the same eigenvalues as L; a unit eigenvector v of A
/// maps back to the ell^2(X,m)-normalized eigenfunction f(x) = v(x)/sqrt(m(x)).
class OperatorMatrix {
public:
    OperatorMatrix(Matrix a, Graph graph, TruncationFlavor flavor);

    std::size_t dimension() const noexcept { return a_.size(); }
    const Matrix& matrix() const noexcept { return a_; }
    double entry(std::size_t i, std::size_t j) const { return a_(i, j); }
    double inf_norm() const noexcept { return inf_norm_; }

    const Graph& graph() const noexcept { return graph_; }
    TruncationFlavor flavor() const noexcept { return flavor_; }

    /// max_x c(x)/m(x); the bounded-potential hypothesis of the eigenvalue
    /// derivative degrades when this grows along a truncation family.
    double max_potential_ratio() const;

private:
    Matrix a_;
    Graph graph_;
    TruncationFlavor flavor_;
    double inf_norm_;
};

/// Builds the matrix above.  Throws ErrorCode::InvalidGraph carrying the
/// validation report if the graph violates an invariant.
OperatorMatrix assemble(const Graph& graph);

/// (L f)(x) evaluated directly from the defining formula
///     (1/m(x)) sum_y b(x,y) (f(x) - f(y)) + (c(x)/m(x)) f(x),
/// independent of the assembled matrix.
std::vector<double> apply_operator(const OperatorMatrix& op, std::span<const double> f);

/// Q_{b,c}(f,g) = (1/2) sum_{x,y} b(x,y)(f(x)-f(y))(g(x)-g(y)) + sum_x c(x) f(x) g(x).
double quadratic_form(const Graph& graph, std::span<const double> f,
                      std::span<const double> g);

} // namespace specgraph

#endif
