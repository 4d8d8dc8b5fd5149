#ifndef SPECGRAPH_MATRIX_HPP
#define SPECGRAPH_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace specgraph {

/// Minimal dense row-major square matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

    std::span<double> row(std::size_t i) noexcept { return {a_.data() + i * n_, n_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {a_.data() + i * n_, n_}; }

    std::span<const double> data() const noexcept { return a_; }
    std::span<double> data() noexcept { return a_; }

    void set_identity();

    /// Max absolute row sum.
    double inf_norm() const;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

} // namespace specgraph

#endif
