#include "specgraph/matrix.hpp"

#include <cmath>

namespace specgraph {

void Matrix::set_identity() {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            (*this)(i, j) = (i == j) ? 1.0 : 0.0;
}

double Matrix::inf_norm() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            row_sum += std::abs((*this)(i, j));
        if (row_sum > norm)
            norm = row_sum;
    }
    return norm;
}

} // namespace specgraph
