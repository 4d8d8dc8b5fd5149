#include "specgraph/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "specgraph/errors.hpp"

namespace specgraph {

namespace {

// Householder reduction of the symmetric matrix a to tridiagonal form.
// On return a holds the accumulated orthogonal transform Q (A = Q T Q^T),
// d the diagonal of T and e[0..n-2] its subdiagonal.
void householder_tridiagonalize(Matrix& a, std::vector<double>& d,
                                std::vector<double>& e) {
    const std::size_t n = a.size();
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (std::size_t i = n; i-- > 1;) {
        const std::size_t l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k)
                scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k)
                        g += a(j, k) * a(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k)
                        g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;

    // accumulate the transform
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k < i; ++k)
                    g += a(i, k) * a(k, j);
                for (std::size_t k = 0; k < i; ++k)
                    a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j)
            a(j, i) = a(i, j) = 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = e[i + 1];
    if (n > 0)
        e[n - 1] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of z
// alongside.  d returns the eigenvalues, column j of z the eigenvector of
// d[j].  Throws after `max_sweeps` sweeps on a single eigenvalue.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Matrix& z,
                    int max_sweeps) {
    const std::size_t n = d.size();
    if (n == 0)
        return;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd)
                    break;
            }
            if (m != l) {
                if (iter++ == max_sweeps)
                    raise(ErrorCode::NoConvergence,
                          "eigenvalue " + std::to_string(l) +
                              " failed to converge within " +
                              std::to_string(max_sweeps) + " QL sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (underflow)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// first component of largest magnitude made positive, ties to lowest index
void fix_column_sign(Matrix& v, std::size_t col) {
    const std::size_t n = v.size();
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double mag = std::abs(v(k, col));
        if (mag > best) {
            best = mag;
            arg = k;
        }
    }
    if (v(arg, col) < 0.0)
        for (std::size_t k = 0; k < n; ++k)
            v(k, col) = -v(k, col);
}

void gram_schmidt_columns(Matrix& v, std::size_t first, std::size_t last) {
    const std::size_t n = v.size();
    for (std::size_t j = first; j <= last; ++j) {
        for (std::size_t k = first; k < j; ++k) {
            double dot = 0.0;
            for (std::size_t x = 0; x < n; ++x)
                dot += v(x, k) * v(x, j);
            for (std::size_t x = 0; x < n; ++x)
                v(x, j) -= dot * v(x, k);
        }
        double norm = 0.0;
        for (std::size_t x = 0; x < n; ++x)
            norm += v(x, j) * v(x, j);
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (std::size_t x = 0; x < n; ++x)
                v(x, j) /= norm;
    }
}

} // namespace

Spectrum::Spectrum(std::vector<double> lambdas, Matrix eigenfunctions,
                   std::vector<double> residuals, std::vector<double> measure)
    : lambdas_(std::move(lambdas)), funcs_(std::move(eigenfunctions)),
      residuals_(std::move(residuals)), measure_(std::move(measure)) {
    for (double r : residuals_)
        residual_bound_ = std::max(residual_bound_, r);
}

std::span<const double> Spectrum::eigenfunction(std::size_t n) const {
    if (n >= size())
        raise(ErrorCode::InvalidArgument,
              "eigenpair index " + std::to_string(n) + " out of range");
    return funcs_.row(n);
}

std::size_t Spectrum::count_below(double t) const {
    return static_cast<std::size_t>(
        std::upper_bound(lambdas_.begin(), lambdas_.end(), t) - lambdas_.begin());
}

Spectrum eigendecompose(const OperatorMatrix& op) {
    const std::size_t n = op.dimension();
    const Matrix& a = op.matrix();

    Matrix z = a; // consumed by the reduction, returns Q
    std::vector<double> d;
    std::vector<double> e;
    householder_tridiagonalize(z, d, e);
    tridiagonal_ql(d, e, z, 30);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

    std::vector<double> lambdas(n);
    Matrix v(n);
    for (std::size_t j = 0; j < n; ++j) {
        lambdas[j] = d[perm[j]];
        for (std::size_t k = 0; k < n; ++k)
            v(k, j) = z(k, perm[j]);
    }

    // re-orthonormalize numerically degenerate clusters
    std::size_t start = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        const bool split =
            j == n || (lambdas[j] - lambdas[j - 1]) >=
                          1e-8 * (1.0 + std::abs(lambdas[j]));
        if (split) {
            if (j - start > 1)
                gram_schmidt_columns(v, start, j - 1);
            start = j;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        fix_column_sign(v, j);

    Matrix av(n); // A * V, accumulated row-wise for cache locality
    for (std::size_t i = 0; i < n; ++i) {
        auto out = av.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            const auto vk = v.row(k);
            for (std::size_t j = 0; j < n; ++j)
                out[j] += aik * vk[j];
        }
    }
    std::vector<double> residuals(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double r = av(i, j) - lambdas[j] * v(i, j);
            residuals[j] += r * r;
        }
    for (std::size_t j = 0; j < n; ++j)
        residuals[j] = std::sqrt(residuals[j]);
    const double cert = 1e-9 * (1.0 + op.inf_norm());
    for (std::size_t j = 0; j < n; ++j) {
        if (residuals[j] > cert)
            raise(ErrorCode::NoConvergence,
                  "eigenpair " + std::to_string(j) + " residual " +
                      std::to_string(residuals[j]) + " exceeds certificate " +
                      std::to_string(cert));
    }

    const auto& m = op.graph().measures();
    Matrix funcs(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t x = 0; x < n; ++x)
            funcs(j, x) = v(x, j) / std::sqrt(m[x]);

    return Spectrum(std::move(lambdas), std::move(funcs), std::move(residuals),
                    m);
}

std::vector<double> jacobi_eigenvalues(const Matrix& a_in, int max_sweeps) {
    const std::size_t n = a_in.size();
    Matrix a = a_in;
    std::vector<double> d(n), b(n), z(n, 0.0);
    for (std::size_t p = 0; p < n; ++p)
        b[p] = d[p] = a(p, p);

    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += std::abs(a(p, q));
        if (off == 0.0) {
            std::sort(d.begin(), d.end());
            return d;
        }
        const double thresh =
            (sweep < 4) ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = 100.0 * std::abs(a(p, q));
                if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
                    std::abs(d[q]) + g == std::abs(d[q])) {
                    a(p, q) = 0.0;
                } else if (std::abs(a(p, q)) > thresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (std::abs(h) + g == std::abs(h)) {
                        t = a(p, q) / h;
                    } else {
                        const double theta = 0.5 * h / a(p, q);
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0)
                            t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * a(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a(p, q) = 0.0;
                    auto rotate = [&](std::size_t i, std::size_t j, std::size_t k,
                                      std::size_t l) {
                        const double gij = a(i, j);
                        const double akl = a(k, l);
                        a(i, j) = gij - s * (akl + gij * tau);
                        a(k, l) = akl + s * (gij - akl * tau);
                    };
                    for (std::size_t j = 0; j < p; ++j)
                        rotate(j, p, j, q);
                    for (std::size_t j = p + 1; j < q; ++j)
                        rotate(p, j, j, q);
                    for (std::size_t j = q + 1; j < n; ++j)
                        rotate(p, j, q, j);
                }
            }
        }
        for (std::size_t p = 0; p < n; ++p) {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    raise(ErrorCode::NoConvergence,
          "Jacobi sweep budget (" + std::to_string(max_sweeps) + ") exhausted");
}

} // namespace specgraph
