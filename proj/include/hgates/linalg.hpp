// Copyright 2026 The heisenberg-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Small dense complex linear algebra: Hermitian eigendecomposition by cyclic
 * Jacobi rotations and unitary propagators exp(-iHt) built from it.
 *
 * Everything here is sized for the operators of a short spin chain
 * (dimension up to a few dozen); no attempt is made at cache blocking.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgates/error.hpp"

namespace hgates {

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-12;

/// Square dense complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), data_(std::move(entries)) {
        detail::require(data_.size() == dim_ * dim_,
                        "ComplexMatrix: entry count does not match dim*dim");
        for (const auto &z : data_) {
            detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()),
                            "ComplexMatrix: non-finite entry");
        }
    }

    /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : dim_(rows.size()) {
        data_.reserve(dim_ * dim_);
        for (const auto &row : rows) {
            detail::require(row.size() == dim_,
                            "ComplexMatrix: rows must form a square matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) noexcept {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out(j, i) = std::conj((*this)(i, j));
            }
        }
        return out;
    }

    ComplexMatrix &operator*=(Complex scale) noexcept {
        for (auto &z : data_) {
            z *= scale;
        }
        return *this;
    }

    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
        m *= scale;
        return m;
    }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        detail::require(a.dim_ == b.dim_, "matrix product: dimension mismatch");
        const std::size_t n = a.dim_;
        ComplexMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
        detail::require(a.dim_ == b.dim_, "matrix difference: dimension mismatch");
        ComplexMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) {
            out.data_[i] -= b.data_[i];
        }
        return out;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Amplitude vector over some ordered basis.
class ComplexState {
  public:
    ComplexState() = default;
    explicit ComplexState(std::size_t dim) : amps_(dim) {}
    explicit ComplexState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}
    ComplexState(std::initializer_list<Complex> amplitudes) : amps_(amplitudes) {}

    static ComplexState basis(std::size_t dim, std::size_t index) {
        detail::require(index < dim, "ComplexState::basis: index out of range");
        ComplexState s(dim);
        s.amps_[index] = 1.0;
        return s;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    Complex &operator[](std::size_t i) noexcept { return amps_[i]; }
    const Complex &operator[](std::size_t i) const noexcept { return amps_[i]; }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }

    [[nodiscard]] double norm_squared() const noexcept {
        double acc = 0.0;
        for (const auto &z : amps_) {
            acc += std::norm(z);
        }
        return acc;
    }
    [[nodiscard]] double norm() const noexcept { return std::sqrt(norm_squared()); }

    ComplexState &operator*=(Complex scale) noexcept {
        for (auto &z : amps_) {
            z *= scale;
        }
        return *this;
    }
    friend ComplexState operator*(Complex scale, ComplexState s) {
        s *= scale;
        return s;
    }
    ComplexState &operator+=(const ComplexState &other) {
        detail::require(dim() == other.dim(), "state sum: dimension mismatch");
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            amps_[i] += other.amps_[i];
        }
        return *this;
    }

  private:
    std::vector<Complex> amps_;
};

/// <a|b>, antilinear in the first argument.
inline Complex inner(const ComplexState &a, const ComplexState &b) {
    detail::require(a.dim() == b.dim(), "inner product: dimension mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    detail::require(a.dim() == b.dim(), "max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

inline double max_abs_diff(const ComplexState &a, const ComplexState &b) {
    detail::require(a.dim() == b.dim(), "max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// max |M - M^dagger|
inline double hermiticity_defect(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

/// max |U^dagger U - I|
inline double unitarity_defect(const ComplexMatrix &u) {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

/// Eigenpairs of a Hermitian matrix. Column k of `eigenvectors` belongs to
/// `eigenvalues[k]`; eigenvalues are ascending.
struct Eigensystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-14;
    int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization. Each rotation first removes the phase of the
/// pivot a_pq with a diagonal unitary, then applies a real Givens rotation.
inline Eigensystem eig_hermitian(const ComplexMatrix &h, JacobiOptions opts = {}) {
    const std::size_t n = h.dim();
    detail::require(n > 0, "eig_hermitian: empty matrix");
    const double defect = hermiticity_defect(h);
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream msg;
        msg << "eig_hermitian: matrix is not Hermitian (max |M - M^dagger| = " << defect
            << ")";
        detail::fail(msg.str());
    }

    ComplexMatrix a(n);
    double frob2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
            frob2 += std::norm(a(i, j));
        }
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix w = ComplexMatrix::identity(n);

    const auto off_mass = [&] {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    acc += std::norm(a(i, j));
                }
            }
        }
        return std::sqrt(acc);
    };
    const double threshold = opts.off_diagonal_tolerance * std::max(1.0, std::sqrt(frob2));

    bool converged = false;
    for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
        if (off_mass() <= threshold) {
            converged = true;
            break;
        }
        if (sweep == opts.max_sweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) {
                    continue;
                }
                const Complex phase = apq / b;
                const double theta = 0.5 * std::atan2(2.0 * b, a(q, q).real() - a(p, p).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const Complex g00 = c;
                const Complex g01 = s;
                const Complex g10 = -s * std::conj(phase);
                const Complex g11 = c * std::conj(phase);

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = aip * g00 + aiq * g10;
                    a(i, q) = aip * g01 + aiq * g11;
                    const Complex wip = w(i, p);
                    const Complex wiq = w(i, q);
                    w(i, p) = wip * g00 + wiq * g10;
                    w(i, q) = wip * g01 + wiq * g11;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = std::conj(g00) * apj + std::conj(g10) * aqj;
                    a(q, j) = std::conj(g01) * apj + std::conj(g11) * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "eig_hermitian: Jacobi iteration did not converge in " << opts.max_sweeps
            << " sweeps (off-diagonal mass " << off_mass() << ")";
        detail::fail(msg.str());
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    Eigensystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = w(i, order[k]);
        }
    }
    return out;
}

/// exp(-i H t) from a precomputed eigensystem: W diag(e^{-i lambda t}) W^dagger.
inline ComplexMatrix propagator(const Eigensystem &es, double t) {
    detail::require(std::isfinite(t), "propagator: duration must be finite");
    const std::size_t n = es.eigenvalues.size();
    if (t == 0.0) {
        return ComplexMatrix::identity(n);
    }
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, -es.eigenvalues[k] * t);
    }
    const ComplexMatrix &w = es.eigenvectors;
    ComplexMatrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) {
                acc += w(i, k) * phases[k] * std::conj(w(j, k));
            }
            u(i, j) = acc;
        }
    }
    return u;
}

inline ComplexMatrix propagator(const ComplexMatrix &h, double t) {
    detail::require(std::isfinite(t), "propagator: duration must be finite");
    return propagator(eig_hermitian(h), t);
}

inline ComplexState apply(const ComplexMatrix &u, const ComplexState &psi) {
    detail::require(u.dim() == psi.dim(), "apply: operator and state dimensions differ");
    ComplexState out(psi.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < u.dim(); ++j) {
            acc += u(i, j) * psi[j];
        }
        out[i] = acc;
    }
    return out;
}

/// exp(-i H t) psi without forming the propagator: O(dim^2).
inline ComplexState evolve(const Eigensystem &es, double t, const ComplexState &psi) {
    detail::require(std::isfinite(t), "evolve: duration must be finite");
    const std::size_t n = es.eigenvalues.size();
    detail::require(psi.dim() == n, "evolve: state dimension differs from operator");
    if (t == 0.0) {
        return psi;
    }
    const ComplexMatrix &w = es.eigenvectors;
    std::vector<Complex> coeff(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t i = 0; i < n; ++i) {
            acc += std::conj(w(i, k)) * psi[i];
        }
        coeff[k] = acc * std::polar(1.0, -es.eigenvalues[k] * t);
    }
    ComplexState out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc{};
        for (std::size_t k = 0; k < n; ++k) {
            acc += w(i, k) * coeff[k];
        }
        out[i] = acc;
    }
    return out;
}

} // namespace hgates
