// Copyright 2026 The qlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlhv/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qlhv {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument(
            "ComplexMatrix: " + std::to_string(data_.size()) + " entries do not fill a " +
            std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged row literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double> &diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex> &v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

static void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex{s, 0.0}; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator*: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << m(i, j) << (j + 1 < m.cols() ? ", " : "");
        }
        out << (i + 1 < m.rows() ? "\n" : "]");
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double off_diagonal_norm(const ComplexMatrix &m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) {
                s += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) {
        throw std::invalid_argument("HermitianMatrix: matrix is " + std::to_string(m_.rows()) + "x" +
                                    std::to_string(m_.cols()) + ", not square");
    }
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex upper = m_(i, j);
            const Complex lower = std::conj(m_(j, i));
            if (std::abs(upper - lower) > kHermitianTolerance) {
                throw std::invalid_argument("HermitianMatrix: entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") breaks Hermitian symmetry by " +
                                            std::to_string(std::abs(upper - lower)));
            }
            const Complex avg = 0.5 * (upper + lower);
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
    }
}

HermitianMatrix::HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : HermitianMatrix(ComplexMatrix(rows)) {}

HermitianMatrix HermitianMatrix::identity(std::size_t n) { return HermitianMatrix(ComplexMatrix::identity(n)); }
HermitianMatrix HermitianMatrix::zeros(std::size_t n) { return HermitianMatrix(ComplexMatrix(n, n)); }
HermitianMatrix HermitianMatrix::diagonal(const std::vector<double> &diag) {
    return HermitianMatrix(ComplexMatrix::diagonal(diag));
}
HermitianMatrix HermitianMatrix::projector_onto(const std::vector<Complex> &v) {
    return HermitianMatrix(ComplexMatrix::outer(v));
}

HermitianMatrix &HermitianMatrix::operator+=(const HermitianMatrix &other) {
    m_ += other.m_;
    return *this;
}

HermitianMatrix &HermitianMatrix::operator-=(const HermitianMatrix &other) {
    m_ -= other.m_;
    return *this;
}

HermitianMatrix &HermitianMatrix::operator*=(double s) {
    m_ *= Complex{s, 0.0};
    return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b) { return a -= b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

double max_abs_diff(const HermitianMatrix &a, const HermitianMatrix &b) {
    return max_abs_diff(a.matrix(), b.matrix());
}

double trace_inner(const HermitianMatrix &a, const HermitianMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_inner: dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            s += (a(i, j) * b(j, i)).real();
        }
    }
    return s;
}

EigenDecomposition herm_eigen(const HermitianMatrix &m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-14 * std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double r = std::abs(g);
                if (r == 0.0) {
                    continue;
                }
                // Phase e^{i psi} = conj(g)/|g| makes the (p,q) entry real, then a
                // real Jacobi rotation annihilates it.
                const Complex phase = std::conj(g) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * r);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // a <- a U with U_pp = c, U_pq = s, U_qp = -s e^{i psi}, U_qq = c e^{i psi}.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * phase * akq;
                    a(k, q) = s * akp + c * phase * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * phase * vkq;
                    v(k, q) = s * vkp + c * phase * vkq;
                }
                // a <- U^dagger a
                const Complex conj_phase = std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * conj_phase * aqk;
                    a(q, k) = s * apk + c * conj_phase * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (off_diagonal_norm(a) >= threshold) {
        throw std::runtime_error("herm_eigen: Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values.push_back(a(order[col], order[col]).real());
        for (std::size_t k = 0; k < n; ++k) {
            out.vectors(k, col) = v(k, order[col]);
        }
    }
    return out;
}

std::vector<double> herm_eigenvalues(const HermitianMatrix &m) { return herm_eigen(m).values; }

double min_eigenvalue(const HermitianMatrix &m) {
    if (m.dim() == 0) {
        throw std::invalid_argument("min_eigenvalue: empty matrix");
    }
    return herm_eigenvalues(m).front();
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t rb = b.rows();
    const std::size_t cb = b.cols();
    ComplexMatrix out(a.rows() * rb, a.cols() * cb);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

HermitianMatrix tensor(const HermitianMatrix &a, const HermitianMatrix &b) {
    return HermitianMatrix(tensor(a.matrix(), b.matrix()));
}

static void require_two_qubit(const HermitianMatrix &m, const char *op) {
    if (m.dim() != 4) {
        throw std::invalid_argument(std::string(op) + ": expected a 4x4 two-qubit operator, got dimension " +
                                    std::to_string(m.dim()));
    }
}

HermitianMatrix partial_trace(const HermitianMatrix &m, Subsystem traced_out) {
    require_two_qubit(m, "partial_trace");
    ComplexMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                out(i, j) += traced_out == Subsystem::A ? m(2 * k + i, 2 * k + j) : m(2 * i + k, 2 * j + k);
            }
        }
    }
    return HermitianMatrix(std::move(out));
}

HermitianMatrix partial_transpose(const HermitianMatrix &m, Subsystem transposed) {
    require_two_qubit(m, "partial_transpose");
    ComplexMatrix out(4, 4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    out(2 * a + b, 2 * a2 + b2) = transposed == Subsystem::B ? m(2 * a + b2, 2 * a2 + b)
                                                                             : m(2 * a2 + b, 2 * a + b2);
                }
            }
        }
    }
    return HermitianMatrix(std::move(out));
}

namespace pauli {
HermitianMatrix identity() { return HermitianMatrix::identity(2); }
HermitianMatrix x() { return HermitianMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
HermitianMatrix y() { return HermitianMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
HermitianMatrix z() { return HermitianMatrix{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace qlhv
