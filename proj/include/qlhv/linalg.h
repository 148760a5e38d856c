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

#ifndef QLHV_LINALG_H
#define QLHV_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace qlhv {

using Complex = std::complex<double>;

/// Absolute per-entry tolerance used to accept a matrix as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

/// Dense complex matrix stored row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-by-row literal, e.g. {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<double> &diag);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(const std::vector<Complex> &v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Complex> &entries() const { return data_; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex s);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);
std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m);

/// Largest |a(i,j) - b(i,j)|. Shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Frobenius norm of the strictly off-diagonal part.
double off_diagonal_norm(const ComplexMatrix &m);

/// Square complex matrix equal to its adjoint.
///
/// Construction accepts inputs whose asymmetry |m(i,j) - conj(m(j,i))| is at
/// most kHermitianTolerance and stores the symmetrized (m + m^dagger) / 2;
/// anything further from Hermitian throws std::invalid_argument.
class HermitianMatrix {
   public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(ComplexMatrix m);
    HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix zeros(std::size_t n);
    static HermitianMatrix diagonal(const std::vector<double> &diag);
    static HermitianMatrix projector_onto(const std::vector<Complex> &v);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix &matrix() const { return m_; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    double trace() const { return m_.trace().real(); }

    HermitianMatrix &operator+=(const HermitianMatrix &other);
    HermitianMatrix &operator-=(const HermitianMatrix &other);
    HermitianMatrix &operator*=(double s);

    bool operator==(const HermitianMatrix &other) const = default;

   private:
    ComplexMatrix m_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b);
HermitianMatrix operator*(double s, HermitianMatrix a);
double max_abs_diff(const HermitianMatrix &a, const HermitianMatrix &b);

/// Re tr(a b); the real inner product on Hermitian matrices.
double trace_inner(const HermitianMatrix &a, const HermitianMatrix &b);

/// Eigenvalues in ascending order with eigenvectors stored as the matching
/// columns of `vectors`.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Sweeps stop once the off-diagonal Frobenius mass
/// drops below 1e-14 (scaled by max(1, ||m||_F)).
EigenDecomposition herm_eigen(const HermitianMatrix &m);
std::vector<double> herm_eigenvalues(const HermitianMatrix &m);
double min_eigenvalue(const HermitianMatrix &m);

/// Kronecker product: entry(i*rb + k, j*cb + l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
HermitianMatrix tensor(const HermitianMatrix &a, const HermitianMatrix &b);

enum class Subsystem { A, B };

/// Two-qubit operations. Basis order is {|00>, |01>, |10>, |11>} with the
/// first factor belonging to A. Non-4x4 inputs throw std::invalid_argument.
HermitianMatrix partial_trace(const HermitianMatrix &m, Subsystem traced_out);
HermitianMatrix partial_transpose(const HermitianMatrix &m, Subsystem transposed);

namespace pauli {
HermitianMatrix identity();
HermitianMatrix x();
HermitianMatrix y();
HermitianMatrix z();
}  // namespace pauli

}  // namespace qlhv

#endif
