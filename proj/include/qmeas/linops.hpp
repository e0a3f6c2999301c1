// Copyright 2026 The qmeas Authors
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

#ifndef QMEAS_LINOPS_HPP
#define QMEAS_LINOPS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmeas {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Tolerance used by every check unless the caller passes another one.
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major. Values are immutable once built:
/// every operation returns a new matrix.
class ComplexMatrix {
public:
    /// Takes dim*dim row-major entries. Throws DimensionMismatch on a size
    /// mismatch or dim == 0, NonFinite on NaN/Inf.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);
    /// |u><v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t dim() const noexcept {
        return dim_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    bool operator==(const ComplexMatrix &other) const = default;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Tensor-product factorization of a space: S is always the left factor and
/// P the right, so index (i_s, i_p) maps to i_s * dim_p + i_p.
struct ProductDims {
    std::size_t dim_s = 1;
    std::size_t dim_p = 1;

    std::size_t total() const noexcept {
        return dim_s * dim_p;
    }
    bool operator==(const ProductDims &) const = default;
};

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix &a);
ComplexMatrix operator*(double scale, const ComplexMatrix &a);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Traces out the right (P) factor. Throws DimensionMismatch unless
/// a.dim() == dims.total().
ComplexMatrix partial_trace_p(const ComplexMatrix &a, ProductDims dims);
/// Traces out the left (S) factor.
ComplexMatrix partial_trace_s(const ComplexMatrix &a, ProductDims dims);

/// U A U^dagger
ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a);

ComplexVector apply(const ComplexMatrix &a, std::span<const Complex> v);
ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v);
Complex inner(std::span<const Complex> u, std::span<const Complex> v);  // <u|v>
double norm(std::span<const Complex> v);

/// Largest entrywise modulus of a - b. Throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_entry(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTol);

/// min eigenvalue >= -tol. Throws NotHermitian when is_hermitian(a, tol) fails.
bool is_psd(const ComplexMatrix &a, double tol = kDefaultTol);

/// (A + A^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &a);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j is the eigenvector of values[j]
};

/// Eigen-decomposition of the Hermitian part of a.
HermitianEigen hermitian_eigen(const ComplexMatrix &a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// Extends the orthonormal vectors in `fixed` to an orthonormal basis of C^dim
/// by orthogonalizing standard basis vectors against what is already chosen,
/// always taking the one with the largest residual next. Input vectors are
/// kept unchanged as the leading entries.
std::vector<ComplexVector> complete_orthonormal_basis(std::vector<ComplexVector> fixed, std::size_t dim);

/// Maximum of |<u_i|u_j> - delta_ij| over the set.
double orthonormality_defect(const std::vector<ComplexVector> &vectors);

}  // namespace qmeas

#endif
