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

#include "qmeas/linops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmeas/errors.hpp"
#include "qmeas/kernels.hpp"

namespace qmeas {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotPsd: return "NotPsd";
        case ErrorKind::TraceNotOne: return "TraceNotOne";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::EffectNotPositive: return "EffectNotPositive";
        case ErrorKind::EffectExceedsIdentity: return "EffectExceedsIdentity";
        case ErrorKind::SumNotIdentity: return "SumNotIdentity";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::IncompleteGrid: return "IncompleteGrid";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::NotOrthonormal: return "NotOrthonormal";
        case ErrorKind::TooManyEigenvalueGroups: return "TooManyEigenvalueGroups";
        case ErrorKind::NotDichotomic: return "NotDichotomic";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::MissingInput: return "MissingInput";
    }
    return "Unknown";
}

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                                                      std::to_string(b.dim()));
    }
}

void require_product(const ComplexMatrix &a, ProductDims dims, const char *op) {
    if (dims.dim_s == 0 || dims.dim_p == 0 || a.dim() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": matrix dim " + std::to_string(a.dim()) +
                                                      " is not " + std::to_string(dims.dim_s) + "*" +
                                                      std::to_string(dims.dim_p));
    }
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix &a) {
    const auto n = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        }
    }
    return m;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix of dim " + std::to_string(dim_) + " given " + std::to_string(entries_.size()) + " entries");
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::NonFinite, "matrix entry is NaN or infinite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return {dim, std::move(e)};
}

ComplexMatrix ComplexMatrix::zeros(std::size_t dim) {
    return {dim, std::vector<Complex>(dim * dim)};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = diag[i];
    }
    return {n, std::move(e)};
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<std::vector<Complex>> v;
    for (const auto &r : rows) {
        v.emplace_back(r);
    }
    return from_rows(v);
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> e;
    e.reserve(n * n);
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must all have length " + std::to_string(n));
        }
        e.insert(e.end(), r.begin(), r.end());
    }
    return {n, std::move(e)};
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "outer product of vectors with different lengths");
    }
    const std::size_t n = u.size();
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            e[r * n + c] = u[r] * std::conj(v[c]);
        }
    }
    return {n, std::move(e)};
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "add");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    const auto be = b.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += be[i];
    }
    return {a.dim(), std::move(e)};
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "subtract");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    const auto be = b.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= be[i];
    }
    return {a.dim(), std::move(e)};
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix &a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto &z : e) {
        z *= scale;
    }
    return {a.dim(), std::move(e)};
}

ComplexMatrix operator*(double scale, const ComplexMatrix &a) {
    return Complex{scale, 0.0} * a;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    std::vector<Complex> out(a.dim() * a.dim());
    kernels::matmul(a.entries(), b.entries(), out, a.dim());
    return {a.dim(), std::move(out)};
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            e[c * n + r] = std::conj(a(r, c));
        }
    }
    return {n, std::move(e)};
}

Complex trace(const ComplexMatrix &a) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += a(i, i);
    }
    return acc;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim() * b.dim();
    std::vector<Complex> out(n * n);
    kernels::kron(a.entries(), a.dim(), b.entries(), b.dim(), out);
    return {n, std::move(out)};
}

ComplexMatrix partial_trace_p(const ComplexMatrix &a, ProductDims dims) {
    require_product(a, dims, "partial_trace_p");
    std::vector<Complex> out(dims.dim_s * dims.dim_s);
    kernels::partial_trace_p(a.entries(), dims.dim_s, dims.dim_p, out);
    return {dims.dim_s, std::move(out)};
}

ComplexMatrix partial_trace_s(const ComplexMatrix &a, ProductDims dims) {
    require_product(a, dims, "partial_trace_s");
    std::vector<Complex> out(dims.dim_p * dims.dim_p);
    kernels::partial_trace_s(a.entries(), dims.dim_s, dims.dim_p, out);
    return {dims.dim_p, std::move(out)};
}

ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a) {
    return u * a * adjoint(u);
}

ComplexVector apply(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "apply: vector length " + std::to_string(v.size()) +
                                                      " vs matrix dim " + std::to_string(a.dim()));
    }
    const std::size_t n = a.dim();
    ComplexVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) {
            acc += a(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexVector out;
    out.reserve(u.size() * v.size());
    for (const auto &x : u) {
        for (const auto &y : v) {
            out.push_back(x * y);
        }
    }
    return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of vectors with different lengths");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto ae = a.entries();
    const auto be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) {
        worst = std::max(worst, std::abs(ae[i] - be[i]));
    }
    return worst;
}

double max_abs_entry(const ComplexMatrix &a) {
    double worst = 0.0;
    for (const auto &z : a.entries()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_psd(const ComplexMatrix &a, double tol) {
    if (!is_hermitian(a, tol)) {
        throw Error(ErrorKind::NotHermitian, "is_psd: matrix deviates from its adjoint by more than tol");
    }
    return hermitian_eigenvalues(a).front() >= -tol;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    return 0.5 * (a + adjoint(a));
}

HermitianEigen hermitian_eigen(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), Eigen::ComputeEigenvectors);
    const std::size_t n = a.dim();
    std::vector<double> values(n);
    std::vector<Complex> vecs(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = solver.eigenvalues()(static_cast<Eigen::Index>(j));
        for (std::size_t i = 0; i < n; ++i) {
            vecs[i * n + j] = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return {std::move(values), ComplexMatrix(n, std::move(vecs))};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<ComplexVector> complete_orthonormal_basis(std::vector<ComplexVector> fixed, std::size_t dim) {
    for (const auto &v : fixed) {
        if (v.size() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "basis completion: vector length differs from dim");
        }
    }
    if (fixed.size() > dim) {
        throw Error(ErrorKind::DimensionMismatch, "basis completion: more vectors than dimensions");
    }
    auto residual = [&](std::size_t e) {
        ComplexVector r(dim);
        r[e] = 1.0;
        // Two passes of modified Gram-Schmidt keep the result orthogonal to
        // machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : fixed) {
                const Complex overlap = inner(q, r);
                for (std::size_t i = 0; i < dim; ++i) {
                    r[i] -= overlap * q[i];
                }
            }
        }
        return r;
    };
    while (fixed.size() < dim) {
        ComplexVector best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < dim; ++e) {
            ComplexVector r = residual(e);
            const double nr = norm(r);
            if (nr > best_norm + 1e-12) {
                best_norm = nr;
                best = std::move(r);
            }
        }
        for (auto &z : best) {
            z /= best_norm;
        }
        fixed.push_back(std::move(best));
    }
    return fixed;
}

double orthonormality_defect(const std::vector<ComplexVector> &vectors) {
    double worst = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(inner(vectors[i], vectors[j]) - expected));
        }
    }
    return worst;
}

}  // namespace qmeas
