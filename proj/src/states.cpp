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

#include "qmeas/states.hpp"

#include <cmath>
#include <sstream>

#include "qmeas/errors.hpp"

namespace qmeas {

namespace {

std::string describe(double value) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << value;
    return out.str();
}

}  // namespace

DensityOperator DensityOperator::from_matrix(ComplexMatrix m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorKind::NotHermitian,
                    "density operator deviates from its adjoint by " + describe(max_abs_diff(m, qmeas::adjoint(m))));
    }
    const Complex tr = trace(m);
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        throw Error(ErrorKind::TraceNotOne, "trace is " + describe(tr.real()) + " (deviation " +
                                                describe(std::abs(tr - Complex{1.0, 0.0})) + ")");
    }
    const double min_eig = hermitian_eigenvalues(m).front();
    if (min_eig < -tol) {
        throw Error(ErrorKind::NotPsd, "minimum eigenvalue " + describe(min_eig));
    }
    return {std::move(m), tol};
}

StateVector StateVector::from_amplitudes(ComplexVector amplitudes, double tol) {
    if (amplitudes.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "state vector must have at least one amplitude");
    }
    const double n = norm(amplitudes);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
        throw Error(ErrorKind::NotNormalized, "norm is " + describe(n));
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
    const double n = norm(amplitudes);
    if (amplitudes.empty() || !std::isfinite(n) || n == 0.0) {
        throw Error(ErrorKind::NotNormalized, "cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
    }
    ComplexVector a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a));
}

UnitaryOperator UnitaryOperator::from_matrix(ComplexMatrix m, double tol) {
    const double defect = max_abs_diff(m * qmeas::adjoint(m), ComplexMatrix::identity(m.dim()));
    if (defect > tol) {
        throw Error(ErrorKind::NotUnitary, "|U U^dagger - I| = " + describe(defect));
    }
    return UnitaryOperator(std::move(m));
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
    return UnitaryOperator(ComplexMatrix::identity(dim));
}

UnitaryOperator UnitaryOperator::adjoint() const {
    return UnitaryOperator(qmeas::adjoint(matrix_));
}

DensityOperator pure_state(const StateVector &v) {
    return DensityOperator::from_matrix(ComplexMatrix::outer(v.amplitudes(), v.amplitudes()));
}

DensityOperator reduced_state_s(const DensityOperator &tau, ProductDims dims) {
    return DensityOperator::from_matrix(partial_trace_p(tau.matrix(), dims), tau.tol());
}

DensityOperator reduced_state_p(const DensityOperator &tau, ProductDims dims) {
    return DensityOperator::from_matrix(partial_trace_s(tau.matrix(), dims), tau.tol());
}

DensityOperator evolve(const DensityOperator &rho, const UnitaryOperator &u) {
    if (rho.dim() != u.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "evolve: state dim " + std::to_string(rho.dim()) +
                                                      " vs unitary dim " + std::to_string(u.dim()));
    }
    return DensityOperator::from_matrix(conjugate(u.matrix(), rho.matrix()), rho.tol());
}

UnitaryOperator tensor(const UnitaryOperator &u_s, const UnitaryOperator &u_p) {
    return UnitaryOperator::from_matrix(kron(u_s.matrix(), u_p.matrix()));
}

double purity(const DensityOperator &rho) {
    return trace(rho.matrix() * rho.matrix()).real();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexMatrix ginibre_matrix(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    std::vector<Complex> e(dim * dim);
    for (auto &z : e) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    return {dim, std::move(e)};
}

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const ComplexMatrix g = ginibre_matrix(dim, rng);
    const ComplexMatrix gram = g * adjoint(g);
    return DensityOperator::from_matrix((1.0 / trace(gram).real()) * gram);
}

UnitaryOperator random_unitary(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const ComplexMatrix g = ginibre_matrix(dim, rng);
    // Gram-Schmidt on the columns of g, reorthogonalized once.
    std::vector<ComplexVector> cols;
    for (std::size_t c = 0; c < dim; ++c) {
        ComplexVector v(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            v[r] = g(r, c);
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : cols) {
                const Complex overlap = inner(q, v);
                for (std::size_t i = 0; i < dim; ++i) {
                    v[i] -= overlap * q[i];
                }
            }
        }
        const double n = norm(v);
        for (auto &z : v) {
            z /= n;
        }
        cols.push_back(std::move(v));
    }
    std::vector<Complex> e(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            e[r * dim + c] = cols[c][r];
        }
    }
    return UnitaryOperator::from_matrix(ComplexMatrix(dim, std::move(e)), 1e-12);
}

StateVector random_state_vector(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector a(dim);
    for (auto &z : a) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    return StateVector::normalized(std::move(a));
}

}  // namespace qmeas
