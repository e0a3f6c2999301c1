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

#ifndef QMEAS_STATES_HPP
#define QMEAS_STATES_HPP

#include <cstdint>
#include <random>

#include "qmeas/linops.hpp"

namespace qmeas {

/// Hermitian, positive semidefinite, unit-trace operator. The validation
/// tolerance is kept on the value so downstream checks can reuse it.
class DensityOperator {
public:
    /// Throws NotHermitian, NotPsd or TraceNotOne with the measured deviation.
    static DensityOperator from_matrix(ComplexMatrix m, double tol = kDefaultTol);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }
    double tol() const noexcept {
        return tol_;
    }

private:
    DensityOperator(ComplexMatrix m, double tol) : matrix_(std::move(m)), tol_(tol) {
    }

    ComplexMatrix matrix_;
    double tol_;
};

/// Unit-norm vector. The global phase is left alone.
class StateVector {
public:
    /// Throws NotNormalized if | ||v|| - 1 | > tol.
    static StateVector from_amplitudes(ComplexVector amplitudes, double tol = kDefaultTol);
    /// Rescales to unit norm. Throws NotNormalized for the zero vector.
    static StateVector normalized(ComplexVector amplitudes);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

private:
    explicit StateVector(ComplexVector a) : amplitudes_(std::move(a)) {
    }
    ComplexVector amplitudes_;
};

class UnitaryOperator {
public:
    /// Throws NotUnitary if max |U U^dagger - I| > tol.
    static UnitaryOperator from_matrix(ComplexMatrix m, double tol = kDefaultTol);
    static UnitaryOperator identity(std::size_t dim);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }
    UnitaryOperator adjoint() const;

private:
    explicit UnitaryOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    }
    ComplexMatrix matrix_;
};

inline DensityOperator density_from_matrix(ComplexMatrix m, double tol = kDefaultTol) {
    return DensityOperator::from_matrix(std::move(m), tol);
}

/// |v><v|
DensityOperator pure_state(const StateVector &v);

/// Tr_P(tau). Throws DimensionMismatch unless tau lives on dims.
DensityOperator reduced_state_s(const DensityOperator &tau, ProductDims dims);
/// Tr_S(tau).
DensityOperator reduced_state_p(const DensityOperator &tau, ProductDims dims);

/// U rho U^dagger
DensityOperator evolve(const DensityOperator &rho, const UnitaryOperator &u);

UnitaryOperator tensor(const UnitaryOperator &u_s, const UnitaryOperator &u_p);

/// Tr(rho^2)
double purity(const DensityOperator &rho);

// Seeded generators. Each is a pure function of its arguments.

/// Decorrelates per-instance seeds drawn from one base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// dim x dim matrix of independent standard complex normal entries
/// (real and imaginary parts each N(0, 1/2)).
ComplexMatrix ginibre_matrix(std::size_t dim, std::mt19937_64 &rng);

/// G G^dagger / Tr(G G^dagger) for a Ginibre G.
DensityOperator random_density(std::size_t dim, std::uint64_t seed);
/// Orthonormalized Ginibre matrix.
UnitaryOperator random_unitary(std::size_t dim, std::uint64_t seed);
StateVector random_state_vector(std::size_t dim, std::uint64_t seed);

}  // namespace qmeas

#endif
