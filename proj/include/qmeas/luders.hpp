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

#ifndef QMEAS_LUDERS_HPP
#define QMEAS_LUDERS_HPP

#include <cstdint>
#include <vector>

#include "qmeas/check.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

namespace qmeas {

/// Orthonormal vectors of one eigenspace of the measured observable. Groups
/// are identified by position; eigenvalues never enter the model.
using EigenGroup = std::vector<ComplexVector>;

/// Premeasurement model: a unitary U on H_S (x) H_P with
/// U(|s_kj> (x) |p_0>) = |s_kj> (x) |p_k> for every group k and member j.
/// Group k is recorded on probe basis vector k; |p_0> is basis vector
/// `p0_index`, which may coincide with a pointer.
class LudersModel {
public:
    std::size_t dim_s() const noexcept {
        return dims_.dim_s;
    }
    std::size_t dim_p() const noexcept {
        return dims_.dim_p;
    }
    ProductDims dims() const noexcept {
        return dims_;
    }
    std::size_t group_count() const noexcept {
        return groups_.size();
    }
    const std::vector<EigenGroup> &groups() const noexcept {
        return groups_;
    }
    /// Full orthonormal probe basis; the first group_count() entries are
    /// the pointers.
    const std::vector<ComplexVector> &p_basis() const noexcept {
        return p_basis_;
    }
    std::size_t p0_index() const noexcept {
        return p0_index_;
    }
    const ComplexVector &p0() const {
        return p_basis_[p0_index_];
    }
    const UnitaryOperator &premeasurement_unitary() const noexcept {
        return unitary_;
    }

    /// E_{s_k}: projector onto group k.
    ComplexMatrix eigenprojector(std::size_t k) const;
    /// E_{p_k} = |p_k><p_k|
    ComplexMatrix pointer_projector(std::size_t k) const;
    /// The nondegenerate probe PVM {|p_i><p_i|} over the full probe basis,
    /// labelled "0".."dim_p-1".
    Povm probe_pvm() const;
    /// The measured PVM {E_{s_k}}, labelled "0".."group_count-1".
    Povm system_pvm() const;

private:
    friend LudersModel build_model(std::vector<EigenGroup>, std::vector<ComplexVector>, std::size_t, double);
    LudersModel(ProductDims dims, std::vector<EigenGroup> groups, std::vector<ComplexVector> p_basis,
                std::size_t p0_index, UnitaryOperator unitary)
        : dims_(dims), groups_(std::move(groups)), p_basis_(std::move(p_basis)), p0_index_(p0_index),
          unitary_(std::move(unitary)) {
    }

    ProductDims dims_;
    std::vector<EigenGroup> groups_;
    std::vector<ComplexVector> p_basis_;
    std::size_t p0_index_;
    UnitaryOperator unitary_;
};

/// Builds U from its action on H_S (x) |p_0> and completes it on the
/// complement by orthonormalizing standard basis vectors. `p_basis` needs at
/// least group_count orthonormal vectors and is completed to a basis of H_P.
/// Throws NotOrthonormal (s-vectors not an orthonormal basis, p-vectors not
/// orthonormal), TooManyEigenvalueGroups, DimensionMismatch.
LudersModel build_model(std::vector<EigenGroup> s_eigenbasis, std::vector<ComplexVector> p_basis,
                        std::size_t p0_index, double tol = kDefaultTol);

/// U (sigma0 (x) pi0) U^dagger
DensityOperator premeasure(const LudersModel &model, const DensityOperator &sigma0, const DensityOperator &pi0);

/// |t> = U(|s0> (x) |p0>)
StateVector entangled_vector(const LudersModel &model, const StateVector &s0);

/// For every group k compares Pr(p_k) on |t>, Pr(s_k) on |s0> and
/// sum_j |<s_kj|s0>|^2.
CheckOutcome proxy_check(const LudersModel &model, const StateVector &s0, double tol = kDefaultTol);

/// U_S E_{s_k}|s0> / ||E_{s_k}|s0>||. Throws ZeroProbabilityCondition when the
/// projected norm is <= tol.
StateVector projection_postulate_state(const LudersModel &model, const StateVector &s0, std::size_t k,
                                       const UnitaryOperator &u_s, double tol = kDefaultTol);

/// A model with dim_s split into `groups` nonempty random eigenspaces (columns
/// of a random unitary), a random probe basis and p0_index drawn at random.
LudersModel random_model(std::size_t dim_s, std::size_t dim_p, std::size_t groups, std::uint64_t seed);

}  // namespace qmeas

#endif
