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

#include "qmeas/luders.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qmeas/errors.hpp"
#include "qmeas/measurement.hpp"

namespace qmeas {

namespace {

std::vector<ComplexVector> columns(const ComplexMatrix &m) {
    std::vector<ComplexVector> out(m.dim(), ComplexVector(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out[c][r] = m(r, c);
        }
    }
    return out;
}

std::string sci(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

}  // namespace

ComplexMatrix LudersModel::eigenprojector(std::size_t k) const {
    ComplexMatrix proj = ComplexMatrix::zeros(dims_.dim_s);
    for (const auto &v : groups_.at(k)) {
        proj = proj + ComplexMatrix::outer(v, v);
    }
    return proj;
}

ComplexMatrix LudersModel::pointer_projector(std::size_t k) const {
    const auto &v = p_basis_.at(k);
    return ComplexMatrix::outer(v, v);
}

Povm LudersModel::probe_pvm() const {
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < p_basis_.size(); ++i) {
        effects.push_back({std::to_string(i), pointer_projector(i)});
    }
    return Povm::create(dims_.dim_p, std::move(effects), 1e-8);
}

Povm LudersModel::system_pvm() const {
    std::vector<Effect> effects;
    for (std::size_t k = 0; k < groups_.size(); ++k) {
        effects.push_back({std::to_string(k), eigenprojector(k)});
    }
    return Povm::create(dims_.dim_s, std::move(effects), 1e-8);
}

LudersModel build_model(std::vector<EigenGroup> s_eigenbasis, std::vector<ComplexVector> p_basis,
                        std::size_t p0_index, double tol) {
    if (s_eigenbasis.empty() || p_basis.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "Luders model needs at least one eigenvalue group and probe vector");
    }
    std::vector<ComplexVector> s_vectors;
    for (const auto &g : s_eigenbasis) {
        if (g.empty()) {
            throw Error(ErrorKind::NotOrthonormal, "eigenvalue group with no vectors");
        }
        s_vectors.insert(s_vectors.end(), g.begin(), g.end());
    }
    const std::size_t dim_s = s_vectors.front().size();
    for (const auto &v : s_vectors) {
        if (v.size() != dim_s) {
            throw Error(ErrorKind::DimensionMismatch, "system eigenvectors have different lengths");
        }
    }
    if (s_vectors.size() != dim_s) {
        throw Error(ErrorKind::NotOrthonormal, std::to_string(s_vectors.size()) + " eigenvectors cannot form a basis of C^" +
                                                   std::to_string(dim_s));
    }
    if (const double d = orthonormality_defect(s_vectors); d > tol) {
        throw Error(ErrorKind::NotOrthonormal, "system eigenvectors deviate from orthonormal by " + sci(d));
    }

    const std::size_t dim_p = p_basis.front().size();
    for (const auto &v : p_basis) {
        if (v.size() != dim_p) {
            throw Error(ErrorKind::DimensionMismatch, "probe vectors have different lengths");
        }
    }
    const std::size_t groups = s_eigenbasis.size();
    if (groups > dim_p || groups > p_basis.size()) {
        throw Error(ErrorKind::TooManyEigenvalueGroups,
                    std::to_string(groups) + " eigenvalue groups but only " +
                        std::to_string(std::min(dim_p, p_basis.size())) + " probe pointer vectors");
    }
    if (const double d = orthonormality_defect(p_basis); d > tol) {
        throw Error(ErrorKind::NotOrthonormal, "probe vectors deviate from orthonormal by " + sci(d));
    }
    if (p0_index >= p_basis.size()) {
        throw Error(ErrorKind::DimensionMismatch, "p0 index out of range");
    }
    p_basis = complete_orthonormal_basis(std::move(p_basis), dim_p);

    // Columns fixed by U(|s_kj>|p_0>) = |s_kj>|p_k>.
    const ProductDims dims{dim_s, dim_p};
    std::vector<ComplexVector> inputs;
    std::vector<ComplexVector> outputs;
    for (std::size_t k = 0; k < groups; ++k) {
        for (const auto &s : s_eigenbasis[k]) {
            inputs.push_back(kron(s, p_basis[p0_index]));
            outputs.push_back(kron(s, p_basis[k]));
        }
    }
    inputs = complete_orthonormal_basis(std::move(inputs), dims.total());
    outputs = complete_orthonormal_basis(std::move(outputs), dims.total());

    const std::size_t n = dims.total();
    std::vector<Complex> u(n * n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                u[r * n + c] += outputs[m][r] * std::conj(inputs[m][c]);
            }
        }
    }
    auto unitary = UnitaryOperator::from_matrix(ComplexMatrix(n, std::move(u)), 1e-12);
    return LudersModel(dims, std::move(s_eigenbasis), std::move(p_basis), p0_index, std::move(unitary));
}

DensityOperator premeasure(const LudersModel &model, const DensityOperator &sigma0, const DensityOperator &pi0) {
    if (sigma0.dim() != model.dim_s() || pi0.dim() != model.dim_p()) {
        throw Error(ErrorKind::DimensionMismatch, "premeasure: initial states do not match the model");
    }
    const auto product = DensityOperator::from_matrix(kron(sigma0.matrix(), pi0.matrix()), sigma0.tol());
    return evolve(product, model.premeasurement_unitary());
}

StateVector entangled_vector(const LudersModel &model, const StateVector &s0) {
    if (s0.dim() != model.dim_s()) {
        throw Error(ErrorKind::DimensionMismatch, "initial system vector does not match the model");
    }
    return StateVector::normalized(apply(model.premeasurement_unitary().matrix(), kron(s0.amplitudes(), model.p0())));
}

CheckOutcome proxy_check(const LudersModel &model, const StateVector &s0, double tol) {
    const auto t = pure_state(entangled_vector(model, s0));
    const auto sys = pure_state(s0);
    const auto id_s = ComplexMatrix::identity(model.dim_s());
    CheckOutcome out;
    for (std::size_t k = 0; k < model.group_count(); ++k) {
        const double pr_p = prob(t, kron(id_s, model.pointer_projector(k)));
        const double pr_s = prob(sys, model.eigenprojector(k));
        double amplitude_sum = 0.0;
        for (const auto &v : model.groups()[k]) {
            amplitude_sum += std::norm(inner(v, s0.amplitudes()));
        }
        const double dev = std::max({std::abs(pr_p - amplitude_sum), std::abs(pr_s - amplitude_sum),
                                     std::abs(pr_p - pr_s)});
        out.record(dev, tol, std::to_string(k));
    }
    return out;
}

StateVector projection_postulate_state(const LudersModel &model, const StateVector &s0, std::size_t k,
                                       const UnitaryOperator &u_s, double tol) {
    if (k >= model.group_count()) {
        throw Error(ErrorKind::DimensionMismatch, "group index out of range");
    }
    if (u_s.dim() != model.dim_s() || s0.dim() != model.dim_s()) {
        throw Error(ErrorKind::DimensionMismatch, "projection postulate: dimensions do not match the model");
    }
    const ComplexVector projected = apply(model.eigenprojector(k), s0.amplitudes());
    const double n = norm(projected);
    if (n <= tol) {
        throw Error(ErrorKind::ZeroProbabilityCondition,
                    "|s0> has no component in eigenvalue group " + std::to_string(k));
    }
    return StateVector::normalized(apply(u_s.matrix(), projected));
}

LudersModel random_model(std::size_t dim_s, std::size_t dim_p, std::size_t groups, std::uint64_t seed) {
    if (groups == 0 || groups > dim_s) {
        throw Error(ErrorKind::DimensionMismatch, "cannot split dim " + std::to_string(dim_s) + " into " +
                                                      std::to_string(groups) + " eigenvalue groups");
    }
    std::mt19937_64 rng(seed);
    const auto s_cols = columns(random_unitary(dim_s, derive_seed(seed, 1)).matrix());
    const auto p_cols = columns(random_unitary(dim_p, derive_seed(seed, 2)).matrix());
    std::vector<EigenGroup> eig(groups);
    for (std::size_t c = 0; c < dim_s; ++c) {
        const std::size_t g = c < groups ? c : std::uniform_int_distribution<std::size_t>(0, groups - 1)(rng);
        eig[g].push_back(s_cols[c]);
    }
    const std::size_t p0 = std::uniform_int_distribution<std::size_t>(0, dim_p - 1)(rng);
    return build_model(std::move(eig), p_cols, p0);
}

}  // namespace qmeas
