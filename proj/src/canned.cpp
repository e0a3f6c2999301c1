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

#include "qmeas/canned.hpp"

#include <cmath>

#include "qmeas/errors.hpp"

namespace qmeas::canned {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix projector(const StateVector &v) {
    return ComplexMatrix::outer(v.amplitudes(), v.amplitudes());
}

void require_dichotomic(const Povm &o, const char *name) {
    const auto labels = o.labels();
    const bool labelled = labels.size() == 2 && ((labels[0] == "+1" && labels[1] == "-1") ||
                                                 (labels[0] == "-1" && labels[1] == "+1"));
    if (!labelled || !is_projection_valued(o)) {
        throw Error(ErrorKind::NotDichotomic, std::string(name) + " is not a +1/-1 projection valued observable");
    }
}

}  // namespace

Povm coin_povm() {
    const auto half = 0.5 * ComplexMatrix::identity(2);
    return Povm::create(2, {{"0", half}, {"1", half}});
}

JointPovm independent_joint() {
    const auto quarter = 0.25 * ComplexMatrix::identity(4);
    return JointPovm::create({2, 2}, {{"0", "0", quarter}, {"0", "1", quarter}, {"1", "0", quarter}, {"1", "1", quarter}});
}

JointPovm correlated_joint() {
    const auto half = 0.5 * ComplexMatrix::identity(4);
    const auto zero = ComplexMatrix::zeros(4);
    return JointPovm::create({2, 2}, {{"0", "0", half}, {"0", "1", zero}, {"1", "0", zero}, {"1", "1", half}});
}

StateVector singlet_vector() {
    return StateVector::from_amplitudes({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
}

DensityOperator singlet() {
    return pure_state(singlet_vector());
}

StateVector spin_up() {
    return StateVector::basis(2, 0);
}

StateVector spin_down() {
    return StateVector::basis(2, 1);
}

StateVector spin_right() {
    return StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
}

StateVector spin_left() {
    return StateVector::from_amplitudes({kInvSqrt2, -kInvSqrt2});
}

Povm z_pvm(std::size_t dim) {
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < dim; ++i) {
        effects.push_back({std::to_string(i), projector(StateVector::basis(dim, i))});
    }
    return Povm::create(dim, std::move(effects));
}

Povm x_pvm() {
    return Povm::create(2, {{"right", projector(spin_right())}, {"left", projector(spin_left())}});
}

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::diagonal({1.0, -1.0});
}

Povm dichotomic(const ComplexMatrix &observable, double tol) {
    const auto id = ComplexMatrix::identity(observable.dim());
    if (!is_hermitian(observable, tol) || max_abs_diff(observable * observable, id) > tol) {
        throw Error(ErrorKind::NotDichotomic, "observable is not Hermitian with square equal to I");
    }
    return Povm::create(observable.dim(), {{"+1", 0.5 * (id + observable)}, {"-1", 0.5 * (id - observable)}}, tol);
}

Povm spin_observable(double theta) {
    return dichotomic(std::cos(theta) * pauli_z() + std::sin(theta) * pauli_x());
}

double correlator(const DensityOperator &tau, const Povm &a, const Povm &b) {
    require_dichotomic(a, "S observable");
    require_dichotomic(b, "P observable");
    const auto dist = jmf_probability(tau, a, b, UnitaryOperator::identity(a.dim()), UnitaryOperator::identity(b.dim()));
    double e = 0.0;
    for (const auto &entry : dist.entries()) {
        const double s = entry.key.first == "+1" ? 1.0 : -1.0;
        const double p = *entry.key.second == "+1" ? 1.0 : -1.0;
        e += s * p * entry.probability;
    }
    return e;
}

double chsh_value(const DensityOperator &tau, const Povm &a1, const Povm &a2, const Povm &b1, const Povm &b2) {
    return std::abs(correlator(tau, a1, b1) + correlator(tau, a1, b2) + correlator(tau, a2, b1) -
                    correlator(tau, a2, b2));
}

}  // namespace qmeas::canned
