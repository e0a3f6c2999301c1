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

#ifndef QMEAS_CANNED_HPP
#define QMEAS_CANNED_HPP

#include "qmeas/measurement.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

namespace qmeas::canned {

/// Fair-coin tosser on a qubit: E_0 = E_1 = I/2, labels "0" and "1".
Povm coin_povm();

/// All four effects I (x) I / 4: two independent fair coins.
JointPovm independent_joint();
/// E'_{0&0} = E'_{1&1} = I (x) I / 2, off-diagonal pairs zero: two coins that
/// always agree.
JointPovm correlated_joint();

/// Projector onto (|01> - |10>)/sqrt(2), |0> = spin up.
DensityOperator singlet();
StateVector singlet_vector();

/// Qubit spin states. up/down are the Z basis; right/left are +x/-x.
StateVector spin_up();
StateVector spin_down();
StateVector spin_right();
StateVector spin_left();

/// Computational-basis PVM of any dimension, labels "0".."dim-1".
Povm z_pvm(std::size_t dim = 2);
/// Qubit x-basis PVM, labels "right" and "left".
Povm x_pvm();

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// {(I + A)/2, (I - A)/2} labelled "+1", "-1" for Hermitian A with A^2 = I.
/// Throws NotDichotomic otherwise.
Povm dichotomic(const ComplexMatrix &observable, double tol = kDefaultTol);

/// cos(theta) Z + sin(theta) X as a +-1 observable.
Povm spin_observable(double theta);

/// sum_{s,p} s p Pr(s&p) with Pr from jmf_probability at U = I.
double correlator(const DensityOperator &tau, const Povm &a, const Povm &b);

/// |E(a1,b1) + E(a1,b2) + E(a2,b1) - E(a2,b2)|. Throws NotDichotomic unless
/// each observable is a two-outcome PVM labelled "+1"/"-1".
double chsh_value(const DensityOperator &tau, const Povm &a1, const Povm &a2, const Povm &b1, const Povm &b2);

}  // namespace qmeas::canned

#endif
