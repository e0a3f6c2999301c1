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

#ifndef QMEAS_OBSERVABLES_HPP
#define QMEAS_OBSERVABLES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/check.hpp"
#include "qmeas/linops.hpp"
#include "qmeas/states.hpp"

namespace qmeas {

struct Effect {
    std::string label;
    ComplexMatrix effect;
};

/// Finite positive operator valued measure: effects 0 <= E <= I summing to I.
/// Zero effects are allowed.
class Povm {
public:
    /// Throws DimensionMismatch, NotHermitian, EffectNotPositive,
    /// EffectExceedsIdentity, SumNotIdentity or DuplicateLabel.
    static Povm create(std::size_t dim, std::vector<Effect> outcomes, double tol = kDefaultTol);

    std::size_t dim() const noexcept {
        return dim_;
    }
    std::size_t size() const noexcept {
        return outcomes_.size();
    }
    const std::vector<Effect> &outcomes() const noexcept {
        return outcomes_;
    }
    const Effect &operator[](std::size_t i) const {
        return outcomes_[i];
    }
    std::vector<std::string> labels() const;
    /// Throws LabelMismatch for an unknown label.
    const ComplexMatrix &effect(const std::string &label) const;

private:
    Povm(std::size_t dim, std::vector<Effect> outcomes) : dim_(dim), outcomes_(std::move(outcomes)) {
    }
    std::size_t dim_;
    std::vector<Effect> outcomes_;
};

inline Povm povm_new(std::size_t dim, std::vector<Effect> outcomes, double tol = kDefaultTol) {
    return Povm::create(dim, std::move(outcomes), tol);
}

struct JointEffect {
    std::string s_label;
    std::string p_label;
    ComplexMatrix effect;
};

/// POVM on H_S (x) H_P whose outcomes form the full grid s_labels x p_labels.
/// Effects are stored row-major over that grid.
class JointPovm {
public:
    /// Label order is order of first appearance. Throws IncompleteGrid unless
    /// every (s, p) pair occurs exactly once, plus every Povm::create error.
    static JointPovm create(ProductDims dims, std::vector<JointEffect> outcomes, double tol = kDefaultTol);

    ProductDims dims() const noexcept {
        return dims_;
    }
    const std::vector<std::string> &s_labels() const noexcept {
        return s_labels_;
    }
    const std::vector<std::string> &p_labels() const noexcept {
        return p_labels_;
    }
    const ComplexMatrix &effect(std::size_t s, std::size_t p) const {
        return effects_[s * p_labels_.size() + p];
    }
    std::vector<JointEffect> outcomes() const;

private:
    JointPovm(ProductDims dims, std::vector<std::string> s, std::vector<std::string> p, std::vector<ComplexMatrix> e)
        : dims_(dims), s_labels_(std::move(s)), p_labels_(std::move(p)), effects_(std::move(e)) {
    }
    ProductDims dims_;
    std::vector<std::string> s_labels_;
    std::vector<std::string> p_labels_;
    std::vector<ComplexMatrix> effects_;
};

/// "s&p"
std::string joint_label(const std::string &s, const std::string &p);

bool is_projection_valued(const Povm &povm, double tol = kDefaultTol);

/// E_{s&p} = U_S^dagger E_s U_S (x) U_P^dagger E_p U_P
JointPovm jmf_joint(const Povm &povm_s, const Povm &povm_p, const UnitaryOperator &u_s, const UnitaryOperator &u_p);

/// Sum over p (resp. s) of the joint effects, as a POVM on the product space
/// labelled by the surviving index.
Povm marginal_s(const JointPovm &joint);
Povm marginal_p(const JointPovm &joint);

/// Both families: sum_p E_{s&p} = U_S^dagger E_s U_S (x) I and
/// sum_s E_{s&p} = I (x) U_P^dagger E_p U_P. Labels are matched by name.
/// Throws LabelMismatch if the label sets differ.
CheckOutcome check_noeffect(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                            const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol = kDefaultTol);

/// E_{s&p} = (sum_p E_{s&p}) (sum_s E_{s&p}) for every pair.
CheckOutcome check_prodmarg(const JointPovm &joint, double tol = kDefaultTol);

/// Entrywise agreement with jmf_joint(povm_s, povm_p, u_s, u_p).
CheckOutcome check_jmf_form(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                            const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol = kDefaultTol);

struct EquivalenceReport {
    CheckOutcome jmf_form;
    CheckOutcome noeffect;
    CheckOutcome prodmarg;
    /// jmf_form <=> (noeffect && prodmarg)
    bool biconditional_holds = false;
};

EquivalenceReport theorem1_verify(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                                  const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol = kDefaultTol);

/// k effects S^{-1/2} G_i G_i^dagger S^{-1/2} with S = sum_i G_i G_i^dagger.
/// Labels are "0".."k-1".
Povm random_povm(std::size_t dim, std::size_t outcomes, std::uint64_t seed);

/// Projection valued measure from the columns of a random unitary split into
/// `outcomes` nonempty groups (1 <= outcomes <= dim).
Povm random_pvm(std::size_t dim, std::size_t outcomes, std::uint64_t seed);

/// Relabels the outcomes of a POVM; `labels` must have povm.size() entries.
Povm relabel(const Povm &povm, const std::vector<std::string> &labels);
JointPovm relabel(const JointPovm &joint, const std::vector<std::string> &s_labels,
                  const std::vector<std::string> &p_labels);

}  // namespace qmeas

#endif
