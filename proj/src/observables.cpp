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

#include "qmeas/observables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "qmeas/errors.hpp"

namespace qmeas {

namespace {

std::string sci(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

ComplexMatrix heisenberg(const UnitaryOperator &u, const ComplexMatrix &e) {
    return adjoint(u.matrix()) * e * u.matrix();
}

void require_dim(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": dim " + std::to_string(got) + ", expected " + std::to_string(want));
    }
}

void require_same_labels(const std::vector<std::string> &joint, const std::vector<std::string> &single,
                         const char *side) {
    const std::set<std::string> a(joint.begin(), joint.end());
    const std::set<std::string> b(single.begin(), single.end());
    if (a != b) {
        throw Error(ErrorKind::LabelMismatch, std::string(side) + " labels of the joint POVM differ from the " +
                                                  side + " POVM's labels");
    }
}

// Marginals are re-validated loosely: a joint valid at tol has marginals
// valid at (number of summed effects) * tol.
constexpr double kMarginalTol = 1e-6;

std::vector<ComplexMatrix> sums_over_p(const JointPovm &joint) {
    std::vector<ComplexMatrix> out;
    for (std::size_t s = 0; s < joint.s_labels().size(); ++s) {
        ComplexMatrix sum = joint.effect(s, 0);
        for (std::size_t p = 1; p < joint.p_labels().size(); ++p) {
            sum = sum + joint.effect(s, p);
        }
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<ComplexMatrix> sums_over_s(const JointPovm &joint) {
    std::vector<ComplexMatrix> out;
    for (std::size_t p = 0; p < joint.p_labels().size(); ++p) {
        ComplexMatrix sum = joint.effect(0, p);
        for (std::size_t s = 1; s < joint.s_labels().size(); ++s) {
            sum = sum + joint.effect(s, p);
        }
        out.push_back(std::move(sum));
    }
    return out;
}

}  // namespace

std::string joint_label(const std::string &s, const std::string &p) {
    return s + "&" + p;
}

Povm Povm::create(std::size_t dim, std::vector<Effect> outcomes, double tol) {
    if (dim == 0) {
        throw Error(ErrorKind::DimensionMismatch, "POVM dimension must be positive");
    }
    std::set<std::string> seen;
    for (const auto &o : outcomes) {
        if (!seen.insert(o.label).second) {
            throw Error(ErrorKind::DuplicateLabel, "outcome label '" + o.label + "' appears twice");
        }
    }
    ComplexMatrix sum = ComplexMatrix::zeros(dim);
    for (const auto &o : outcomes) {
        require_dim(o.effect.dim(), dim, ("effect '" + o.label + "'").c_str());
        if (!is_hermitian(o.effect, tol)) {
            throw Error(ErrorKind::NotHermitian, "effect '" + o.label + "' is not Hermitian");
        }
        const auto eig = hermitian_eigenvalues(o.effect);
        if (eig.front() < -tol) {
            throw Error(ErrorKind::EffectNotPositive,
                        "effect '" + o.label + "' has eigenvalue " + sci(eig.front()));
        }
        if (eig.back() > 1.0 + tol) {
            throw Error(ErrorKind::EffectExceedsIdentity,
                        "effect '" + o.label + "' has eigenvalue " + sci(eig.back()));
        }
        sum = sum + o.effect;
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(dim));
    if (defect > tol) {
        throw Error(ErrorKind::SumNotIdentity, "effects sum to identity only within " + sci(defect));
    }
    return Povm(dim, std::move(outcomes));
}

std::vector<std::string> Povm::labels() const {
    std::vector<std::string> out;
    out.reserve(outcomes_.size());
    for (const auto &o : outcomes_) {
        out.push_back(o.label);
    }
    return out;
}

const ComplexMatrix &Povm::effect(const std::string &label) const {
    for (const auto &o : outcomes_) {
        if (o.label == label) {
            return o.effect;
        }
    }
    throw Error(ErrorKind::LabelMismatch, "no outcome labelled '" + label + "'");
}

JointPovm JointPovm::create(ProductDims dims, std::vector<JointEffect> outcomes, double tol) {
    std::vector<std::string> s_labels;
    std::vector<std::string> p_labels;
    for (const auto &o : outcomes) {
        if (std::find(s_labels.begin(), s_labels.end(), o.s_label) == s_labels.end()) {
            s_labels.push_back(o.s_label);
        }
        if (std::find(p_labels.begin(), p_labels.end(), o.p_label) == p_labels.end()) {
            p_labels.push_back(o.p_label);
        }
    }
    const std::size_t ns = s_labels.size();
    const std::size_t np = p_labels.size();
    std::vector<std::optional<ComplexMatrix>> grid(ns * np);
    std::vector<Effect> flat;
    for (auto &o : outcomes) {
        const auto s = std::find(s_labels.begin(), s_labels.end(), o.s_label) - s_labels.begin();
        const auto p = std::find(p_labels.begin(), p_labels.end(), o.p_label) - p_labels.begin();
        auto &cell = grid[s * np + p];
        if (cell) {
            throw Error(ErrorKind::DuplicateLabel, "outcome pair " + joint_label(o.s_label, o.p_label) + " appears twice");
        }
        cell = o.effect;
        flat.push_back({joint_label(o.s_label, o.p_label), o.effect});
    }
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t p = 0; p < np; ++p) {
            if (!grid[s * np + p]) {
                throw Error(ErrorKind::IncompleteGrid,
                            "outcome pair " + joint_label(s_labels[s], p_labels[p]) + " is missing");
            }
        }
    }
    Povm::create(dims.total(), std::move(flat), tol);
    std::vector<ComplexMatrix> effects;
    effects.reserve(grid.size());
    for (auto &cell : grid) {
        effects.push_back(std::move(*cell));
    }
    return JointPovm(dims, std::move(s_labels), std::move(p_labels), std::move(effects));
}

std::vector<JointEffect> JointPovm::outcomes() const {
    std::vector<JointEffect> out;
    for (std::size_t s = 0; s < s_labels_.size(); ++s) {
        for (std::size_t p = 0; p < p_labels_.size(); ++p) {
            out.push_back({s_labels_[s], p_labels_[p], effect(s, p)});
        }
    }
    return out;
}

bool is_projection_valued(const Povm &povm, double tol) {
    const auto &o = povm.outcomes();
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (max_abs_diff(o[i].effect * o[i].effect, o[i].effect) > tol) {
            return false;
        }
        for (std::size_t j = i + 1; j < o.size(); ++j) {
            if (max_abs_entry(o[i].effect * o[j].effect) > tol) {
                return false;
            }
        }
    }
    return true;
}

JointPovm jmf_joint(const Povm &povm_s, const Povm &povm_p, const UnitaryOperator &u_s, const UnitaryOperator &u_p) {
    require_dim(u_s.dim(), povm_s.dim(), "U_S");
    require_dim(u_p.dim(), povm_p.dim(), "U_P");
    std::vector<JointEffect> outcomes;
    outcomes.reserve(povm_s.size() * povm_p.size());
    for (const auto &es : povm_s.outcomes()) {
        const ComplexMatrix hs = heisenberg(u_s, es.effect);
        for (const auto &ep : povm_p.outcomes()) {
            outcomes.push_back({es.label, ep.label, kron(hs, heisenberg(u_p, ep.effect))});
        }
    }
    // Validation at a loose tolerance: the construction is a POVM by algebra,
    // and only roundoff separates it from one.
    return JointPovm::create({povm_s.dim(), povm_p.dim()}, std::move(outcomes), 1e-8);
}

Povm marginal_s(const JointPovm &joint) {
    const auto sums = sums_over_p(joint);
    std::vector<Effect> out;
    for (std::size_t s = 0; s < sums.size(); ++s) {
        out.push_back({joint.s_labels()[s], sums[s]});
    }
    return Povm::create(joint.dims().total(), std::move(out), kMarginalTol);
}

Povm marginal_p(const JointPovm &joint) {
    const auto sums = sums_over_s(joint);
    std::vector<Effect> out;
    for (std::size_t p = 0; p < sums.size(); ++p) {
        out.push_back({joint.p_labels()[p], sums[p]});
    }
    return Povm::create(joint.dims().total(), std::move(out), kMarginalTol);
}

CheckOutcome check_noeffect(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                            const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol) {
    const ProductDims dims = joint.dims();
    require_dim(povm_s.dim(), dims.dim_s, "S POVM");
    require_dim(povm_p.dim(), dims.dim_p, "P POVM");
    require_dim(u_s.dim(), dims.dim_s, "U_S");
    require_dim(u_p.dim(), dims.dim_p, "U_P");
    require_same_labels(joint.s_labels(), povm_s.labels(), "S");
    require_same_labels(joint.p_labels(), povm_p.labels(), "P");

    const auto id_s = ComplexMatrix::identity(dims.dim_s);
    const auto id_p = ComplexMatrix::identity(dims.dim_p);
    const auto ms = sums_over_p(joint);
    const auto mp = sums_over_s(joint);

    CheckOutcome out;
    for (std::size_t s = 0; s < ms.size(); ++s) {
        const auto &label = joint.s_labels()[s];
        const auto expected = kron(heisenberg(u_s, povm_s.effect(label)), id_p);
        out.record(max_abs_diff(ms[s], expected), tol, "s=" + label);
    }
    for (std::size_t p = 0; p < mp.size(); ++p) {
        const auto &label = joint.p_labels()[p];
        const auto expected = kron(id_s, heisenberg(u_p, povm_p.effect(label)));
        out.record(max_abs_diff(mp[p], expected), tol, "p=" + label);
    }
    return out;
}

CheckOutcome check_prodmarg(const JointPovm &joint, double tol) {
    const auto ms = sums_over_p(joint);
    const auto mp = sums_over_s(joint);
    CheckOutcome out;
    for (std::size_t s = 0; s < joint.s_labels().size(); ++s) {
        for (std::size_t p = 0; p < joint.p_labels().size(); ++p) {
            const auto product = ms[s] * mp[p];
            out.record(max_abs_diff(joint.effect(s, p), product), tol,
                       joint_label(joint.s_labels()[s], joint.p_labels()[p]));
        }
    }
    return out;
}

CheckOutcome check_jmf_form(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                            const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol) {
    const ProductDims dims = joint.dims();
    require_dim(povm_s.dim(), dims.dim_s, "S POVM");
    require_dim(povm_p.dim(), dims.dim_p, "P POVM");
    require_dim(u_s.dim(), dims.dim_s, "U_S");
    require_dim(u_p.dim(), dims.dim_p, "U_P");
    require_same_labels(joint.s_labels(), povm_s.labels(), "S");
    require_same_labels(joint.p_labels(), povm_p.labels(), "P");

    CheckOutcome out;
    for (std::size_t s = 0; s < joint.s_labels().size(); ++s) {
        const auto &sl = joint.s_labels()[s];
        const auto hs = heisenberg(u_s, povm_s.effect(sl));
        for (std::size_t p = 0; p < joint.p_labels().size(); ++p) {
            const auto &pl = joint.p_labels()[p];
            const auto expected = kron(hs, heisenberg(u_p, povm_p.effect(pl)));
            out.record(max_abs_diff(joint.effect(s, p), expected), tol, joint_label(sl, pl));
        }
    }
    return out;
}

EquivalenceReport theorem1_verify(const JointPovm &joint, const Povm &povm_s, const Povm &povm_p,
                                  const UnitaryOperator &u_s, const UnitaryOperator &u_p, double tol) {
    EquivalenceReport r;
    r.jmf_form = check_jmf_form(joint, povm_s, povm_p, u_s, u_p, tol);
    r.noeffect = check_noeffect(joint, povm_s, povm_p, u_s, u_p, tol);
    r.prodmarg = check_prodmarg(joint, tol);
    r.biconditional_holds = r.jmf_form.pass == (r.noeffect.pass && r.prodmarg.pass);
    return r;
}

Povm random_povm(std::size_t dim, std::size_t outcomes, std::uint64_t seed) {
    if (outcomes == 0) {
        throw Error(ErrorKind::SumNotIdentity, "a POVM needs at least one outcome");
    }
    std::mt19937_64 rng(seed);
    std::vector<ComplexMatrix> grams;
    ComplexMatrix total = ComplexMatrix::zeros(dim);
    for (std::size_t k = 0; k < outcomes; ++k) {
        const auto g = ginibre_matrix(dim, rng);
        grams.push_back(g * adjoint(g));
        total = total + grams.back();
    }
    const auto eig = hermitian_eigen(total);
    std::vector<Complex> inv_sqrt(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        inv_sqrt[i] = 1.0 / std::sqrt(eig.values[i]);
    }
    const auto &v = eig.vectors;
    const ComplexMatrix s_inv_half = v * ComplexMatrix::diagonal(inv_sqrt) * adjoint(v);
    std::vector<Effect> effects;
    for (std::size_t k = 0; k < outcomes; ++k) {
        effects.push_back({std::to_string(k), hermitian_part(s_inv_half * grams[k] * s_inv_half)});
    }
    return Povm::create(dim, std::move(effects));
}

Povm random_pvm(std::size_t dim, std::size_t outcomes, std::uint64_t seed) {
    if (outcomes == 0 || outcomes > dim) {
        throw Error(ErrorKind::DimensionMismatch, "a PVM on dim " + std::to_string(dim) + " cannot have " +
                                                      std::to_string(outcomes) + " nonzero outcomes");
    }
    const auto u = random_unitary(dim, seed);
    std::mt19937_64 rng(derive_seed(seed, 1));
    // Column c belongs to group owner[c]; each group owns at least one column.
    std::vector<std::size_t> owner(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        owner[c] = c < outcomes ? c : std::uniform_int_distribution<std::size_t>(0, outcomes - 1)(rng);
    }
    std::vector<Effect> effects;
    for (std::size_t k = 0; k < outcomes; ++k) {
        ComplexMatrix proj = ComplexMatrix::zeros(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            if (owner[c] != k) {
                continue;
            }
            ComplexVector col(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                col[r] = u.matrix()(r, c);
            }
            proj = proj + ComplexMatrix::outer(col, col);
        }
        effects.push_back({std::to_string(k), std::move(proj)});
    }
    return Povm::create(dim, std::move(effects));
}

Povm relabel(const Povm &povm, const std::vector<std::string> &labels) {
    if (labels.size() != povm.size()) {
        throw Error(ErrorKind::LabelMismatch, "relabel: wrong number of labels");
    }
    std::vector<Effect> out;
    for (std::size_t i = 0; i < povm.size(); ++i) {
        out.push_back({labels[i], povm[i].effect});
    }
    return Povm::create(povm.dim(), std::move(out), 1e-8);
}

JointPovm relabel(const JointPovm &joint, const std::vector<std::string> &s_labels,
                  const std::vector<std::string> &p_labels) {
    if (s_labels.size() != joint.s_labels().size() || p_labels.size() != joint.p_labels().size()) {
        throw Error(ErrorKind::LabelMismatch, "relabel: wrong number of labels");
    }
    std::vector<JointEffect> out;
    for (std::size_t s = 0; s < s_labels.size(); ++s) {
        for (std::size_t p = 0; p < p_labels.size(); ++p) {
            out.push_back({s_labels[s], p_labels[p], joint.effect(s, p)});
        }
    }
    return JointPovm::create(joint.dims(), std::move(out), 1e-8);
}

}  // namespace qmeas
