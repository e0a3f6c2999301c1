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

#include "qmeas/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qmeas/errors.hpp"

namespace qmeas {

namespace {

void require_dim(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": dim " + std::to_string(got) + ", expected " + std::to_string(want));
    }
}

void require_product(const DensityOperator &tau, ProductDims dims) {
    if (tau.dim() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch, "state of dim " + std::to_string(tau.dim()) + " is not on " +
                                                      std::to_string(dims.dim_s) + "x" +
                                                      std::to_string(dims.dim_p));
    }
}

ComplexMatrix heisenberg(const UnitaryOperator &u, const ComplexMatrix &e) {
    return adjoint(u.matrix()) * e * u.matrix();
}

// Tr_P[(I (x) E_p) tau]
ComplexMatrix conditioned_numerator(const DensityOperator &tau, const ComplexMatrix &effect_p, ProductDims dims) {
    require_product(tau, dims);
    require_dim(effect_p.dim(), dims.dim_p, "P effect");
    return partial_trace_p(kron(ComplexMatrix::identity(dims.dim_s), effect_p) * tau.matrix(), dims);
}

DensityOperator normalize_conditioned(const ComplexMatrix &numerator, double tol) {
    const double pr = trace(numerator).real();
    if (!(pr > tol)) {
        std::ostringstream msg;
        msg << "conditioning outcome has probability " << pr;
        throw Error(ErrorKind::ZeroProbabilityCondition, msg.str());
    }
    return DensityOperator::from_matrix(hermitian_part((1.0 / pr) * numerator), tol);
}

}  // namespace

OutcomeDistribution OutcomeDistribution::from_raw(std::vector<OutcomeProbability> raw, double tol) {
    double sum = 0.0;
    for (auto &e : raw) {
        if (!std::isfinite(e.probability) || e.probability < -tol || e.probability > 1.0 + tol) {
            std::ostringstream msg;
            msg << "probability of " << e.key.to_string() << " is " << e.probability;
            throw Error(ErrorKind::InvalidProbability, msg.str());
        }
        e.probability = std::clamp(e.probability, 0.0, 1.0);
        sum += e.probability;
    }
    const double slack = tol * static_cast<double>(std::max<std::size_t>(1, raw.size()));
    if (raw.empty() || std::abs(sum - 1.0) > slack) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum;
        throw Error(ErrorKind::InvalidProbability, msg.str());
    }
    for (auto &e : raw) {
        e.probability /= sum;
    }
    return OutcomeDistribution(std::move(raw));
}

double OutcomeDistribution::at(const OutcomeKey &key) const {
    for (const auto &e : entries_) {
        if (e.key == key) {
            return e.probability;
        }
    }
    throw Error(ErrorKind::LabelMismatch, "no outcome " + key.to_string());
}

double prob(const DensityOperator &rho, const ComplexMatrix &effect) {
    require_dim(effect.dim(), rho.dim(), "effect");
    // Tr(E rho) without forming the product.
    const std::size_t n = rho.dim();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            acc += effect(i, k) * rho.matrix()(k, i);
        }
    }
    return acc.real();
}

OutcomeDistribution distribution(const DensityOperator &rho, const Povm &povm) {
    require_dim(povm.dim(), rho.dim(), "POVM");
    std::vector<OutcomeProbability> raw;
    for (const auto &o : povm.outcomes()) {
        raw.push_back({{o.label, std::nullopt}, prob(rho, o.effect)});
    }
    return OutcomeDistribution::from_raw(std::move(raw), rho.tol());
}

OutcomeDistribution jmf_probability(const DensityOperator &tau, const Povm &povm_s, const Povm &povm_p,
                                    const UnitaryOperator &u_s, const UnitaryOperator &u_p) {
    const ProductDims dims{povm_s.dim(), povm_p.dim()};
    require_product(tau, dims);
    require_dim(u_s.dim(), dims.dim_s, "U_S");
    require_dim(u_p.dim(), dims.dim_p, "U_P");
    std::vector<ComplexMatrix> hp;
    for (const auto &ep : povm_p.outcomes()) {
        hp.push_back(heisenberg(u_p, ep.effect));
    }
    std::vector<OutcomeProbability> raw;
    for (const auto &es : povm_s.outcomes()) {
        const auto hs = heisenberg(u_s, es.effect);
        for (std::size_t p = 0; p < povm_p.size(); ++p) {
            raw.push_back({{es.label, povm_p[p].label}, prob(tau, kron(hs, hp[p]))});
        }
    }
    return OutcomeDistribution::from_raw(std::move(raw), tau.tol());
}

OutcomeDistribution joint_distribution(const DensityOperator &tau, const JointPovm &joint) {
    require_dim(joint.dims().total(), tau.dim(), "joint POVM");
    std::vector<OutcomeProbability> raw;
    for (std::size_t s = 0; s < joint.s_labels().size(); ++s) {
        for (std::size_t p = 0; p < joint.p_labels().size(); ++p) {
            raw.push_back({{joint.s_labels()[s], joint.p_labels()[p]}, prob(tau, joint.effect(s, p))});
        }
    }
    return OutcomeDistribution::from_raw(std::move(raw), tau.tol());
}

namespace {

OutcomeDistribution marginalize(const OutcomeDistribution &joint, bool keep_first) {
    std::vector<OutcomeProbability> out;
    for (const auto &e : joint.entries()) {
        if (!e.key.second) {
            throw Error(ErrorKind::LabelMismatch, "marginal of a non-joint distribution");
        }
        const std::string &label = keep_first ? e.key.first : *e.key.second;
        auto it = std::find_if(out.begin(), out.end(), [&](const auto &o) { return o.key.first == label; });
        if (it == out.end()) {
            out.push_back({{label, std::nullopt}, e.probability});
        } else {
            it->probability += e.probability;
        }
    }
    return OutcomeDistribution::from_raw(std::move(out));
}

}  // namespace

OutcomeDistribution marginal_first(const OutcomeDistribution &joint) {
    return marginalize(joint, true);
}

OutcomeDistribution marginal_second(const OutcomeDistribution &joint) {
    return marginalize(joint, false);
}

double condition_probability(const DensityOperator &tau, const ComplexMatrix &effect_p, ProductDims dims) {
    require_product(tau, dims);
    require_dim(effect_p.dim(), dims.dim_p, "P effect");
    return prob(tau, kron(ComplexMatrix::identity(dims.dim_s), effect_p));
}

DensityOperator srf(const DensityOperator &tau, const ComplexMatrix &effect_p, const UnitaryOperator &u_s,
                    ProductDims dims) {
    require_dim(u_s.dim(), dims.dim_s, "U_S");
    const auto pre = ozawa_pre_state(tau, effect_p, dims);
    return DensityOperator::from_matrix(hermitian_part(conjugate(u_s.matrix(), pre.matrix())), tau.tol());
}

DensityOperator ozawa_pre_state(const DensityOperator &tau, const ComplexMatrix &effect_p, ProductDims dims) {
    return normalize_conditioned(conditioned_numerator(tau, effect_p, dims), tau.tol());
}

CheckOutcome mixture_identity_check(const DensityOperator &tau, const Povm &povm_p, const UnitaryOperator &u_s,
                                    ProductDims dims, double tol) {
    require_product(tau, dims);
    require_dim(povm_p.dim(), dims.dim_p, "P POVM");
    require_dim(u_s.dim(), dims.dim_s, "U_S");
    const DensityOperator rho_p = reduced_state_p(tau, dims);
    ComplexMatrix mixture = ComplexMatrix::zeros(dims.dim_s);
    for (const auto &o : povm_p.outcomes()) {
        const double pr = prob(rho_p, o.effect);
        if (pr <= tol) {
            continue;
        }
        mixture = mixture + pr * srf(tau, o.effect, u_s, dims).matrix();
    }
    const auto unreduced = evolve(reduced_state_s(tau, dims), u_s);
    CheckOutcome out;
    out.record(max_abs_diff(mixture, unreduced.matrix()), tol, "mixture");
    return out;
}

CheckOutcome no_signaling_unitary_check(const DensityOperator &tau, const UnitaryOperator &v_s,
                                        const UnitaryOperator &v_p, const Povm &povm_s, ProductDims dims,
                                        double tol) {
    require_product(tau, dims);
    require_dim(v_s.dim(), dims.dim_s, "V_S");
    require_dim(v_p.dim(), dims.dim_p, "V_P");
    require_dim(povm_s.dim(), dims.dim_s, "S POVM");

    const auto id_s = ComplexMatrix::identity(dims.dim_s);
    const auto id_p = ComplexMatrix::identity(dims.dim_p);
    const auto &t = tau.matrix();
    const auto vs_i = kron(v_s.matrix(), id_p);
    const auto vs_i_dag = kron(adjoint(v_s.matrix()), id_p);
    const auto i_vp = kron(id_s, v_p.matrix());
    const auto i_vp_dag = kron(id_s, adjoint(v_p.matrix()));
    const auto vs_vp = kron(v_s.matrix(), v_p.matrix());

    const auto local = v_s.matrix() * partial_trace_p(t, dims) * adjoint(v_s.matrix());
    const auto evolved_local = vs_i * t * vs_i_dag;
    const auto evolved_inserted = i_vp_dag * i_vp * evolved_local;
    const auto evolved_joint = vs_vp * t * adjoint(vs_vp);
    const auto evolved_joint_reduced = partial_trace_p(evolved_joint, dims);

    CheckOutcome out;
    for (const auto &o : povm_s.outcomes()) {
        const auto es_i = kron(o.effect, id_p);
        const Complex m1 = trace(o.effect * local);
        const Complex m2 = trace(es_i * evolved_local);
        const Complex m3 = trace(es_i * evolved_inserted);
        const Complex m4 = trace(es_i * evolved_joint);
        const Complex m5 = trace(o.effect * evolved_joint_reduced);
        const double dev = std::max({std::abs(m2 - m1), std::abs(m3 - m1), std::abs(m4 - m1), std::abs(m5 - m1)});
        out.record(dev, tol, o.label);
    }
    return out;
}

ConditionalCheckReport theorem5_verify(const DensityOperator &tau, const Povm &povm_s, const Povm &povm_p,
                                       const UnitaryOperator &u_s, double tol, double skip_below) {
    const ProductDims dims{povm_s.dim(), povm_p.dim()};
    require_product(tau, dims);
    require_dim(u_s.dim(), dims.dim_s, "U_S");

    ConditionalCheckReport report;
    for (const auto &ep : povm_p.outcomes()) {
        const double pr_p = condition_probability(tau, ep.effect, dims);
        if (pr_p < skip_below) {
            report.skipped.push_back(ep.label);
            continue;
        }
        const auto sigma_p = srf(tau, ep.effect, u_s, dims);
        for (const auto &es : povm_s.outcomes()) {
            const double joint = prob(tau, kron(heisenberg(u_s, es.effect), ep.effect));
            const double conditional = joint / pr_p;
            const double from_state = prob(sigma_p, es.effect);
            report.outcome.record(std::abs(conditional - from_state), tol, joint_label(es.label, ep.label));
        }
    }
    return report;
}

namespace {

std::string draw(const OutcomeDistribution &dist, double u) {
    double cumulative = 0.0;
    for (const auto &e : dist.entries()) {
        cumulative += e.probability;
        if (u < cumulative) {
            return e.key.first;
        }
    }
    // u fell in the roundoff gap above the last cumulative sum.
    for (auto it = dist.entries().rbegin(); it != dist.entries().rend(); ++it) {
        if (it->probability > 0.0) {
            return it->key.first;
        }
    }
    return dist.entries().back().key.first;
}

}  // namespace

std::string sample_outcome(const DensityOperator &rho, const Povm &povm, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    return draw(distribution(rho, povm), u);
}

std::vector<std::string> sample_outcomes(const DensityOperator &rho, const Povm &povm, std::size_t n,
                                         std::uint64_t seed) {
    const auto dist = distribution(rho, povm);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(draw(dist, uniform(rng)));
    }
    return out;
}

}  // namespace qmeas
