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

#ifndef QMEAS_MEASUREMENT_HPP
#define QMEAS_MEASUREMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmeas/check.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

namespace qmeas {

struct OutcomeKey {
    std::string first;
    std::optional<std::string> second;  // set for joint outcomes

    std::string to_string() const {
        return second ? first + "&" + *second : first;
    }
    bool operator==(const OutcomeKey &) const = default;
};

struct OutcomeProbability {
    OutcomeKey key;
    double probability = 0.0;
};

/// Probabilities in [0, 1] summing to 1, in the POVM's declared order.
class OutcomeDistribution {
public:
    /// Values within tol of [0, 1] are clamped, then the list is renormalized.
    /// Throws InvalidProbability for anything further out or a sum off by
    /// more than tol.
    static OutcomeDistribution from_raw(std::vector<OutcomeProbability> raw, double tol = kDefaultTol);

    const std::vector<OutcomeProbability> &entries() const noexcept {
        return entries_;
    }
    std::size_t size() const noexcept {
        return entries_.size();
    }
    const OutcomeProbability &operator[](std::size_t i) const {
        return entries_[i];
    }
    /// Throws LabelMismatch for an unknown key.
    double at(const OutcomeKey &key) const;
    double at(const std::string &first) const {
        return at(OutcomeKey{first, std::nullopt});
    }
    double at(const std::string &first, const std::string &second) const {
        return at(OutcomeKey{first, second});
    }

private:
    explicit OutcomeDistribution(std::vector<OutcomeProbability> e) : entries_(std::move(e)) {
    }
    std::vector<OutcomeProbability> entries_;
};

/// Re Tr(effect rho), unclamped. Throws DimensionMismatch.
double prob(const DensityOperator &rho, const ComplexMatrix &effect);

OutcomeDistribution distribution(const DensityOperator &rho, const Povm &povm);

/// Pr(s&p) = Tr[(U_S^dagger E_s U_S (x) U_P^dagger E_p U_P) tau], keyed (s, p).
OutcomeDistribution jmf_probability(const DensityOperator &tau, const Povm &povm_s, const Povm &povm_p,
                                    const UnitaryOperator &u_s, const UnitaryOperator &u_p);

/// Pr(s&p) = Tr(E_{s&p} tau) for an explicit joint POVM.
OutcomeDistribution joint_distribution(const DensityOperator &tau, const JointPovm &joint);

/// Sums a joint distribution over its second label (keeps first-label order).
OutcomeDistribution marginal_first(const OutcomeDistribution &joint);
/// Sums over the first label.
OutcomeDistribution marginal_second(const OutcomeDistribution &joint);

/// Tr[(I (x) E_p) tau]
double condition_probability(const DensityOperator &tau, const ComplexMatrix &effect_p, ProductDims dims);

/// U_S Tr_P[(I (x) E_p) tau] U_S^dagger / Tr[(I (x) E_p) tau]: the state of S
/// conditioned on result p. Throws ZeroProbabilityCondition when the
/// denominator is <= tau.tol().
DensityOperator srf(const DensityOperator &tau, const ComplexMatrix &effect_p, const UnitaryOperator &u_s,
                    ProductDims dims);

/// The same quotient without the U_S conjugation.
DensityOperator ozawa_pre_state(const DensityOperator &tau, const ComplexMatrix &effect_p, ProductDims dims);

/// sum_p Pr(p) sigma_p against U_S Tr_P(tau) U_S^dagger. Outcomes with
/// Pr(p) <= tol contribute nothing.
CheckOutcome mixture_identity_check(const DensityOperator &tau, const Povm &povm_p, const UnitaryOperator &u_s,
                                    ProductDims dims, double tol = kDefaultTol);

/// Local unitaries on P are invisible to S. For every E_s evaluates
///   Tr[E_s (V_S Tr_P(tau) V_S^dagger)]
///   Tr[(E_s (x) I)(V_S (x) I) tau (V_S^dagger (x) I)]
///   Tr[(E_s (x) I)(I (x) V_P^dagger)(I (x) V_P)(V_S (x) I) tau (V_S^dagger (x) I)]
///   Tr[(E_s (x) I)(V_S (x) V_P) tau (V_S (x) V_P)^dagger]
///   Tr{E_s Tr_P[(V_S (x) V_P) tau (V_S (x) V_P)^dagger]}
/// and passes iff all agree with the first within tol.
CheckOutcome no_signaling_unitary_check(const DensityOperator &tau, const UnitaryOperator &v_s,
                                        const UnitaryOperator &v_p, const Povm &povm_s, ProductDims dims,
                                        double tol = kDefaultTol);

struct ConditionalCheckReport {
    CheckOutcome outcome;
    std::vector<std::string> skipped;  // P labels with Pr(p) below the skip threshold
};

/// Conditionals Pr(s&p)/Pr(p), with Pr(s&p) = Tr{(U_S^dagger E_s U_S (x) E_p) tau},
/// against Tr(E_s srf(tau, E_p, U_S)) for every (s, p).
ConditionalCheckReport theorem5_verify(const DensityOperator &tau, const Povm &povm_s, const Povm &povm_p,
                                       const UnitaryOperator &u_s, double tol = kDefaultTol,
                                       double skip_below = 1e-8);

/// Inverse-CDF draw over the POVM's outcome order. Pure in (rho, povm, seed).
std::string sample_outcome(const DensityOperator &rho, const Povm &povm, std::uint64_t seed);

/// n independent draws from one generator seeded with `seed`.
std::vector<std::string> sample_outcomes(const DensityOperator &rho, const Povm &povm, std::size_t n,
                                         std::uint64_t seed);

}  // namespace qmeas

#endif
