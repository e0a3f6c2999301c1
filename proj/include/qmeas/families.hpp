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

#ifndef QMEAS_FAMILIES_HPP
#define QMEAS_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qmeas/observables.hpp"

namespace qmeas::families {

/// A joint POVM together with the single-system POVMs and unitaries it is
/// checked against.
struct JointSample {
    std::string family;
    JointPovm joint;
    Povm povm_s;
    Povm povm_p;
    UnitaryOperator u_s;
    UnitaryOperator u_p;
};

/// JMF-built joint over random POVMs (2-4 outcomes, capped by dimension when
/// `projective`) and random unitaries, dims 2-4.
JointSample jmf_sample(std::uint64_t seed, bool projective = false);

/// t * J1 + (1 - t) * J2 for two JMF-built joints on the same grid; checked
/// against J1's inputs. One in four samples reuses J1's single-system POVMs
/// for J2 with different unitaries.
JointSample jmf_mixture_sample(std::uint64_t seed);

/// E_{s&p} = J(s, p) I for a coupling J of two random outcome distributions a
/// and b, checked against the trivial POVMs {a_s I} and {b_p I}. J mixes the
/// product coupling with the northwest-corner coupling; one in four samples is
/// exactly the product.
JointSample coupling_sample(std::uint64_t seed);

/// Draws from one of the three families above, chosen by the seed.
JointSample structured_sample(std::uint64_t seed);

struct ProjectiveSearchConfig {
    std::size_t iterations = 10000;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
};

struct ProjectiveSearchResult {
    std::size_t candidates = 0;
    std::size_t valid_noeffect = 0;  // valid joint POVMs passing NOEFFECT
    std::size_t counterexamples = 0; // of those, PRODMARG failures
    std::optional<std::uint64_t> first_counterexample;
};

/// Looks for joints with projection valued marginals that pass NOEFFECT but
/// fail PRODMARG. Candidates are JMF joints of random PVMs, half of them
/// shifted by a perturbation whose sums over s and over p vanish (so NOEFFECT
/// is preserved); perturbed joints that are no longer positive are discarded.
/// Iterations run in parallel; the result does not depend on thread count.
ProjectiveSearchResult projective_counterexample_search(const ProjectiveSearchConfig &config);

}  // namespace qmeas::families

#endif
