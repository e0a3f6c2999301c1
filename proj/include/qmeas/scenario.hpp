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

#ifndef QMEAS_SCENARIO_HPP
#define QMEAS_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmeas/linops.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

namespace qmeas {

// Scenario files are JSON. Complex numbers are [re, im] pairs and matrices
// are row-major nested arrays of them:
//
//   {
//     "version": 1,
//     "dims": {"s": 2, "p": 2},
//     "state": {"named": "singlet"} | {"pure": [[re, im], ...]} | {"matrix": [[[re, im], ...], ...]},
//     "povm_s": {"named": "coin" | "z" | "x"} | {"outcomes": [{"label": "0", "effect": M}, ...]},
//     "povm_p": same as povm_s,
//     "joint": {"named": "independent" | "correlated"} | {"outcomes": [{"s": "0", "p": "0", "effect": M}, ...]},
//     "u_s": M, "u_p": M,
//     "checks": ["noeffect", ...],
//     "tolerance": 1e-10,
//     "seed": 0
//   }
//
// Named states are "singlet", "maximally_mixed" and "random" (seeded by
// "seed"). Everything except version, dims, state and checks is optional;
// absent unitaries are the identity.

inline constexpr int kScenarioVersion = 1;

using MatrixRows = std::vector<std::vector<Complex>>;

struct NamedSpec {
    std::string name;
    bool operator==(const NamedSpec &) const = default;
};

struct LabelledMatrix {
    std::string label;
    MatrixRows effect;
    bool operator==(const LabelledMatrix &) const = default;
};

struct JointEntry {
    std::string s;
    std::string p;
    MatrixRows effect;
    bool operator==(const JointEntry &) const = default;
};

using StateSpec = std::variant<NamedSpec, ComplexVector, MatrixRows>;
using PovmSpec = std::variant<NamedSpec, std::vector<LabelledMatrix>>;
using JointSpec = std::variant<NamedSpec, std::vector<JointEntry>>;

struct Scenario {
    int version = kScenarioVersion;
    ProductDims dims;
    StateSpec state = NamedSpec{"maximally_mixed"};
    std::optional<PovmSpec> povm_s;
    std::optional<PovmSpec> povm_p;
    std::optional<JointSpec> joint;
    std::optional<MatrixRows> u_s;
    std::optional<MatrixRows> u_p;
    std::vector<std::string> checks;
    double tolerance = kDefaultTol;
    std::uint64_t seed = 0;

    bool operator==(const Scenario &) const = default;
};

/// Check names accepted in "checks", in the order they are documented.
const std::vector<std::string> &known_checks();

/// Parses and fully validates. Throws ParseError (malformed JSON or wrong
/// shape), ValidationError (an object fails its domain validation, or an
/// unknown check), MissingInput (a check's inputs are absent). Messages start
/// with the offending field path.
Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario &scenario);

/// Scenario objects turned into validated domain values.
struct ResolvedScenario {
    ProductDims dims;
    DensityOperator state;
    std::optional<Povm> povm_s;
    std::optional<Povm> povm_p;
    std::optional<JointPovm> joint;
    UnitaryOperator u_s;
    UnitaryOperator u_p;
    double tolerance;
};

/// Validation half of parse_scenario, for scenarios built in code.
ResolvedScenario resolve_scenario(const Scenario &scenario);

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    std::optional<std::string> witness;
    double elapsed_ms = 0.0;
};

struct CheckReport {
    std::vector<CheckResult> checks;  // scenario order
    bool overall = true;              // conjunction of checks[i].pass
};

/// Runs every named check. Checks may execute concurrently; the report keeps
/// the declared order.
CheckReport run_scenario(const Scenario &scenario);

std::string report_to_json(const CheckReport &report);
std::string report_to_text(const CheckReport &report);

}  // namespace qmeas

#endif
