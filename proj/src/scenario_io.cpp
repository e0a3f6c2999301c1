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

#include <algorithm>

#include "json.hpp"
#include "qmeas/canned.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/scenario.hpp"

namespace qmeas {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &path, const std::string &what) {
    throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json &member(const json &obj, const std::string &key, const std::string &path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        parse_fail(path, "missing field '" + key + "'");
    }
    return *it;
}

void only_keys(const json &obj, std::initializer_list<const char *> allowed, const std::string &path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char *a : allowed) {
            ok = ok || it.key() == a;
        }
        if (!ok) {
            parse_fail(path, "unexpected field '" + it.key() + "'");
        }
    }
}

void require_object(const json &j, const std::string &path) {
    if (!j.is_object()) {
        parse_fail(path, "expected an object");
    }
}

std::string read_string(const json &j, const std::string &path) {
    if (!j.is_string()) {
        parse_fail(path, "expected a string");
    }
    return j.get<std::string>();
}

std::size_t read_positive(const json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) {
        parse_fail(path, "expected a positive integer");
    }
    return j.get<std::size_t>();
}

Complex read_complex(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_fail(path, "expected a complex number [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector read_vector(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        parse_fail(path, "expected a nonempty array of complex numbers");
    }
    ComplexVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(read_complex(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return v;
}

MatrixRows read_matrix(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        parse_fail(path, "expected a nonempty array of rows");
    }
    MatrixRows rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        rows.push_back(read_vector(j[r], path + "[" + std::to_string(r) + "]"));
        if (rows.back().size() != j.size()) {
            parse_fail(path + "[" + std::to_string(r) + "]", "matrix must be square");
        }
    }
    return rows;
}

NamedSpec read_named(const json &obj, const std::string &path) {
    return {read_string(obj.at("named"), path + ".named")};
}

StateSpec read_state(const json &j, const std::string &path) {
    require_object(j, path);
    only_keys(j, {"named", "pure", "matrix"}, path);
    if (j.size() != 1) {
        parse_fail(path, "expected exactly one of 'named', 'pure', 'matrix'");
    }
    if (j.contains("named")) {
        return read_named(j, path);
    }
    if (j.contains("pure")) {
        return read_vector(j.at("pure"), path + ".pure");
    }
    return read_matrix(j.at("matrix"), path + ".matrix");
}

PovmSpec read_povm(const json &j, const std::string &path) {
    require_object(j, path);
    only_keys(j, {"named", "outcomes"}, path);
    if (j.size() != 1) {
        parse_fail(path, "expected exactly one of 'named', 'outcomes'");
    }
    if (j.contains("named")) {
        return read_named(j, path);
    }
    const json &arr = j.at("outcomes");
    const std::string apath = path + ".outcomes";
    if (!arr.is_array()) {
        parse_fail(apath, "expected an array");
    }
    std::vector<LabelledMatrix> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ipath = apath + "[" + std::to_string(i) + "]";
        require_object(arr[i], ipath);
        only_keys(arr[i], {"label", "effect"}, ipath);
        out.push_back({read_string(member(arr[i], "label", ipath), ipath + ".label"),
                       read_matrix(member(arr[i], "effect", ipath), ipath + ".effect")});
    }
    return out;
}

JointSpec read_joint(const json &j, const std::string &path) {
    require_object(j, path);
    only_keys(j, {"named", "outcomes"}, path);
    if (j.size() != 1) {
        parse_fail(path, "expected exactly one of 'named', 'outcomes'");
    }
    if (j.contains("named")) {
        return read_named(j, path);
    }
    const json &arr = j.at("outcomes");
    const std::string apath = path + ".outcomes";
    if (!arr.is_array()) {
        parse_fail(apath, "expected an array");
    }
    std::vector<JointEntry> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ipath = apath + "[" + std::to_string(i) + "]";
        require_object(arr[i], ipath);
        only_keys(arr[i], {"s", "p", "effect"}, ipath);
        out.push_back({read_string(member(arr[i], "s", ipath), ipath + ".s"),
                       read_string(member(arr[i], "p", ipath), ipath + ".p"),
                       read_matrix(member(arr[i], "effect", ipath), ipath + ".effect")});
    }
    return out;
}

json write_complex(const Complex &z) {
    return json::array({z.real(), z.imag()});
}

json write_vector(const ComplexVector &v) {
    json out = json::array();
    for (const auto &z : v) {
        out.push_back(write_complex(z));
    }
    return out;
}

json write_matrix(const MatrixRows &m) {
    json out = json::array();
    for (const auto &row : m) {
        out.push_back(write_vector(row));
    }
    return out;
}

json write_state(const StateSpec &s) {
    if (const auto *n = std::get_if<NamedSpec>(&s)) {
        return {{"named", n->name}};
    }
    if (const auto *v = std::get_if<ComplexVector>(&s)) {
        return {{"pure", write_vector(*v)}};
    }
    return {{"matrix", write_matrix(std::get<MatrixRows>(s))}};
}

json write_povm(const PovmSpec &s) {
    if (const auto *n = std::get_if<NamedSpec>(&s)) {
        return {{"named", n->name}};
    }
    json arr = json::array();
    for (const auto &o : std::get<std::vector<LabelledMatrix>>(s)) {
        arr.push_back({{"label", o.label}, {"effect", write_matrix(o.effect)}});
    }
    return {{"outcomes", arr}};
}

json write_joint(const JointSpec &s) {
    if (const auto *n = std::get_if<NamedSpec>(&s)) {
        return {{"named", n->name}};
    }
    json arr = json::array();
    for (const auto &o : std::get<std::vector<JointEntry>>(s)) {
        arr.push_back({{"s", o.s}, {"p", o.p}, {"effect", write_matrix(o.effect)}});
    }
    return {{"outcomes", arr}};
}

// Runs `build`, turning any library error into a ValidationError at `path`.
template <typename F>
auto validated(const std::string &path, F &&build) -> decltype(build()) {
    try {
        return build();
    } catch (const Error &e) {
        throw Error(ErrorKind::ValidationError, path + ": " + e.what());
    }
}

[[noreturn]] void invalid(const std::string &path, const std::string &what) {
    throw Error(ErrorKind::ValidationError, path + ": " + what);
}

DensityOperator resolve_state(const Scenario &scn) {
    const std::size_t n = scn.dims.total();
    const double tol = scn.tolerance;
    if (const auto *named = std::get_if<NamedSpec>(&scn.state)) {
        if (named->name == "singlet") {
            if (scn.dims != ProductDims{2, 2}) {
                invalid("state.named", "singlet needs dims {s: 2, p: 2}");
            }
            return DensityOperator::from_matrix(canned::singlet().matrix(), tol);
        }
        if (named->name == "maximally_mixed") {
            return DensityOperator::from_matrix((1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n), tol);
        }
        if (named->name == "random") {
            return DensityOperator::from_matrix(random_density(n, scn.seed).matrix(), tol);
        }
        invalid("state.named", "unknown state '" + named->name + "'");
    }
    if (const auto *pure = std::get_if<ComplexVector>(&scn.state)) {
        if (pure->size() != n) {
            invalid("state.pure", "length " + std::to_string(pure->size()) + " does not match dims");
        }
        return validated("state.pure", [&] { return pure_state(StateVector::from_amplitudes(*pure, tol)); });
    }
    const auto &rows = std::get<MatrixRows>(scn.state);
    if (rows.size() != n) {
        invalid("state.matrix", "size " + std::to_string(rows.size()) + " does not match dims");
    }
    return validated("state.matrix", [&] { return DensityOperator::from_matrix(ComplexMatrix::from_rows(rows), tol); });
}

Povm resolve_povm(const PovmSpec &spec, std::size_t dim, double tol, const std::string &path) {
    if (const auto *named = std::get_if<NamedSpec>(&spec)) {
        if (named->name == "coin") {
            const auto half = 0.5 * ComplexMatrix::identity(dim);
            return Povm::create(dim, {{"0", half}, {"1", half}});
        }
        if (named->name == "z") {
            return canned::z_pvm(dim);
        }
        if (named->name == "x") {
            if (dim != 2) {
                invalid(path + ".named", "x basis is defined for qubits only");
            }
            return canned::x_pvm();
        }
        invalid(path + ".named", "unknown POVM '" + named->name + "'");
    }
    const auto &outcomes = std::get<std::vector<LabelledMatrix>>(spec);
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const std::string epath = path + ".outcomes[" + std::to_string(i) + "].effect";
        if (outcomes[i].effect.size() != dim) {
            invalid(epath, "effect size " + std::to_string(outcomes[i].effect.size()) + " does not match dim " +
                               std::to_string(dim));
        }
        effects.push_back({outcomes[i].label, validated(epath, [&] { return ComplexMatrix::from_rows(outcomes[i].effect); })});
    }
    return validated(path, [&] { return Povm::create(dim, std::move(effects), tol); });
}

JointPovm resolve_joint(const JointSpec &spec, ProductDims dims, double tol) {
    if (const auto *named = std::get_if<NamedSpec>(&spec)) {
        if (dims != ProductDims{2, 2}) {
            invalid("joint.named", "named joint POVMs need dims {s: 2, p: 2}");
        }
        if (named->name == "independent") {
            return canned::independent_joint();
        }
        if (named->name == "correlated") {
            return canned::correlated_joint();
        }
        invalid("joint.named", "unknown joint POVM '" + named->name + "'");
    }
    const auto &outcomes = std::get<std::vector<JointEntry>>(spec);
    std::vector<JointEffect> effects;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const std::string epath = "joint.outcomes[" + std::to_string(i) + "].effect";
        if (outcomes[i].effect.size() != dims.total()) {
            invalid(epath, "effect size does not match dims");
        }
        effects.push_back(
            {outcomes[i].s, outcomes[i].p, validated(epath, [&] { return ComplexMatrix::from_rows(outcomes[i].effect); })});
    }
    return validated("joint", [&] { return JointPovm::create(dims, std::move(effects), tol); });
}

UnitaryOperator resolve_unitary(const std::optional<MatrixRows> &rows, std::size_t dim, double tol,
                                const std::string &path) {
    if (!rows) {
        return UnitaryOperator::identity(dim);
    }
    if (rows->size() != dim) {
        invalid(path, "size " + std::to_string(rows->size()) + " does not match dim " + std::to_string(dim));
    }
    return validated(path, [&] { return UnitaryOperator::from_matrix(ComplexMatrix::from_rows(*rows), tol); });
}

struct Requirements {
    bool povm_s = false;
    bool povm_p = false;
    bool joint = false;
};

Requirements requirements_of(const std::string &check) {
    if (check == "noeffect" || check == "jmf_form" || check == "theorem1") {
        return {true, true, true};
    }
    if (check == "prodmarg") {
        return {false, false, true};
    }
    if (check == "srf" || check == "mixture") {
        return {false, true, false};
    }
    if (check == "theorem5") {
        return {true, true, false};
    }
    if (check == "no_signaling") {
        return {true, false, false};
    }
    return {};
}

}  // namespace

const std::vector<std::string> &known_checks() {
    static const std::vector<std::string> names = {"distribution", "noeffect", "prodmarg", "jmf_form", "theorem1",
                                                   "srf",          "theorem5", "mixture",  "no_signaling"};
    return names;
}

ResolvedScenario resolve_scenario(const Scenario &scn) {
    if (scn.version != kScenarioVersion) {
        invalid("version", "unsupported version " + std::to_string(scn.version));
    }
    if (scn.dims.dim_s == 0 || scn.dims.dim_p == 0) {
        invalid("dims", "dimensions must be positive");
    }
    if (!(scn.tolerance > 0.0)) {
        invalid("tolerance", "must be positive");
    }
    const auto &known = known_checks();
    for (std::size_t i = 0; i < scn.checks.size(); ++i) {
        const auto &c = scn.checks[i];
        const std::string path = "checks[" + std::to_string(i) + "]";
        if (std::find(known.begin(), known.end(), c) == known.end()) {
            invalid(path, "unknown check '" + c + "'");
        }
        const Requirements req = requirements_of(c);
        auto missing = [&](const char *field) {
            throw Error(ErrorKind::MissingInput, path + " (" + c + "): requires '" + field + "'");
        };
        if (req.povm_s && !scn.povm_s) {
            missing("povm_s");
        }
        if (req.povm_p && !scn.povm_p) {
            missing("povm_p");
        }
        if (req.joint && !scn.joint) {
            missing("joint");
        }
        if (c == "distribution" && !scn.povm_s && !scn.povm_p && !scn.joint) {
            missing("povm_s, povm_p or joint");
        }
    }

    auto state = resolve_state(scn);
    std::optional<Povm> povm_s;
    std::optional<Povm> povm_p;
    std::optional<JointPovm> joint;
    if (scn.povm_s) {
        povm_s = resolve_povm(*scn.povm_s, scn.dims.dim_s, scn.tolerance, "povm_s");
    }
    if (scn.povm_p) {
        povm_p = resolve_povm(*scn.povm_p, scn.dims.dim_p, scn.tolerance, "povm_p");
    }
    if (scn.joint) {
        joint = resolve_joint(*scn.joint, scn.dims, scn.tolerance);
    }
    auto u_s = resolve_unitary(scn.u_s, scn.dims.dim_s, scn.tolerance, "u_s");
    auto u_p = resolve_unitary(scn.u_p, scn.dims.dim_p, scn.tolerance, "u_p");
    return {scn.dims, std::move(state), std::move(povm_s), std::move(povm_p), std::move(joint),
            std::move(u_s), std::move(u_p), scn.tolerance};
}

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, std::string("<document>: ") + e.what());
    }
    require_object(root, "<root>");
    only_keys(root, {"version", "dims", "state", "povm_s", "povm_p", "joint", "u_s", "u_p", "checks", "tolerance", "seed"},
              "<root>");

    Scenario scn;
    const json &version = member(root, "version", "<root>");
    if (!version.is_number_integer()) {
        parse_fail("version", "expected an integer");
    }
    scn.version = version.get<int>();

    const json &dims = member(root, "dims", "<root>");
    require_object(dims, "dims");
    only_keys(dims, {"s", "p"}, "dims");
    scn.dims = {read_positive(member(dims, "s", "dims"), "dims.s"), read_positive(member(dims, "p", "dims"), "dims.p")};

    scn.state = read_state(member(root, "state", "<root>"), "state");
    if (root.contains("povm_s")) {
        scn.povm_s = read_povm(root.at("povm_s"), "povm_s");
    }
    if (root.contains("povm_p")) {
        scn.povm_p = read_povm(root.at("povm_p"), "povm_p");
    }
    if (root.contains("joint")) {
        scn.joint = read_joint(root.at("joint"), "joint");
    }
    if (root.contains("u_s")) {
        scn.u_s = read_matrix(root.at("u_s"), "u_s");
    }
    if (root.contains("u_p")) {
        scn.u_p = read_matrix(root.at("u_p"), "u_p");
    }

    const json &checks = member(root, "checks", "<root>");
    if (!checks.is_array()) {
        parse_fail("checks", "expected an array of check names");
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
        scn.checks.push_back(read_string(checks[i], "checks[" + std::to_string(i) + "]"));
    }
    if (root.contains("tolerance")) {
        if (!root.at("tolerance").is_number()) {
            parse_fail("tolerance", "expected a number");
        }
        scn.tolerance = root.at("tolerance").get<double>();
    }
    if (root.contains("seed")) {
        if (!root.at("seed").is_number_unsigned()) {
            parse_fail("seed", "expected a non-negative integer");
        }
        scn.seed = root.at("seed").get<std::uint64_t>();
    }

    resolve_scenario(scn);
    return scn;
}

std::string serialize_scenario(const Scenario &scn) {
    json root;
    root["version"] = scn.version;
    root["dims"] = {{"s", scn.dims.dim_s}, {"p", scn.dims.dim_p}};
    root["state"] = write_state(scn.state);
    if (scn.povm_s) {
        root["povm_s"] = write_povm(*scn.povm_s);
    }
    if (scn.povm_p) {
        root["povm_p"] = write_povm(*scn.povm_p);
    }
    if (scn.joint) {
        root["joint"] = write_joint(*scn.joint);
    }
    if (scn.u_s) {
        root["u_s"] = write_matrix(*scn.u_s);
    }
    if (scn.u_p) {
        root["u_p"] = write_matrix(*scn.u_p);
    }
    root["checks"] = scn.checks;
    root["tolerance"] = scn.tolerance;
    root["seed"] = scn.seed;
    return root.dump(2);
}

}  // namespace qmeas
