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

#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "json.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/measurement.hpp"
#include "qmeas/scenario.hpp"

namespace qmeas {

namespace {

CheckOutcome as_outcome(bool pass, double deviation, std::optional<std::string> witness) {
    CheckOutcome out;
    out.pass = pass;
    out.max_deviation = deviation;
    if (!pass) {
        out.witness = std::move(witness);
    }
    return out;
}

// Rank-one projectors whose expectation values determine a state on C^dim:
// |i><i| and the projectors onto (|i> + |j>)/sqrt2 and (|i> + i|j>)/sqrt2.
std::vector<ComplexMatrix> tomographic_effects(std::size_t dim) {
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < dim; ++i) {
        ComplexVector e(dim);
        e[i] = 1.0;
        out.push_back(ComplexMatrix::outer(e, e));
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (const Complex phase : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
                ComplexVector v(dim);
                v[i] = 1.0 / std::sqrt(2.0);
                v[j] = phase / std::sqrt(2.0);
                out.push_back(ComplexMatrix::outer(v, v));
            }
        }
    }
    return out;
}

CheckOutcome distribution_check(const ResolvedScenario &r) {
    CheckOutcome out;
    auto total = [](const DensityOperator &rho, const std::vector<Effect> &effects) {
        double sum = 0.0;
        for (const auto &e : effects) {
            sum += prob(rho, e.effect);
        }
        return sum;
    };
    if (r.povm_s) {
        out.record(std::abs(total(reduced_state_s(r.state, r.dims), r.povm_s->outcomes()) - 1.0), r.tolerance, "povm_s");
    }
    if (r.povm_p) {
        out.record(std::abs(total(reduced_state_p(r.state, r.dims), r.povm_p->outcomes()) - 1.0), r.tolerance, "povm_p");
    }
    if (r.joint) {
        std::vector<Effect> flat;
        for (auto &o : r.joint->outcomes()) {
            flat.push_back({joint_label(o.s_label, o.p_label), std::move(o.effect)});
        }
        out.record(std::abs(total(r.state, flat) - 1.0), r.tolerance, "joint");
    }
    return out;
}

// Conditional state against the joint probabilities it must reproduce, for a
// tomographically complete family of S effects.
CheckOutcome srf_check(const ResolvedScenario &r) {
    CheckOutcome out;
    const auto effects = tomographic_effects(r.dims.dim_s);
    const auto &u = r.u_s.matrix();
    for (const auto &ep : r.povm_p->outcomes()) {
        const double pr_p = condition_probability(r.state, ep.effect, r.dims);
        if (pr_p <= r.tolerance) {
            continue;
        }
        const auto sigma_p = srf(r.state, ep.effect, r.u_s, r.dims);
        for (const auto &f : effects) {
            const double joint = prob(r.state, kron(adjoint(u) * f * u, ep.effect));
            out.record(std::abs(joint / pr_p - prob(sigma_p, f)), r.tolerance, "p=" + ep.label);
        }
    }
    return out;
}

CheckOutcome run_check(const std::string &name, const ResolvedScenario &r) {
    const double tol = r.tolerance;
    if (name == "distribution") {
        return distribution_check(r);
    }
    if (name == "noeffect") {
        return check_noeffect(*r.joint, *r.povm_s, *r.povm_p, r.u_s, r.u_p, tol);
    }
    if (name == "prodmarg") {
        return check_prodmarg(*r.joint, tol);
    }
    if (name == "jmf_form") {
        return check_jmf_form(*r.joint, *r.povm_s, *r.povm_p, r.u_s, r.u_p, tol);
    }
    if (name == "theorem1") {
        const auto rep = theorem1_verify(*r.joint, *r.povm_s, *r.povm_p, r.u_s, r.u_p, tol);
        std::ostringstream w;
        w << std::boolalpha << "jmf_form=" << rep.jmf_form.pass << " noeffect=" << rep.noeffect.pass
          << " prodmarg=" << rep.prodmarg.pass;
        return as_outcome(rep.biconditional_holds, rep.jmf_form.max_deviation, w.str());
    }
    if (name == "srf") {
        return srf_check(r);
    }
    if (name == "theorem5") {
        return theorem5_verify(r.state, *r.povm_s, *r.povm_p, r.u_s, tol).outcome;
    }
    if (name == "mixture") {
        return mixture_identity_check(r.state, *r.povm_p, r.u_s, r.dims, tol);
    }
    if (name == "no_signaling") {
        return no_signaling_unitary_check(r.state, r.u_s, r.u_p, *r.povm_s, r.dims, tol);
    }
    throw Error(ErrorKind::ValidationError, "unknown check '" + name + "'");
}

}  // namespace

CheckReport run_scenario(const Scenario &scenario) {
    const ResolvedScenario resolved = resolve_scenario(scenario);
    const long n = static_cast<long>(scenario.checks.size());
    std::vector<CheckResult> results(scenario.checks.size());
    std::vector<std::exception_ptr> errors(scenario.checks.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto start = std::chrono::steady_clock::now();
        try {
            const CheckOutcome o = run_check(scenario.checks[i], resolved);
            results[i].pass = o.pass;
            results[i].max_deviation = o.max_deviation;
            results[i].witness = o.witness;
        } catch (...) {
            errors[i] = std::current_exception();
        }
        results[i].name = scenario.checks[i];
        results[i].elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    CheckReport report;
    report.checks = std::move(results);
    for (const auto &c : report.checks) {
        report.overall = report.overall && c.pass;
    }
    return report;
}

std::string report_to_json(const CheckReport &report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"max_deviation", c.max_deviation},
                          {"witness", c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr)},
                          {"elapsed_ms", c.elapsed_ms}});
    }
    nlohmann::json root = {{"checks", checks}, {"overall", report.overall}};
    return root.dump(2);
}

std::string report_to_text(const CheckReport &report) {
    std::ostringstream out;
    for (const auto &c : report.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(14) << c.name << " max_deviation="
            << std::scientific << std::setprecision(3) << c.max_deviation;
        if (c.witness) {
            out << "  witness=" << *c.witness;
        }
        out << std::fixed << std::setprecision(3) << "  (" << c.elapsed_ms << " ms)\n";
    }
    out << "overall: " << (report.overall ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks)\n";
    return out.str();
}

}  // namespace qmeas
