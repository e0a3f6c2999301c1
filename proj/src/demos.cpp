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

#include "qmeas/demos.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qmeas/canned.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/luders.hpp"
#include "qmeas/measurement.hpp"

namespace qmeas {

namespace {

using Body = std::function<CheckOutcome()>;

const DemoInfo kSec6Coin{"sec6-coin", "fair coin tosser: Pr(0) = Pr(1) = 1/2 for every state"};
const DemoInfo kSec6Counterexample{"sec6-counterexample", "NOEFFECT without PRODMARG: independent vs. correlated coin tossers"};
const DemoInfo kSingletSrf{"singlet-srf", "singlet: probe found up leaves the system down; probe found left leaves it right"};
const DemoInfo kChsh{"chsh", "joint measurement formula predicts Bell (CHSH) violations"};
const DemoInfo kLuders{"luders", "von Neumann-Luders model: the projection postulate follows from state reduction"};
const DemoInfo kNoSignaling{"no-signaling", "a unitary on one member of an entangled pair leaves the other's state unchanged"};


struct DemoBuilder {
    DemoReport report;

    void expect(const std::string &name, bool expected_pass, const Body &body) {
        const auto start = std::chrono::steady_clock::now();
        const CheckOutcome o = body();
        DemoCheck c;
        c.expected_pass = expected_pass;
        c.result = {name, o.pass, o.max_deviation, o.witness,
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()};
        report.pattern_matches = report.pattern_matches && c.matches();
        report.checks.push_back(std::move(c));
    }
};

CheckOutcome scalar(double deviation, double tol, const std::string &label) {
    CheckOutcome o;
    o.record(deviation, tol, label);
    return o;
}

DemoReport coin_demo(const DemoOptions &opt) {
    DemoBuilder b{{kSec6Coin.name, kSec6Coin.anchor, {}, true}};
    const Povm coin = canned::coin_povm();
    b.expect("uniform_on_random_states", true, [&] {
        CheckOutcome o;
        for (std::uint64_t i = 0; i < 100; ++i) {
            const auto d = distribution(random_density(2, derive_seed(opt.seed, i)), coin);
            o.record(std::max(std::abs(d.at("0") - 0.5), std::abs(d.at("1") - 0.5)), opt.tol, std::to_string(i));
        }
        return o;
    });
    b.expect("projection_valued", false, [&] {
        CheckOutcome o;
        o.pass = is_projection_valued(coin, opt.tol);
        return o;
    });
    return b.report;
}

DemoReport counterexample_demo(const DemoOptions &opt) {
    DemoBuilder b{{kSec6Counterexample.name, kSec6Counterexample.anchor, {}, true}};
    const Povm coin = canned::coin_povm();
    const auto id = UnitaryOperator::identity(2);
    const auto e = canned::independent_joint();
    const auto e_prime = canned::correlated_joint();
    b.expect("independent.noeffect", true, [&] { return check_noeffect(e, coin, coin, id, id, opt.tol); });
    b.expect("independent.prodmarg", true, [&] { return check_prodmarg(e, opt.tol); });
    b.expect("independent.jmf_form", true, [&] { return check_jmf_form(e, coin, coin, id, id, opt.tol); });
    b.expect("correlated.noeffect", true, [&] { return check_noeffect(e_prime, coin, coin, id, id, opt.tol); });
    b.expect("correlated.prodmarg", false, [&] { return check_prodmarg(e_prime, opt.tol); });
    b.expect("correlated.jmf_form", false, [&] { return check_jmf_form(e_prime, coin, coin, id, id, opt.tol); });
    return b.report;
}

DemoReport singlet_demo(const DemoOptions &opt) {
    DemoBuilder b{{kSingletSrf.name, kSingletSrf.anchor, {}, true}};
    const auto tau = canned::singlet();
    const auto id = UnitaryOperator::identity(2);
    auto proj = [](const StateVector &v) { return ComplexMatrix::outer(v.amplitudes(), v.amplitudes()); };
    b.expect("z_up_gives_down", true, [&] {
        const auto s = srf(tau, proj(canned::spin_up()), id, {2, 2});
        return scalar(max_abs_diff(s.matrix(), proj(canned::spin_down())), opt.tol, "up");
    });
    b.expect("x_left_gives_right", true, [&] {
        const auto s = ozawa_pre_state(tau, proj(canned::spin_left()), {2, 2});
        return scalar(max_abs_diff(s.matrix(), proj(canned::spin_right())), opt.tol, "left");
    });
    b.expect("mixture_is_unreduced", true,
             [&] { return mixture_identity_check(tau, canned::z_pvm(), id, {2, 2}, opt.tol); });
    return b.report;
}

DemoReport chsh_demo(const DemoOptions &opt) {
    DemoBuilder b{{kChsh.name, kChsh.anchor, {}, true}};
    const double pi = std::acos(-1.0);
    const auto a1 = canned::spin_observable(0.0);
    const auto a2 = canned::spin_observable(pi / 2);
    const auto b1 = canned::spin_observable(pi / 4);
    const auto b2 = canned::spin_observable(-pi / 4);
    const double value = canned::chsh_value(canned::singlet(), a1, a2, b1, b2);
    b.expect("singlet_reaches_tsirelson", true,
             [&] { return scalar(std::abs(value - 2.0 * std::sqrt(2.0)), 1e-6, "singlet"); });
    b.expect("singlet_within_classical_bound", false, [&] { return scalar(std::max(0.0, value - 2.0), opt.tol, "singlet"); });
    b.expect("product_states_within_classical_bound", true, [&] {
        CheckOutcome o;
        for (std::uint64_t i = 0; i < 20; ++i) {
            const auto s = random_density(2, derive_seed(opt.seed, 2 * i));
            const auto p = random_density(2, derive_seed(opt.seed, 2 * i + 1));
            const auto tau = DensityOperator::from_matrix(kron(s.matrix(), p.matrix()));
            const double v = canned::chsh_value(tau, a1, a2, b1, b2);
            o.record(std::max(0.0, v - 2.0), opt.tol, std::to_string(i));
        }
        return o;
    });
    return b.report;
}

DemoReport luders_demo(const DemoOptions &opt) {
    DemoBuilder b{{kLuders.name, kLuders.anchor, {}, true}};
    // 3-level system, groups {|0>, |1>} and {|2>}, qutrit probe starting in |p_2>.
    const std::vector<EigenGroup> groups = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}, {{0.0, 0.0, 1.0}}};
    const std::vector<ComplexVector> probe = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    const auto model = build_model(groups, probe, 2);
    const auto s0 = random_state_vector(3, opt.seed);
    const auto u_s = random_unitary(3, derive_seed(opt.seed, 1));
    b.expect("proxy_probabilities", true, [&] { return proxy_check(model, s0, 1e-12); });
    b.expect("postulate_equals_srf", true, [&] {
        CheckOutcome o;
        const auto t = pure_state(entangled_vector(model, s0));
        for (std::size_t k = 0; k < model.group_count(); ++k) {
            const auto v = projection_postulate_state(model, s0, k, u_s);
            const auto via_srf = srf(t, model.pointer_projector(k), u_s, model.dims());
            o.record(max_abs_diff(pure_state(v).matrix(), via_srf.matrix()), opt.tol, std::to_string(k));
        }
        return o;
    });
    return b.report;
}

DemoReport no_signaling_demo(const DemoOptions &opt) {
    DemoBuilder b{{kNoSignaling.name, kNoSignaling.anchor, {}, true}};
    const auto id = UnitaryOperator::identity(2);
    b.expect("singlet_remote_unitary", true, [&] {
        return no_signaling_unitary_check(canned::singlet(), id, random_unitary(2, opt.seed), canned::z_pvm(), {2, 2},
                                          opt.tol);
    });
    b.expect("random_states", true, [&] {
        CheckOutcome o;
        for (std::uint64_t i = 0; i < 20; ++i) {
            const auto seed = derive_seed(opt.seed, i);
            const auto c = no_signaling_unitary_check(random_density(6, seed), random_unitary(2, derive_seed(seed, 1)),
                                                      random_unitary(3, derive_seed(seed, 2)),
                                                      random_povm(2, 3, derive_seed(seed, 3)), {2, 3}, opt.tol);
            o.record(c.max_deviation, opt.tol, std::to_string(i));
        }
        return o;
    });
    return b.report;
}

struct DemoEntry {
    DemoInfo info;
    DemoReport (*run)(const DemoOptions &);
};

const std::vector<DemoEntry> &registry() {
    static const std::vector<DemoEntry> entries = {
        {kSec6Coin, coin_demo},
        {kSec6Counterexample, counterexample_demo},
        {kSingletSrf, singlet_demo},
        {kChsh, chsh_demo},
        {kLuders, luders_demo},
        {kNoSignaling, no_signaling_demo},
    };
    return entries;
}

}  // namespace

const std::vector<DemoInfo> &list_demos() {
    static const std::vector<DemoInfo> infos = [] {
        std::vector<DemoInfo> out;
        for (const auto &e : registry()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

DemoReport run_demo(const std::string &name, const DemoOptions &options) {
    for (const auto &e : registry()) {
        if (e.info.name == name) {
            return e.run(options);
        }
    }
    throw Error(ErrorKind::ValidationError, "unknown demo '" + name + "'");
}

std::string demo_to_json(const DemoReport &report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.result.name},
                          {"expected_pass", c.expected_pass},
                          {"pass", c.result.pass},
                          {"matches", c.matches()},
                          {"max_deviation", c.result.max_deviation},
                          {"witness", c.result.witness ? nlohmann::json(*c.result.witness) : nlohmann::json(nullptr)},
                          {"elapsed_ms", c.result.elapsed_ms}});
    }
    nlohmann::json root = {{"demo", report.name},
                           {"anchor", report.anchor},
                           {"checks", checks},
                           {"pattern_matches", report.pattern_matches}};
    return root.dump(2);
}

std::string demo_to_text(const DemoReport &report) {
    std::ostringstream out;
    out << report.name << ": " << report.anchor << "\n";
    for (const auto &c : report.checks) {
        out << "  " << (c.result.pass ? "PASS" : "FAIL") << " (expected " << (c.expected_pass ? "PASS" : "FAIL")
            << ")  " << std::left << std::setw(40) << c.result.name << " max_deviation=" << std::scientific
            << std::setprecision(3) << c.result.max_deviation;
        if (c.result.witness) {
            out << "  witness=" << *c.result.witness;
        }
        out << "\n";
    }
    out << "pattern " << (report.pattern_matches ? "matches" : "DOES NOT match") << "\n";
    return out.str();
}

}  // namespace qmeas
