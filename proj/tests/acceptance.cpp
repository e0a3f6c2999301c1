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

// Acceptance suite: one line per criterion, each run at its stated tolerance
// and checked against its runtime budget.

#include <sys/wait.h>

#include <omp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qmeas/canned.hpp"
#include "qmeas/families.hpp"
#include "qmeas/luders.hpp"
#include "qmeas/measurement.hpp"
#include "qmeas/observables.hpp"

namespace {

constexpr std::uint64_t kBaseSeed = 0x5eed2026;

struct Verdict {
    bool pass;
    std::string detail;
};

// Runs body(i) for i in [0, n) across threads and folds the per-instance
// deviation into a max. A thrown exception counts as a failed instance.
struct Sweep {
    std::size_t failures = 0;
    double max_deviation = 0.0;
    std::size_t counted = 0;

    std::string summary(std::size_t n, const char *what) const {
        std::ostringstream out;
        out << n << " " << what << ", " << failures << " failing, max deviation " << max_deviation;
        return out.str();
    }
};

// body returns {deviation, counted?}; deviation <= tol passes.
Sweep sweep(std::size_t n, double tol, const std::function<std::pair<double, bool>(std::size_t)> &body) {
    Sweep s;
    std::size_t failures = 0, counted = 0;
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures, counted) reduction(max : worst)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            const auto [dev, count] = body(i);
            worst = std::max(worst, dev);
            failures += dev <= tol ? 0 : 1;
            counted += count ? 1 : 0;
        } catch (const std::exception &e) {
#pragma omp critical
            std::cerr << "  instance " << i << " threw: " << e.what() << "\n";
            ++failures;
        }
    }
    s.failures = failures;
    s.max_deviation = worst;
    s.counted = counted;
    return s;
}

std::uint64_t seed_for(int criterion, std::size_t i) {
    return qmeas::derive_seed(kBaseSeed + static_cast<std::uint64_t>(criterion), i);
}

qmeas::ProductDims dims_of(Eigen::Index ds, Eigen::Index dp) {
    return {static_cast<std::size_t>(ds), static_cast<std::size_t>(dp)};
}

// 1
Verdict coin_uniform() {
    const auto coin = qmeas::canned::coin_povm();
    const auto s = sweep(100, 1e-12, [&](std::size_t i) {
        oracle::Gen gen(seed_for(1, i));
        const auto d = qmeas::distribution(oracle::density(gen.density(2)), coin);
        return std::pair{std::max(std::abs(d.at("0") - 0.5), std::abs(d.at("1") - 0.5)), true};
    });
    return {s.failures == 0, s.summary(100, "qubit states")};
}

// 2
Verdict coin_counterexample() {
    const auto coin = qmeas::canned::coin_povm();
    const auto id = qmeas::UnitaryOperator::identity(2);
    const auto e = qmeas::canned::independent_joint();
    const auto ep = qmeas::canned::correlated_joint();
    const auto ep_noeffect = qmeas::check_noeffect(ep, coin, coin, id, id, 1e-12);
    const auto ep_prodmarg = qmeas::check_prodmarg(ep, 1e-12);
    const auto e_noeffect = qmeas::check_noeffect(e, coin, coin, id, id, 1e-12);
    const auto e_prodmarg = qmeas::check_prodmarg(e, 1e-12);
    const bool pass = ep_noeffect.pass && !ep_prodmarg.pass && std::abs(ep_prodmarg.max_deviation - 0.25) <= 1e-12 &&
                      e_noeffect.pass && e_prodmarg.pass;
    std::ostringstream out;
    out << "E': noeffect " << (ep_noeffect.pass ? "pass" : "fail") << ", prodmarg "
        << (ep_prodmarg.pass ? "pass" : "fail") << " deviation " << ep_prodmarg.max_deviation << " at "
        << ep_prodmarg.witness.value_or("-") << "; E: noeffect " << (e_noeffect.pass ? "pass" : "fail")
        << ", prodmarg " << (e_prodmarg.pass ? "pass" : "fail");
    return {pass, out.str()};
}

// 3
Verdict jmf_forward() {
    const auto s = sweep(500, 1e-10, [](std::size_t i) {
        oracle::Gen gen(seed_for(3, i));
        const auto ds = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto dp = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto ps = oracle::povm(gen.povm(ds, gen.index(2, 4)));
        const auto pp = oracle::povm(gen.povm(dp, gen.index(2, 4)));
        const auto us = oracle::unitary(gen.unitary(ds));
        const auto up = oracle::unitary(gen.unitary(dp));
        const auto joint = qmeas::jmf_joint(ps, pp, us, up);
        const auto ne = qmeas::check_noeffect(joint, ps, pp, us, up, 1e-10);
        const auto pm = qmeas::check_prodmarg(joint, 1e-10);
        return std::pair{std::max(ne.pass ? ne.max_deviation : 1.0, pm.pass ? pm.max_deviation : 1.0), true};
    });
    return {s.failures == 0, s.summary(500, "JMF joints")};
}

// 4
Verdict jmf_reverse() {
    constexpr std::size_t n = 1500;
    std::size_t premise_false = 0;
    const auto s = sweep(n, 1e-9, [&](std::size_t i) {
        const auto sample = qmeas::families::structured_sample(seed_for(4, i));
        const bool ne = qmeas::check_noeffect(sample.joint, sample.povm_s, sample.povm_p, sample.u_s, sample.u_p).pass;
        const bool pm = qmeas::check_prodmarg(sample.joint).pass;
        if (!(ne && pm)) {
            return std::pair{0.0, false};
        }
        const auto jf = qmeas::check_jmf_form(sample.joint, sample.povm_s, sample.povm_p, sample.u_s, sample.u_p, 1e-9);
        return std::pair{jf.pass ? jf.max_deviation : std::max(jf.max_deviation, 1.0), true};
    });
    premise_false = n - s.counted - s.failures;
    // Non-vacuous: both sides of the premise must be sampled.
    const bool pass = s.failures == 0 && s.counted >= n / 10 && premise_false >= n / 10;
    std::ostringstream out;
    out << s.counted << " of " << n << " structured joints satisfy NOEFFECT and PRODMARG, " << s.failures
        << " of those fail JMF form (max deviation " << s.max_deviation << "); " << premise_false
        << " fail the premise";
    return {pass, out.str()};
}

// Pr(s|p) from the joint probability formula, via Eigen.
double oracle_conditional(const oracle::Mat &tau, const oracle::Mat &es, const oracle::Mat &ep, const oracle::Mat &us) {
    const auto ds = es.rows(), dp = ep.rows();
    const double joint = (oracle::kron(us.adjoint() * es * us, ep) * tau).trace().real();
    const double marginal = (oracle::kron(oracle::Mat::Identity(ds, ds), ep) * tau).trace().real();
    return joint / marginal;
}

std::pair<double, bool> conditional_instance(std::uint64_t seed, bool projective) {
    oracle::Gen gen(seed);
    const auto ds = static_cast<Eigen::Index>(gen.index(2, 4));
    const auto dp = static_cast<Eigen::Index>(gen.index(2, 4));
    const oracle::Mat t = gen.density(ds * dp);
    const oracle::Mat u = gen.unitary(ds);
    const auto es = gen.povm(ds, gen.index(2, 4));
    const auto ep = projective ? gen.pvm(dp, gen.index(2, static_cast<std::size_t>(dp))) : gen.povm(dp, gen.index(2, 4));
    const auto tau = oracle::density(t);
    const auto us = oracle::unitary(u);
    const auto ps = oracle::povm(es), pp = oracle::povm(ep);

    const auto report = qmeas::theorem5_verify(tau, ps, pp, us, 1e-10, 1e-8);
    double worst = report.outcome.pass ? report.outcome.max_deviation : std::max(1.0, report.outcome.max_deviation);
    for (const auto &e : ep) {
        if (qmeas::condition_probability(tau, oracle::from_eigen(e), dims_of(ds, dp)) < 1e-8) {
            continue;
        }
        const auto sigma = qmeas::srf(tau, oracle::from_eigen(e), us, dims_of(ds, dp));
        for (const auto &f : es) {
            worst = std::max(worst, std::abs(oracle_conditional(t, f, e, u) - qmeas::prob(sigma, oracle::from_eigen(f))));
        }
    }
    return {worst, true};
}

// 5
Verdict conditionals() {
    const auto general = sweep(300, 1e-10, [](std::size_t i) { return conditional_instance(seed_for(5, i), false); });
    const auto projective =
        sweep(300, 1e-10, [](std::size_t i) { return conditional_instance(seed_for(50, i), true); });
    return {general.failures == 0 && projective.failures == 0,
            general.summary(300, "POVM instances") + "; " + projective.summary(300, "projective-P instances")};
}

// 6
Verdict no_signaling() {
    const auto s = sweep(300, 1e-12, [](std::size_t i) {
        oracle::Gen gen(seed_for(6, i));
        const auto ds = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto dp = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto tau = oracle::density(gen.density(ds * dp));
        const auto vs = oracle::unitary(gen.unitary(ds));
        const auto vp = oracle::unitary(gen.unitary(dp));
        const auto ps = oracle::povm(gen.povm(ds, gen.index(2, 4)));
        const auto r = qmeas::no_signaling_unitary_check(tau, vs, vp, ps, dims_of(ds, dp), 1e-12);
        return std::pair{r.pass ? r.max_deviation : std::max(1.0, r.max_deviation), true};
    });
    return {s.failures == 0, s.summary(300, "instances")};
}

// 7
Verdict mixture() {
    const auto s = sweep(300, 1e-10, [](std::size_t i) {
        oracle::Gen gen(seed_for(7, i));
        const auto ds = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto dp = static_cast<Eigen::Index>(gen.index(2, 4));
        const oracle::Mat t = gen.density(ds * dp);
        const oracle::Mat u = gen.unitary(ds);
        const auto ep = i % 2 ? gen.pvm(dp, gen.index(2, static_cast<std::size_t>(dp))) : gen.povm(dp, gen.index(2, 4));
        const auto tau = oracle::density(t);
        const auto us = oracle::unitary(u);
        const auto r = qmeas::mixture_identity_check(tau, oracle::povm(ep), us, dims_of(ds, dp), 1e-10);
        double worst = r.pass ? r.max_deviation : std::max(1.0, r.max_deviation);
        // Independent right-hand side.
        oracle::Mat lhs = oracle::Mat::Zero(ds, ds);
        for (const auto &e : ep) {
            const double pr = qmeas::condition_probability(tau, oracle::from_eigen(e), dims_of(ds, dp));
            if (pr > 1e-10) {
                lhs += pr * oracle::to_eigen(qmeas::srf(tau, oracle::from_eigen(e), us, dims_of(ds, dp)).matrix());
            }
        }
        worst = std::max(worst, oracle::max_abs(lhs - u * oracle::ptrace_p(t, ds, dp) * u.adjoint()));
        return std::pair{worst, true};
    });
    return {s.failures == 0, s.summary(300, "instances")};
}

// 8
Verdict luders() {
    std::size_t degenerate = 0;
    const auto s = sweep(100, 1e-10, [&](std::size_t i) {
        oracle::Gen gen(seed_for(8, i));
        const std::size_t ds = gen.index(2, 4);
        const bool degen = i % 2 == 1;
        const std::size_t groups = degen ? gen.index(1, ds - 1) : ds;
        const std::size_t dp = gen.index(std::max<std::size_t>(groups, 2), 4);
        const auto model = qmeas::random_model(ds, dp, groups, seed_for(80, i));
        const auto s0 = qmeas::StateVector::from_amplitudes(oracle::from_eigen(gen.unit_vector(static_cast<Eigen::Index>(ds))), 1e-12);
        const auto us = oracle::unitary(gen.unitary(static_cast<Eigen::Index>(ds)));

        const auto proxy = qmeas::proxy_check(model, s0, 1e-12);
        if (!proxy.pass) {
            return std::pair{std::max(1.0, proxy.max_deviation), degen};
        }
        // Independent pointer statistics straight from the unitary.
        const oracle::Vec t = oracle::to_eigen(model.premeasurement_unitary().matrix()) *
                              oracle::kron(oracle::to_eigen(s0.amplitudes()), oracle::to_eigen(model.p0()));
        double worst = 0.0;
        for (std::size_t k = 0; k < groups; ++k) {
            double born = 0.0;
            for (const auto &v : model.groups()[k]) {
                born += std::norm(oracle::to_eigen(v).dot(oracle::to_eigen(s0.amplitudes())));
            }
            const oracle::Mat pk = oracle::to_eigen(model.pointer_projector(k));
            const oracle::Mat proj = oracle::kron(oracle::Mat::Identity(static_cast<Eigen::Index>(ds), static_cast<Eigen::Index>(ds)), pk);
            const double pr = t.dot(proj * t).real();
            if (std::abs(pr - born) > 1e-12) {
                return std::pair{1.0, degen};
            }
            if (born < 1e-8) {
                continue;
            }
            const auto post = qmeas::projection_postulate_state(model, s0, k, us);
            const auto sigma = qmeas::srf(qmeas::pure_state(qmeas::StateVector::from_amplitudes(oracle::from_eigen(t), 1e-10)),
                                          model.pointer_projector(k), us, model.dims());
            worst = std::max(worst, qmeas::max_abs_diff(qmeas::pure_state(post).matrix(), sigma.matrix()));
        }
        return std::pair{worst, degen};
    });
    degenerate = s.counted;
    const bool pass = s.failures == 0 && degenerate > 0 && degenerate < 100;
    return {pass, s.summary(100, "models") + " (" + std::to_string(degenerate) + " degenerate)"};
}

// 9
Verdict singlet_srf() {
    using qmeas::canned::spin_down;
    using qmeas::canned::spin_left;
    using qmeas::canned::spin_right;
    using qmeas::canned::spin_up;
    auto proj = [](const qmeas::StateVector &v) { return qmeas::ComplexMatrix::outer(v.amplitudes(), v.amplitudes()); };
    const auto tau = qmeas::canned::singlet();
    const auto id = qmeas::UnitaryOperator::identity(2);
    const double up = qmeas::max_abs_diff(qmeas::srf(tau, proj(spin_up()), id, {2, 2}).matrix(), proj(spin_down()));
    const double left = qmeas::max_abs_diff(qmeas::srf(tau, proj(spin_left()), id, {2, 2}).matrix(), proj(spin_right()));
    std::ostringstream out;
    out << "up -> down deviation " << up << ", left -> right deviation " << left;
    return {up <= 1e-12 && left <= 1e-12, out.str()};
}

// 10
Verdict chsh() {
    const double pi = std::acos(-1.0);
    using qmeas::canned::spin_observable;
    const double singlet = qmeas::canned::chsh_value(qmeas::canned::singlet(), spin_observable(0.0),
                                                     spin_observable(pi / 2), spin_observable(pi / 4),
                                                     spin_observable(-pi / 4));
    const double tsirelson = 2.0 * std::sqrt(2.0);
    // n . sigma for a uniformly random unit vector n.
    auto observable = [](oracle::Gen &gen) {
        const std::array<double, 3> n = {gen.gaussian().real(), gen.gaussian().real(), gen.gaussian().real()};
        const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        const auto m = (n[0] / len) * qmeas::canned::pauli_x() + (n[1] / len) * qmeas::canned::pauli_y() +
                       (n[2] / len) * qmeas::canned::pauli_z();
        return qmeas::canned::dichotomic(m, 1e-12);
    };
    const auto s = sweep(100, 1e-10, [&](std::size_t i) {
        oracle::Gen gen(seed_for(10, i));
        const auto tau = oracle::density(oracle::kron(gen.density(2), gen.density(2)));
        const double v = qmeas::canned::chsh_value(tau, observable(gen), observable(gen), observable(gen), observable(gen));
        return std::pair{std::max(0.0, v - 2.0), true};
    });
    std::ostringstream out;
    out << "singlet " << singlet << " (|diff from 2 sqrt 2| = " << std::abs(singlet - tsirelson) << "); "
        << s.summary(100, "product states with random settings") << " above 2";
    return {std::abs(singlet - tsirelson) <= 1e-6 && s.failures == 0, out.str()};
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string &args) {
    const std::string cmd = std::string("\"") + QMEAS_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 11
Verdict cli() {
    const std::string data = QMEAS_TEST_DATA;
    const auto demo = run_cli("demo sec6-counterexample --format json");
    const bool demo_ok = demo.code == 0 && demo.out.find("\"pattern_matches\": true") != std::string::npos &&
                         demo.out.find("\"name\": \"correlated.prodmarg\"") != std::string::npos;
    const auto malformed = run_cli("check \"" + data + "/malformed.json\"");
    const auto passing = run_cli("check \"" + data + "/singlet_pass.json\"");
    std::ostringstream out;
    out << "demo sec6-counterexample exit " << demo.code << (demo_ok ? " (pattern matches)" : " (unexpected output)")
        << ", malformed exit " << malformed.code << ", passing scenario exit " << passing.code;
    return {demo_ok && malformed.code == 2 && passing.code == 0, out.str()};
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    Verdict (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "coin POVM gives (1/2, 1/2) on every state", 1.0, coin_uniform},
        {2, "correlated coins satisfy NOEFFECT but not PRODMARG", 1.0, coin_counterexample},
        {3, "JMF joints satisfy NOEFFECT and PRODMARG", 30.0, jmf_forward},
        {4, "NOEFFECT and PRODMARG imply JMF form", 30.0, jmf_reverse},
        {5, "conditional probabilities equal SRF predictions", 30.0, conditionals},
        {6, "local unitaries on P do not signal to S", 10.0, no_signaling},
        {7, "SRF states average to the unreduced state", 10.0, mixture},
        {8, "projection postulate equals state reduction in the premeasurement model", 30.0, luders},
        {9, "singlet state reduction", 1.0, singlet_srf},
        {10, "CHSH violation by the singlet, none by product states", 10.0, chsh},
        {11, "CLI exit codes", 1.0, cli},
    };

    std::cout << "acceptance: " << omp_get_max_threads() << " OpenMP thread(s)\n";
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < c.budget_s;
        const bool pass = v.pass && in_budget;
        failed += pass ? 0 : 1;
        std::printf("%s  [%2d] %s: %s; %.3f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    v.detail.c_str(), elapsed, c.budget_s, in_budget ? "" : ", EXCEEDED");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
