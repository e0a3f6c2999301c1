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

#include "qmeas/families.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "qmeas/errors.hpp"

namespace qmeas::families {

namespace {

std::size_t pick(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<double> random_distribution(std::mt19937_64 &rng, std::size_t n) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &x : w) {
        x = expo(rng);
        total += x;
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

// Northwest-corner coupling of marginals a and b.
std::vector<double> northwest_corner(std::vector<double> a, std::vector<double> b) {
    std::vector<double> j(a.size() * b.size(), 0.0);
    std::size_t s = 0;
    std::size_t p = 0;
    while (s < a.size() && p < b.size()) {
        const double m = std::min(a[s], b[p]);
        j[s * b.size() + p] = m;
        a[s] -= m;
        b[p] -= m;
        if (a[s] <= b[p]) {
            ++s;
        } else {
            ++p;
        }
    }
    return j;
}

Povm scalar_povm(std::size_t dim, const std::vector<double> &weights) {
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        effects.push_back({std::to_string(i), weights[i] * ComplexMatrix::identity(dim)});
    }
    return Povm::create(dim, std::move(effects));
}

JointPovm mix(const JointPovm &a, const JointPovm &b, double t) {
    std::vector<JointEffect> out;
    for (std::size_t s = 0; s < a.s_labels().size(); ++s) {
        for (std::size_t p = 0; p < a.p_labels().size(); ++p) {
            out.push_back({a.s_labels()[s], a.p_labels()[p], t * a.effect(s, p) + (1.0 - t) * b.effect(s, p)});
        }
    }
    return JointPovm::create(a.dims(), std::move(out), 1e-8);
}

}  // namespace

JointSample jmf_sample(std::uint64_t seed, bool projective) {
    std::mt19937_64 rng(seed);
    const std::size_t ds = pick(rng, 2, 4);
    const std::size_t dp = pick(rng, 2, 4);
    const std::size_t ks = projective ? pick(rng, 2, ds) : pick(rng, 2, 4);
    const std::size_t kp = projective ? pick(rng, 2, dp) : pick(rng, 2, 4);
    auto ps = projective ? random_pvm(ds, ks, derive_seed(seed, 1)) : random_povm(ds, ks, derive_seed(seed, 1));
    auto pp = projective ? random_pvm(dp, kp, derive_seed(seed, 2)) : random_povm(dp, kp, derive_seed(seed, 2));
    auto us = random_unitary(ds, derive_seed(seed, 3));
    auto up = random_unitary(dp, derive_seed(seed, 4));
    auto joint = jmf_joint(ps, pp, us, up);
    return {"jmf", std::move(joint), std::move(ps), std::move(pp), std::move(us), std::move(up)};
}

JointSample jmf_mixture_sample(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t ds = pick(rng, 2, 4);
    const std::size_t dp = pick(rng, 2, 4);
    const std::size_t ks = pick(rng, 2, 4);
    const std::size_t kp = pick(rng, 2, 4);
    const bool share_povms = pick(rng, 0, 3) == 0;
    const double t = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

    auto ps = random_povm(ds, ks, derive_seed(seed, 1));
    auto pp = random_povm(dp, kp, derive_seed(seed, 2));
    auto us = random_unitary(ds, derive_seed(seed, 3));
    auto up = random_unitary(dp, derive_seed(seed, 4));
    const auto ps2 = share_povms ? ps : random_povm(ds, ks, derive_seed(seed, 5));
    const auto pp2 = share_povms ? pp : random_povm(dp, kp, derive_seed(seed, 6));
    const auto us2 = random_unitary(ds, derive_seed(seed, 7));
    const auto up2 = random_unitary(dp, derive_seed(seed, 8));

    auto joint = mix(jmf_joint(ps, pp, us, up), jmf_joint(ps2, pp2, us2, up2), t);
    return {"jmf-mixture", std::move(joint), std::move(ps), std::move(pp), std::move(us), std::move(up)};
}

JointSample coupling_sample(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t ds = pick(rng, 2, 4);
    const std::size_t dp = pick(rng, 2, 4);
    const std::size_t ks = pick(rng, 2, 4);
    const std::size_t kp = pick(rng, 2, 4);
    const auto a = random_distribution(rng, ks);
    const auto b = random_distribution(rng, kp);
    const bool product_only = pick(rng, 0, 3) == 0;
    const double w = product_only ? 1.0 : std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto nw = northwest_corner(a, b);

    const auto id = ComplexMatrix::identity(ds * dp);
    std::vector<JointEffect> outcomes;
    for (std::size_t s = 0; s < ks; ++s) {
        for (std::size_t p = 0; p < kp; ++p) {
            const double j = w * a[s] * b[p] + (1.0 - w) * nw[s * kp + p];
            outcomes.push_back({std::to_string(s), std::to_string(p), j * id});
        }
    }
    auto joint = JointPovm::create({ds, dp}, std::move(outcomes), 1e-8);
    return {"coupling", std::move(joint), scalar_povm(ds, a), scalar_povm(dp, b), UnitaryOperator::identity(ds),
            UnitaryOperator::identity(dp)};
}

JointSample structured_sample(std::uint64_t seed) {
    switch (seed % 3) {
        case 0: return jmf_sample(seed);
        case 1: return jmf_mixture_sample(seed);
        default: return coupling_sample(seed);
    }
}

ProjectiveSearchResult projective_counterexample_search(const ProjectiveSearchConfig &config) {
    const long n = static_cast<long>(config.iterations);
    std::size_t valid = 0;
    std::size_t counter = 0;
    std::uint64_t first = std::numeric_limits<std::uint64_t>::max();

#pragma omp parallel for schedule(dynamic, 16) reduction(+ : valid, counter) reduction(min : first)
    for (long i = 0; i < n; ++i) {
        const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
        const JointSample base = jmf_sample(seed, true);
        std::mt19937_64 rng(derive_seed(seed, 99));
        JointPovm joint = base.joint;
        if (pick(rng, 0, 1) == 1) {
            static constexpr double kScales[] = {1e-1, 1e-3, 1e-6, 1e-13};
            const double eps = kScales[pick(rng, 0, 3)];
            const std::size_t ns = joint.s_labels().size();
            const std::size_t np = joint.p_labels().size();
            const std::size_t dim = joint.dims().total();
            std::vector<ComplexMatrix> d;
            for (std::size_t k = 0; k < ns * np; ++k) {
                d.push_back(hermitian_part(ginibre_matrix(dim, rng)));
            }
            ComplexMatrix total = ComplexMatrix::zeros(dim);
            std::vector<ComplexMatrix> rows(ns, ComplexMatrix::zeros(dim));
            std::vector<ComplexMatrix> cols(np, ComplexMatrix::zeros(dim));
            for (std::size_t s = 0; s < ns; ++s) {
                for (std::size_t p = 0; p < np; ++p) {
                    rows[s] = rows[s] + d[s * np + p];
                    cols[p] = cols[p] + d[s * np + p];
                    total = total + d[s * np + p];
                }
            }
            std::vector<JointEffect> outcomes;
            for (std::size_t s = 0; s < ns; ++s) {
                for (std::size_t p = 0; p < np; ++p) {
                    const ComplexMatrix delta = d[s * np + p] - (1.0 / np) * rows[s] - (1.0 / ns) * cols[p] +
                                                (1.0 / (ns * np)) * total;
                    outcomes.push_back({joint.s_labels()[s], joint.p_labels()[p], joint.effect(s, p) + eps * delta});
                }
            }
            try {
                joint = JointPovm::create(joint.dims(), std::move(outcomes), config.tol);
            } catch (const Error &) {
                continue;  // perturbation broke positivity; not a candidate
            }
        }
        if (!check_noeffect(joint, base.povm_s, base.povm_p, base.u_s, base.u_p, config.tol).pass) {
            continue;
        }
        ++valid;
        if (!check_prodmarg(joint, config.tol).pass) {
            ++counter;
            first = std::min(first, static_cast<std::uint64_t>(i));
        }
    }

    ProjectiveSearchResult result;
    result.candidates = config.iterations;
    result.valid_noeffect = valid;
    result.counterexamples = counter;
    if (counter > 0) {
        result.first_counterexample = first;
    }
    return result;
}

}  // namespace qmeas::families
