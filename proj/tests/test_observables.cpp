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

#include <gtest/gtest.h>
#include <omp.h>

#include <functional>

#include "oracle.hpp"
#include "qmeas/canned.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/families.hpp"
#include "qmeas/observables.hpp"

namespace {

using qmeas::ComplexMatrix;
using qmeas::ErrorKind;
using qmeas::JointPovm;
using qmeas::Povm;
using qmeas::UnitaryOperator;

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const qmeas::Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no qmeas::Error thrown";
    return ErrorKind::ValidationError;
}

ComplexMatrix half_identity() {
    return 0.5 * ComplexMatrix::identity(2);
}

TEST(Povm, ValidationKinds) {
    EXPECT_EQ(kind_of([] { Povm::create(2, {{"a", half_identity()}, {"a", half_identity()}}); }),
              ErrorKind::DuplicateLabel);
    EXPECT_EQ(kind_of([] { Povm::create(3, {{"a", ComplexMatrix::identity(2)}}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] {
                  Povm::create(2, {{"a", ComplexMatrix::from_rows({{1.0, 0.5}, {0.0, 0.0}})},
                                   {"b", ComplexMatrix::from_rows({{0.0, -0.5}, {0.0, 1.0}})}});
              }),
              ErrorKind::NotHermitian);
    EXPECT_EQ(kind_of([] {
                  Povm::create(2, {{"a", ComplexMatrix::diagonal({1.2, 0.5})}, {"b", ComplexMatrix::diagonal({-0.2, 0.5})}});
              }),
              ErrorKind::EffectExceedsIdentity);
    EXPECT_EQ(kind_of([] {
                  Povm::create(2, {{"a", ComplexMatrix::diagonal({-0.2, 0.5})}, {"b", ComplexMatrix::diagonal({1.2, 0.5})}});
              }),
              ErrorKind::EffectNotPositive);
    EXPECT_EQ(kind_of([] { Povm::create(2, {{"a", half_identity()}}); }), ErrorKind::SumNotIdentity);
}

TEST(Povm, AccessorsAndZeroEffects) {
    const auto p = Povm::create(2, {{"up", ComplexMatrix::diagonal({1.0, 0.0})},
                                    {"never", ComplexMatrix::zeros(2)},
                                    {"down", ComplexMatrix::diagonal({0.0, 1.0})}});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.labels(), (std::vector<std::string>{"up", "never", "down"}));
    EXPECT_EQ(p.effect("down"), ComplexMatrix::diagonal({0.0, 1.0}));
    EXPECT_EQ(kind_of([&] { p.effect("sideways"); }), ErrorKind::LabelMismatch);
    EXPECT_TRUE(qmeas::is_projection_valued(p));
    EXPECT_FALSE(qmeas::is_projection_valued(qmeas::canned::coin_povm()));
}

TEST(JointPovm, GridValidation) {
    const auto q = 0.25 * ComplexMatrix::identity(4);
    const qmeas::ProductDims dims{2, 2};
    EXPECT_EQ(kind_of([&] { JointPovm::create(dims, {{"0", "0", q}, {"0", "1", q}, {"1", "0", 2.0 * q}}); }),
              ErrorKind::IncompleteGrid);
    EXPECT_EQ(kind_of([&] {
                  JointPovm::create(dims, {{"0", "0", q}, {"0", "0", q}, {"1", "0", q}, {"1", "1", q}});
              }),
              ErrorKind::DuplicateLabel);
    const auto j = JointPovm::create(dims, {{"b", "y", q}, {"a", "x", q}, {"b", "x", q}, {"a", "y", q}});
    EXPECT_EQ(j.s_labels(), (std::vector<std::string>{"b", "a"}));
    EXPECT_EQ(j.p_labels(), (std::vector<std::string>{"y", "x"}));
    EXPECT_EQ(qmeas::joint_label("a", "x"), "a&x");
}

TEST(Jmf, JointMatchesOracleFormula) {
    oracle::Gen gen(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ds = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto dp = static_cast<Eigen::Index>(gen.index(2, 4));
        const auto es = gen.povm(ds, gen.index(2, 4));
        const auto ep = gen.povm(dp, gen.index(2, 4));
        const oracle::Mat us = gen.unitary(ds), up = gen.unitary(dp);
        const auto joint = qmeas::jmf_joint(oracle::povm(es), oracle::povm(ep), oracle::unitary(us), oracle::unitary(up));
        ASSERT_EQ(joint.s_labels().size(), es.size());
        for (std::size_t s = 0; s < es.size(); ++s) {
            for (std::size_t p = 0; p < ep.size(); ++p) {
                const oracle::Mat expected =
                    oracle::kron(us.adjoint() * es[s] * us, up.adjoint() * ep[p] * up);
                EXPECT_LT(oracle::max_abs(oracle::to_eigen(joint.effect(s, p)) - expected), 1e-12);
            }
        }
    }
}

TEST(Jmf, CoinCounterexample) {
    const auto coin = qmeas::canned::coin_povm();
    const auto id = UnitaryOperator::identity(2);
    const auto e = qmeas::canned::independent_joint();
    const auto e_prime = qmeas::canned::correlated_joint();

    EXPECT_TRUE(qmeas::check_noeffect(e, coin, coin, id, id).pass);
    EXPECT_TRUE(qmeas::check_prodmarg(e).pass);
    EXPECT_TRUE(qmeas::check_noeffect(e_prime, coin, coin, id, id).pass);

    const auto pm = qmeas::check_prodmarg(e_prime);
    EXPECT_FALSE(pm.pass);
    EXPECT_NEAR(pm.max_deviation, 0.25, 1e-12);
    EXPECT_EQ(pm.witness, "0&0");

    const auto report = qmeas::theorem1_verify(e_prime, coin, coin, id, id);
    EXPECT_FALSE(report.jmf_form.pass);
    EXPECT_TRUE(report.biconditional_holds);
}

TEST(Jmf, NoeffectWitnessNamesTheFamily) {
    const auto z = qmeas::canned::z_pvm();
    const auto id = UnitaryOperator::identity(2);
    const auto joint = qmeas::jmf_joint(z, z, id, id);
    const auto x = qmeas::relabel(qmeas::canned::x_pvm(), {"0", "1"});
    const auto wrong_s = qmeas::check_noeffect(joint, x, z, id, id);
    EXPECT_FALSE(wrong_s.pass);
    EXPECT_EQ(wrong_s.witness->rfind("s=", 0), 0u);
    const auto wrong_p = qmeas::check_noeffect(joint, z, x, id, id);
    EXPECT_FALSE(wrong_p.pass);
    EXPECT_EQ(wrong_p.witness->rfind("p=", 0), 0u);
    EXPECT_EQ(kind_of([&] { qmeas::check_noeffect(joint, qmeas::canned::x_pvm(), z, id, id); }),
              ErrorKind::LabelMismatch);
}

TEST(Jmf, MarginalsRecoverRotatedPovms) {
    oracle::Gen gen(22);
    for (int trial = 0; trial < 20; ++trial) {
        const auto es = gen.povm(2, 3);
        const auto ep = gen.povm(3, 2);
        const oracle::Mat us = gen.unitary(2), up = gen.unitary(3);
        const auto joint = qmeas::jmf_joint(oracle::povm(es), oracle::povm(ep), oracle::unitary(us), oracle::unitary(up));
        const auto ms = qmeas::marginal_s(joint);
        const auto mp = qmeas::marginal_p(joint);
        for (std::size_t s = 0; s < es.size(); ++s) {
            const oracle::Mat expected = oracle::kron(us.adjoint() * es[s] * us, oracle::Mat::Identity(3, 3));
            EXPECT_LT(oracle::max_abs(oracle::to_eigen(ms.effect(std::to_string(s))) - expected), 1e-12);
        }
        for (std::size_t p = 0; p < ep.size(); ++p) {
            const oracle::Mat expected = oracle::kron(oracle::Mat::Identity(2, 2), up.adjoint() * ep[p] * up);
            EXPECT_LT(oracle::max_abs(oracle::to_eigen(mp.effect(std::to_string(p))) - expected), 1e-12);
        }
    }
}

// Property: every JMF-built joint satisfies both conditions, and the reverse
// implication holds on each structured family.
TEST(Jmf, EquivalenceOverStructuredFamilies) {
    std::size_t both = 0;
    std::size_t not_both = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto sample = qmeas::families::structured_sample(seed);
        const auto r = qmeas::theorem1_verify(sample.joint, sample.povm_s, sample.povm_p, sample.u_s, sample.u_p, 1e-9);
        EXPECT_TRUE(r.biconditional_holds) << sample.family << " seed " << seed;
        (r.noeffect.pass && r.prodmarg.pass ? both : not_both) += 1;
    }
    // Both branches of the biconditional are exercised.
    EXPECT_GT(both, 10u);
    EXPECT_GT(not_both, 10u);
}

TEST(Jmf, ProjectiveCounterexampleSearchFindsNone) {
    qmeas::families::ProjectiveSearchConfig cfg;
    cfg.iterations = 400;
    cfg.seed = 5;
    const auto a = qmeas::families::projective_counterexample_search(cfg);
    EXPECT_EQ(a.counterexamples, 0u);
    EXPECT_FALSE(a.first_counterexample.has_value());
    EXPECT_GT(a.valid_noeffect, cfg.iterations / 2);
    const int threads = omp_get_max_threads();
    omp_set_num_threads(3);
    const auto b = qmeas::families::projective_counterexample_search(cfg);
    omp_set_num_threads(threads);
    EXPECT_EQ(a.candidates, b.candidates);
    EXPECT_EQ(a.valid_noeffect, b.valid_noeffect);
}

TEST(RandomPovm, ValidDeterministicAndProjectiveWhenAsked) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t dim = 2 + seed % 3;
        const std::size_t k = 1 + seed % dim;
        const auto p = qmeas::random_povm(dim, k, seed);
        EXPECT_EQ(p.size(), k);
        EXPECT_EQ(p.outcomes().back().effect, qmeas::random_povm(dim, k, seed).outcomes().back().effect);
        const auto pvm = qmeas::random_pvm(dim, k, seed);
        EXPECT_TRUE(qmeas::is_projection_valued(pvm, 1e-10));
    }
}

TEST(Relabel, RenamesInOrder) {
    const auto r = qmeas::relabel(qmeas::canned::z_pvm(), {"up", "down"});
    EXPECT_EQ(r.labels(), (std::vector<std::string>{"up", "down"}));
    const auto j = qmeas::relabel(qmeas::canned::correlated_joint(), {"h", "t"}, {"H", "T"});
    EXPECT_EQ(j.s_labels(), (std::vector<std::string>{"h", "t"}));
    EXPECT_EQ(j.effect(0, 0), qmeas::canned::correlated_joint().effect(0, 0));
}

}  // namespace
