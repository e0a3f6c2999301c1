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

#include <vector>

#include "oracle.hpp"
#include "qmeas/kernels.hpp"

namespace {

namespace k = qmeas::kernels;
using qmeas::kernels::Complex;

std::vector<Complex> buffer(std::size_t size, oracle::Gen &gen) {
    std::vector<Complex> v(size);
    for (auto &z : v) {
        z = gen.gaussian();
    }
    return v;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

class KernelDims : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelDims, MatmulMatchesSerialAndEigen) {
    const std::size_t n = GetParam();
    oracle::Gen gen(n);
    const auto a = buffer(n * n, gen);
    const auto b = buffer(n * n, gen);
    std::vector<Complex> par(n * n), ser(n * n);
    k::matmul(a, b, par, n);
    k::serial::matmul(a, b, ser, n);
    EXPECT_LT(max_diff(par, ser), 1e-12 * n);

    using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const auto ni = static_cast<Eigen::Index>(n);
    const RowMat expected = Eigen::Map<const RowMat>(a.data(), ni, ni) * Eigen::Map<const RowMat>(b.data(), ni, ni);
    EXPECT_LT(max_diff(par, std::vector<Complex>(expected.data(), expected.data() + expected.size())), 1e-12 * n);
}

TEST_P(KernelDims, PartialTracesMatchSerial) {
    const std::size_t ds = GetParam();
    const std::size_t dp = 3;
    oracle::Gen gen(ds + 100);
    const auto a = buffer(ds * dp * ds * dp, gen);
    std::vector<Complex> par_p(ds * ds), ser_p(ds * ds), par_s(dp * dp), ser_s(dp * dp);
    k::partial_trace_p(a, ds, dp, par_p);
    k::serial::partial_trace_p(a, ds, dp, ser_p);
    k::partial_trace_s(a, ds, dp, par_s);
    k::serial::partial_trace_s(a, ds, dp, ser_s);
    EXPECT_LT(max_diff(par_p, ser_p), 1e-12);
    EXPECT_LT(max_diff(par_s, ser_s), 1e-12 * ds);
}

TEST_P(KernelDims, KronMatchesSerialExactly) {
    const std::size_t na = GetParam();
    const std::size_t nb = 2;
    oracle::Gen gen(na + 200);
    const auto a = buffer(na * na, gen);
    const auto b = buffer(nb * nb, gen);
    std::vector<Complex> par(na * na * nb * nb), ser(na * na * nb * nb);
    k::kron(a, na, b, nb, par);
    k::serial::kron(a, na, b, nb, ser);
    EXPECT_EQ(par, ser);
}

INSTANTIATE_TEST_SUITE_P(SmallAndParallel, KernelDims, ::testing::Values(1, 2, 3, 7, 17, 48, 64, 97));

// Oversubscribe so the parallel branch runs with real thread splits even on a
// single core.
class ForceThreads : public ::testing::Environment {
public:
    void SetUp() override {
        omp_set_num_threads(4);
    }
};

const auto *const kForceThreads = ::testing::AddGlobalTestEnvironment(new ForceThreads);

}  // namespace
