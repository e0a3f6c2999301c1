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

#include <cmath>

#include "oracle.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/linops.hpp"

namespace {

using qmeas::ComplexMatrix;
using qmeas::Error;
using qmeas::ErrorKind;
using qmeas::ProductDims;

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no qmeas::Error thrown";
    return ErrorKind::ValidationError;
}

TEST(ComplexMatrix, RejectsWrongSizeAndNonFinite) {
    EXPECT_EQ(kind_of([] { ComplexMatrix(2, {1.0, 2.0, 3.0}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { ComplexMatrix(1, {std::nan("")}); }), ErrorKind::NonFinite);
    EXPECT_EQ(kind_of([] { ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}); }), ErrorKind::DimensionMismatch);
}

TEST(ComplexMatrix, FactoriesAndAccess) {
    const auto m = ComplexMatrix::from_rows({{1.0, {0.0, 2.0}}, {3.0, 4.0}});
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_EQ(m(0, 1), qmeas::Complex(0.0, 2.0));
    EXPECT_EQ(m(1, 0), qmeas::Complex(3.0));
    EXPECT_EQ(ComplexMatrix::identity(3), ComplexMatrix::diagonal({1.0, 1.0, 1.0}));
    EXPECT_EQ(qmeas::trace(ComplexMatrix::zeros(4)), qmeas::Complex(0.0));
    const qmeas::ComplexVector u{1.0, {0.0, 1.0}};
    const auto p = ComplexMatrix::outer(u, u);
    EXPECT_EQ(p(0, 1), qmeas::Complex(0.0, -1.0));
}

TEST(Linops, ArithmeticAgreesWithEigen) {
    oracle::Gen gen(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Eigen::Index>(gen.index(1, 6));
        const oracle::Mat a = gen.ginibre(n, n), b = gen.ginibre(n, n);
        const auto qa = oracle::from_eigen(a), qb = oracle::from_eigen(b);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qa * qb) - a * b), 1e-12);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qa + qb) - (a + b)), 1e-12);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qa - qb) - (a - b)), 1e-12);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::adjoint(qa)) - a.adjoint()), 0.0 + 1e-300);
        EXPECT_LT(std::abs(qmeas::trace(qa) - a.trace()), 1e-12);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::conjugate(qa, qb)) - a * b * a.adjoint()), 1e-11);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::kron(qa, qb)) - oracle::kron(a, b)), 1e-12);
    }
}

TEST(Linops, PartialTracesAgreeWithOracle) {
    oracle::Gen gen(2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ds = static_cast<Eigen::Index>(gen.index(1, 5));
        const auto dp = static_cast<Eigen::Index>(gen.index(1, 5));
        const oracle::Mat a = gen.ginibre(ds * dp, ds * dp);
        const ProductDims dims{static_cast<std::size_t>(ds), static_cast<std::size_t>(dp)};
        const auto qa = oracle::from_eigen(a);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::partial_trace_p(qa, dims)) - oracle::ptrace_p(a, ds, dp)),
                  1e-12);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::partial_trace_s(qa, dims)) - oracle::ptrace_s(a, ds, dp)),
                  1e-12);
    }
}

TEST(Linops, PartialTraceOfProductFactorizes) {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ds = static_cast<Eigen::Index>(gen.index(1, 4));
        const auto dp = static_cast<Eigen::Index>(gen.index(1, 4));
        const oracle::Mat a = gen.ginibre(ds, ds), b = gen.ginibre(dp, dp);
        const auto ab = qmeas::kron(oracle::from_eigen(a), oracle::from_eigen(b));
        const ProductDims dims{static_cast<std::size_t>(ds), static_cast<std::size_t>(dp)};
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::partial_trace_p(ab, dims)) - b.trace() * a), 1e-11);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(qmeas::partial_trace_s(ab, dims)) - a.trace() * b), 1e-11);
    }
}

TEST(Linops, PartialTraceRejectsBadDims) {
    const auto m = ComplexMatrix::identity(6);
    EXPECT_EQ(kind_of([&] { qmeas::partial_trace_p(m, {2, 2}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([&] { qmeas::partial_trace_s(m, {4, 2}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([&] { ComplexMatrix::identity(2) * ComplexMatrix::identity(3); }),
              ErrorKind::DimensionMismatch);
}

TEST(Linops, VectorsAndNorms) {
    const qmeas::ComplexVector u{3.0, {0.0, 4.0}};
    EXPECT_DOUBLE_EQ(qmeas::norm(u), 5.0);
    EXPECT_EQ(qmeas::inner(u, u), qmeas::Complex(25.0));
    const auto ku = qmeas::kron(u, qmeas::ComplexVector{1.0, 2.0});
    ASSERT_EQ(ku.size(), 4u);
    EXPECT_EQ(ku[3], qmeas::Complex(0.0, 8.0));
    const auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    EXPECT_EQ(qmeas::apply(x, u), (qmeas::ComplexVector{{0.0, 4.0}, 3.0}));
}

TEST(Linops, HermitianAndPsdPredicates) {
    const auto h = ComplexMatrix::from_rows({{1.0, {0.0, 1.0}}, {{0.0, -1.0}, 1.0}});
    EXPECT_TRUE(qmeas::is_hermitian(h));
    EXPECT_TRUE(qmeas::is_psd(h));  // eigenvalues 0 and 2
    const auto neg = ComplexMatrix::diagonal({1.0, -1e-3});
    EXPECT_FALSE(qmeas::is_psd(neg));
    EXPECT_TRUE(qmeas::is_psd(neg, 1e-2));
    const auto nh = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    EXPECT_FALSE(qmeas::is_hermitian(nh));
    EXPECT_EQ(kind_of([&] { qmeas::is_psd(nh); }), ErrorKind::NotHermitian);
}

TEST(Linops, EigenDecompositionReconstructs) {
    oracle::Gen gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Eigen::Index>(gen.index(1, 6));
        const oracle::Mat g = gen.ginibre(n, n);
        const oracle::Mat h = g + g.adjoint();
        const auto eig = qmeas::hermitian_eigen(oracle::from_eigen(h));
        ASSERT_EQ(eig.values.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
        oracle::Mat v = oracle::to_eigen(eig.vectors);
        oracle::Mat d = oracle::Mat::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            d(i, i) = eig.values[static_cast<std::size_t>(i)];
        }
        EXPECT_LT(oracle::max_abs(v * d * v.adjoint() - h), 1e-10);
        EXPECT_LT(oracle::max_abs(v.adjoint() * v - oracle::Mat::Identity(n, n)), 1e-12);
    }
}

TEST(Linops, CompleteOrthonormalBasisKeepsFixedVectors) {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = gen.index(1, 6);
        const std::size_t fixed = gen.index(0, dim);
        const oracle::Mat u = gen.unitary(static_cast<Eigen::Index>(dim));
        std::vector<qmeas::ComplexVector> start;
        for (std::size_t i = 0; i < fixed; ++i) {
            start.push_back(oracle::from_eigen(oracle::Vec(u.col(static_cast<Eigen::Index>(i)))));
        }
        const auto basis = qmeas::complete_orthonormal_basis(start, dim);
        ASSERT_EQ(basis.size(), dim);
        EXPECT_LT(qmeas::orthonormality_defect(basis), 1e-12);
        for (std::size_t i = 0; i < fixed; ++i) {
            EXPECT_EQ(basis[i], start[i]);
        }
    }
}

TEST(Errors, MessageCarriesKind) {
    const Error e(ErrorKind::NotPsd, "min eigenvalue -1");
    EXPECT_EQ(e.kind(), ErrorKind::NotPsd);
    EXPECT_STREQ(e.what(), "NotPsd: min eigenvalue -1");
}

}  // namespace
