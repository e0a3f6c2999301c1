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

#include <omp.h>

#include "qmeas/kernels.hpp"

namespace qmeas::kernels {

namespace {

// Runs body(i) for i in [0, count). Small problems stay out of the OpenMP
// runtime entirely; entering a parallel region costs more than they do.
template <typename Body>
void for_rows(std::size_t n, long count, Body body) {
    if (n < kParallelMinDim) {
        for (long i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        body(i);
    }
}

}  // namespace

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n) {
    // i-k-j order streams rows of b and out contiguously. std::complex is
    // layout-compatible with double[2]; spelling the product out avoids the
    // NaN-recovering library multiply in the inner loop.
    const double *__restrict bd = reinterpret_cast<const double *>(b.data());
    double *__restrict od = reinterpret_cast<double *>(out.data());
    for_rows(n, static_cast<long>(n), [&](long i) {
        double *__restrict row = od + 2 * i * n;
        std::fill(row, row + 2 * n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double re = a[i * n + k].real();
            const double im = a[i * n + k].imag();
            if (re == 0.0 && im == 0.0) {
                continue;
            }
            const double *__restrict brow = bd + 2 * k * n;
            for (std::size_t j = 0; j < n; ++j) {
                row[2 * j] += re * brow[2 * j] - im * brow[2 * j + 1];
                row[2 * j + 1] += re * brow[2 * j + 1] + im * brow[2 * j];
            }
        }
    });
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
    const std::size_t n = na * nb;
    for_rows(n, static_cast<long>(na * na), [&](long blk) {
        const std::size_t ar = blk / na;
        const std::size_t ac = blk % na;
        const Complex aval = a[blk];
        for (std::size_t br = 0; br < nb; ++br) {
            Complex *dst = out.data() + (ar * nb + br) * n + ac * nb;
            const Complex *src = b.data() + br * nb;
            for (std::size_t bc = 0; bc < nb; ++bc) {
                dst[bc] = aval * src[bc];
            }
        }
    });
}

void partial_trace_p(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out) {
    const std::size_t n = dim_s * dim_p;
    for_rows(n, static_cast<long>(dim_s * dim_s), [&](long cell) {
        const std::size_t r = cell / dim_s;
        const std::size_t c = cell % dim_s;
        const Complex *base = a.data() + (r * dim_p) * n + c * dim_p;
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < dim_p; ++k) {
            acc += base[k * (n + 1)];
        }
        out[cell] = acc;
    });
}

void partial_trace_s(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out) {
    const std::size_t n = dim_s * dim_p;
    for_rows(n, static_cast<long>(dim_p * dim_p), [&](long cell) {
        const std::size_t r = cell / dim_p;
        const std::size_t c = cell % dim_p;
        const Complex *base = a.data() + r * n + c;
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < dim_s; ++k) {
            acc += base[k * dim_p * (n + 1)];
        }
        out[cell] = acc;
    });
}

}  // namespace qmeas::kernels
