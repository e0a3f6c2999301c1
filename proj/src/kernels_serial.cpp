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

#include "qmeas/kernels.hpp"

namespace qmeas::kernels::serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
    const std::size_t n = na * nb;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out[r * n + c] = a[(r / nb) * na + (c / nb)] * b[(r % nb) * nb + (c % nb)];
        }
    }
}

void partial_trace_p(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out) {
    const std::size_t n = dim_s * dim_p;
    for (std::size_t r = 0; r < dim_s; ++r) {
        for (std::size_t c = 0; c < dim_s; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_p; ++k) {
                acc += a[(r * dim_p + k) * n + (c * dim_p + k)];
            }
            out[r * dim_s + c] = acc;
        }
    }
}

void partial_trace_s(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out) {
    const std::size_t n = dim_s * dim_p;
    for (std::size_t r = 0; r < dim_p; ++r) {
        for (std::size_t c = 0; c < dim_p; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_s; ++k) {
                acc += a[(k * dim_p + r) * n + (k * dim_p + c)];
            }
            out[r * dim_p + c] = acc;
        }
    }
}

}  // namespace qmeas::kernels::serial
