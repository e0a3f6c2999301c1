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

#ifndef QMEAS_KERNELS_HPP
#define QMEAS_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>

namespace qmeas::kernels {

using Complex = std::complex<double>;

// All buffers are row-major square matrices. Output buffers must not alias
// inputs and are fully overwritten.
//
// The OpenMP kernels only fork when the problem is large enough to pay for it;
// below kParallelMinDim they run on the calling thread.
inline constexpr std::size_t kParallelMinDim = 48;

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n);
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);
void partial_trace_p(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out);
void partial_trace_s(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out);

// Straight-line reference implementations. Kept for testing the parallel
// kernels and as the benchmark baseline; not used by the library.
namespace serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n);
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);
void partial_trace_p(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out);
void partial_trace_s(std::span<const Complex> a, std::size_t dim_s, std::size_t dim_p, std::span<Complex> out);

}  // namespace serial

}  // namespace qmeas::kernels

#endif
