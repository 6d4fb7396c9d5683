// Copyright 2026 The heraldq Authors
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

#ifndef HERALDQ_SIMD_KERNELS_H
#define HERALDQ_SIMD_KERNELS_H

#include <cstddef>
#include <string_view>

#include "heraldq/errors.h"

// Inner loops over amplitude blocks. Every kernel has a portable scalar
// reference and, on x86-64, an AVX2/FMA variant compiled in its own
// translation unit. The table used at runtime is picked once from CPUID and can
// be forced with HERALDQ_KERNELS=scalar|avx2.

namespace heraldq::simd {

struct KernelTable {
    std::string_view name;

    /// sum_i conj(a[i]) * b[i]
    Complex (*cdot)(const Complex *a, const Complex *b, std::size_t n);

    /// sum_i |a[i]|^2
    double (*norm2)(const Complex *a, std::size_t n);

    /// a[i] *= factor
    void (*scale)(Complex *a, std::size_t n, Complex factor);

    /// (a, b) <- ((a + b) / sqrt2, (a - b) / sqrt2), elementwise.
    void (*butterfly)(Complex *a, Complex *b, std::size_t n);

    /// dst[i ^ mask] = factor * src[i] for i < n. n must be a power of two,
    /// mask < n, and dst must not alias src.
    void (*scale_xor_copy)(Complex *dst, const Complex *src, std::size_t n, std::size_t mask, Complex factor);

    /// r = -1 / (1 + 1/P - 2i*detuning), evaluated for n grid points.
    void (*reflection_batch)(const double *purcell, const double *detuning, double *r_re, double *r_im, std::size_t n);
};

const KernelTable &scalar_kernels();

/// nullptr when the AVX2 table was not compiled in.
const KernelTable *avx2_kernels();

bool cpu_supports_avx2();

/// The table selected for this process.
const KernelTable &active_kernels();

}  // namespace heraldq::simd

#endif
