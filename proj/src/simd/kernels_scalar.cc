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

#include <cmath>

#include "heraldq/simd/kernels.h"

namespace heraldq::simd {
namespace {

Complex cdot_scalar(const Complex *a, const Complex *b, std::size_t n) {
    double re = 0;
    double im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2_scalar(const Complex *a, std::size_t n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

void scale_scalar(Complex *a, std::size_t n, Complex factor) {
    for (std::size_t i = 0; i < n; ++i) {
        a[i] *= factor;
    }
}

void butterfly_scalar(Complex *a, Complex *b, std::size_t n) {
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) {
        Complex x = a[i];
        Complex y = b[i];
        a[i] = (x + y) * s;
        b[i] = (x - y) * s;
    }
}

void scale_xor_copy_scalar(Complex *dst, const Complex *src, std::size_t n, std::size_t mask, Complex factor) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i ^ mask] = src[i] * factor;
    }
}

void reflection_batch_scalar(const double *purcell, const double *detuning, double *r_re, double *r_im, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double a = 1.0 + 1.0 / purcell[i];
        double b = 2.0 * detuning[i];
        double den = a * a + b * b;
        r_re[i] = -a / den;
        r_im[i] = -b / den;
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar",
        cdot_scalar,
        norm2_scalar,
        scale_scalar,
        butterfly_scalar,
        scale_xor_copy_scalar,
        reflection_batch_scalar,
    };
    return table;
}

}  // namespace heraldq::simd
