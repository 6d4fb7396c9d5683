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

// Compiled with -mavx2 -mfma. Nothing in this file may run before
// cpu_supports_avx2() has returned true.

#include <immintrin.h>

#include <cmath>

#include "heraldq/simd/kernels.h"

namespace heraldq::simd {
namespace {

// Two complex doubles per 256-bit register, laid out [re0, im0, re1, im1].

inline const double *raw(const Complex *p) {
    return reinterpret_cast<const double *>(p);
}
inline double *raw(Complex *p) {
    return reinterpret_cast<double *>(p);
}

inline __m256d cmul(__m256d x, __m256d f_re, __m256d f_im) {
    __m256d swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(x, f_re, _mm256_mul_pd(swapped, f_im));
}

Complex cdot_avx2(const Complex *a, const Complex *b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(raw(a + i));
        __m256d y = _mm256_loadu_pd(raw(b + i));
        acc_re = _mm256_fmadd_pd(x, y, acc_re);
        acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0b0101), acc_im);
    }
    alignas(32) double re[4];
    alignas(32) double im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    // acc_im lanes hold [ar*bi, ai*br, ...]
    double out_re = (re[0] + re[1]) + (re[2] + re[3]);
    double out_im = (im[0] - im[1]) + (im[2] - im[3]);
    for (; i < n; ++i) {
        out_re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        out_im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {out_re, out_im};
}

double norm2_avx2(const Complex *a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(raw(a + i));
        acc = _mm256_fmadd_pd(x, x, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        out += std::norm(a[i]);
    }
    return out;
}

void scale_avx2(Complex *a, std::size_t n, Complex factor) {
    const __m256d f_re = _mm256_set1_pd(factor.real());
    const __m256d f_im = _mm256_set1_pd(factor.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(raw(a + i));
        _mm256_storeu_pd(raw(a + i), cmul(x, f_re, f_im));
    }
    for (; i < n; ++i) {
        a[i] *= factor;
    }
}

void butterfly_avx2(Complex *a, Complex *b, std::size_t n) {
    const __m256d s = _mm256_set1_pd(1.0 / std::sqrt(2.0));
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(raw(a + i));
        __m256d y = _mm256_loadu_pd(raw(b + i));
        _mm256_storeu_pd(raw(a + i), _mm256_mul_pd(_mm256_add_pd(x, y), s));
        _mm256_storeu_pd(raw(b + i), _mm256_mul_pd(_mm256_sub_pd(x, y), s));
    }
    const double sc = 1.0 / std::sqrt(2.0);
    for (; i < n; ++i) {
        Complex x = a[i];
        Complex y = b[i];
        a[i] = (x + y) * sc;
        b[i] = (x - y) * sc;
    }
}

void scale_xor_copy_avx2(Complex *dst, const Complex *src, std::size_t n, std::size_t mask, Complex factor) {
    if (n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            dst[i ^ mask] = src[i] * factor;
        }
        return;
    }
    const __m256d f_re = _mm256_set1_pd(factor.real());
    const __m256d f_im = _mm256_set1_pd(factor.imag());
    if ((mask & 1) == 0) {
        // Even pairs stay adjacent and ordered under the xor.
        for (std::size_t i = 0; i < n; i += 2) {
            __m256d x = _mm256_loadu_pd(raw(src + i));
            _mm256_storeu_pd(raw(dst + (i ^ mask)), cmul(x, f_re, f_im));
        }
    } else {
        // Odd mask swaps the two members of every pair.
        for (std::size_t i = 0; i < n; i += 2) {
            __m256d x = cmul(_mm256_loadu_pd(raw(src + i)), f_re, f_im);
            _mm256_storeu_pd(raw(dst + ((i ^ mask) & ~std::size_t{1})), _mm256_permute2f128_pd(x, x, 1));
        }
    }
}

void reflection_batch_avx2(const double *purcell, const double *detuning, double *r_re, double *r_im, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d neg = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_add_pd(one, _mm256_div_pd(one, _mm256_loadu_pd(purcell + i)));
        __m256d b = _mm256_mul_pd(two, _mm256_loadu_pd(detuning + i));
        __m256d den = _mm256_fmadd_pd(a, a, _mm256_mul_pd(b, b));
        _mm256_storeu_pd(r_re + i, _mm256_xor_pd(_mm256_div_pd(a, den), neg));
        _mm256_storeu_pd(r_im + i, _mm256_xor_pd(_mm256_div_pd(b, den), neg));
    }
    for (; i < n; ++i) {
        double a = 1.0 + 1.0 / purcell[i];
        double b = 2.0 * detuning[i];
        double den = a * a + b * b;
        r_re[i] = -a / den;
        r_im[i] = -b / den;
    }
}

}  // namespace

const KernelTable *avx2_kernels() {
    static const KernelTable table{
        "avx2",
        cdot_avx2,
        norm2_avx2,
        scale_avx2,
        butterfly_avx2,
        scale_xor_copy_avx2,
        reflection_batch_avx2,
    };
    return &table;
}

}  // namespace heraldq::simd
