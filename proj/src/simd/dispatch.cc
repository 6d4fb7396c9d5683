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

#include <cstdlib>
#include <string_view>

#include "heraldq/simd/kernels.h"

namespace heraldq::simd {

#ifndef HERALDQ_HAVE_AVX2
const KernelTable *avx2_kernels() {
    return nullptr;
}
#endif

bool cpu_supports_avx2() {
#if defined(HERALDQ_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const KernelTable &select_kernels() {
    const char *forced = std::getenv("HERALDQ_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return scalar_kernels();
    }
    if (avx2_kernels() != nullptr && cpu_supports_avx2()) {
        return *avx2_kernels();
    }
    return scalar_kernels();
}

}  // namespace

const KernelTable &active_kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

}  // namespace heraldq::simd
