// Copyright 2026 The ruledoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ruledoc/closure_kernels.h"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define RULEDOC_HAVE_AVX2_KERNEL 1
#endif

namespace ruledoc::kernels {

#ifdef RULEDOC_HAVE_AVX2_KERNEL

// Four fact bases per 256-bit register. Every clause is applied to all lanes;
// the sweep repeats until no lane changes.
__attribute__((target("avx2"))) void CloseAvx2(
    std::span<const GroundClause> clauses, std::span<uint64_t> masks) {
  const size_t n = masks.size();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i m = _mm256_loadu_si256(
        reinterpret_cast<const __m256i *>(masks.data() + i));
    while (true) {
      const __m256i before = m;
      for (const GroundClause &c : clauses) {
        const __m256i body = _mm256_set1_epi64x(static_cast<long long>(c.body));
        const __m256i head = _mm256_set1_epi64x(static_cast<long long>(c.head));
        const __m256i fires =
            _mm256_cmpeq_epi64(_mm256_and_si256(m, body), body);
        m = _mm256_or_si256(m, _mm256_and_si256(fires, head));
      }
      const __m256i same = _mm256_cmpeq_epi64(m, before);
      if (_mm256_movemask_epi8(same) == -1) break;
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(masks.data() + i), m);
  }
  CloseScalar(clauses, masks.subspan(i));
}

bool Avx2Available() { return __builtin_cpu_supports("avx2"); }

#else

void CloseAvx2(std::span<const GroundClause> clauses,
               std::span<uint64_t> masks) {
  CloseScalar(clauses, masks);
}

bool Avx2Available() { return false; }

#endif

const char *IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

Isa BestIsa() {
  static const Isa best = Avx2Available() ? Isa::kAvx2 : Isa::kScalar;
  return best;
}

void Close(std::span<const GroundClause> clauses, std::span<uint64_t> masks,
           Isa isa) {
  if (isa == Isa::kAvx2 && Avx2Available()) {
    CloseAvx2(clauses, masks);
  } else {
    CloseScalar(clauses, masks);
  }
}

}  // namespace ruledoc::kernels
