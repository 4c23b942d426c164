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

#ifndef RULEDOC_CLOSURE_KERNELS_H_
#define RULEDOC_CLOSURE_KERNELS_H_

#include <cstdint>
#include <span>

// Fixpoint kernels over fact bases encoded as 64-bit atom masks. Each ground
// clause adds `head` to a mask that contains all of `body`.
namespace ruledoc::kernels {

struct GroundClause {
  uint64_t body = 0;
  uint64_t head = 0;
};

enum class Isa { kScalar, kAvx2 };

const char *IsaName(Isa isa);
bool Avx2Available();
// Best variant supported by the running CPU.
Isa BestIsa();

// Closes every mask in place. All variants produce identical results.
void CloseScalar(std::span<const GroundClause> clauses,
                 std::span<uint64_t> masks);
// Requires Avx2Available().
void CloseAvx2(std::span<const GroundClause> clauses,
               std::span<uint64_t> masks);
void Close(std::span<const GroundClause> clauses, std::span<uint64_t> masks,
           Isa isa);
inline void Close(std::span<const GroundClause> clauses,
                  std::span<uint64_t> masks) {
  Close(clauses, masks, BestIsa());
}

}  // namespace ruledoc::kernels

#endif  // RULEDOC_CLOSURE_KERNELS_H_
