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

namespace ruledoc::kernels {

void CloseScalar(std::span<const GroundClause> clauses,
                 std::span<uint64_t> masks) {
  for (uint64_t &mask : masks) {
    uint64_t m = mask;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const GroundClause &c : clauses) {
        if ((m & c.body) == c.body && (m & c.head) == 0) {
          m |= c.head;
          changed = true;
        }
      }
    }
    mask = m;
  }
}

}  // namespace ruledoc::kernels
