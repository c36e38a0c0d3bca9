// Copyright 2026 The plc Authors.
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

#include "plc/bits.hpp"

#include <algorithm>

namespace plc {

std::vector<int> ToList(Mask m) {
  std::vector<int> out;
  ForEach(m, [&](int p) { out.push_back(p); });
  return out;
}

Mask FromList(const std::vector<int>& points) {
  Mask m = 0;
  for (int p : points) m |= Bit(p);
  return m;
}

bool LexLess(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  Mask low = diff & (~diff + 1);
  Mask above = ~((low << 1) - 1);
  if (a & low) {
    // a has the smaller element at the first difference unless b has ended.
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

void SortUniqueLex(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(), LexMaskLess());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace plc
