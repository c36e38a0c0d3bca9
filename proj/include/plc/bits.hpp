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

#ifndef PLC_BITS_HPP_
#define PLC_BITS_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace plc {

// Point sets over [d] are bitmasks; point p (1-based) is bit p-1.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 30;

inline constexpr Mask Bit(int p) { return Mask{1} << (p - 1); }
inline constexpr Mask FullMask(int d) {
  return d >= 32 ? ~Mask{0} : (Mask{1} << d) - 1;
}
inline int Size(Mask m) { return std::popcount(m); }
inline int Lowest(Mask m) { return std::countr_zero(m) + 1; }
inline bool Contains(Mask big, Mask small) { return (big & small) == small; }

// Calls f(p) for each point of m in increasing order.
template <typename F>
inline void ForEach(Mask m, F&& f) {
  while (m != 0) {
    int p = std::countr_zero(m) + 1;
    m &= m - 1;
    f(p);
  }
}

std::vector<int> ToList(Mask m);
Mask FromList(const std::vector<int>& points);

// Lexicographic order of the sorted element lists of a and b.
bool LexLess(Mask a, Mask b);

struct LexMaskLess {
  bool operator()(Mask a, Mask b) const { return LexLess(a, b); }
};

// Sorts by LexLess and removes duplicates.
void SortUniqueLex(std::vector<Mask>& v);

}  // namespace plc

#endif  // PLC_BITS_HPP_
