// Copyright 2026 The Authors.
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

// Subset masks and the guard on exhaustive enumeration.

#ifndef GAMMOID_ENUMERATION_HPP_
#define GAMMOID_ENUMERATION_HPP_

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "gammoid/dimaze.hpp"

namespace gammoid {

using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultSizeGuard = 20;
inline constexpr std::size_t kMaxSizeGuard = 30;

/// Largest ground set enumerated exhaustively. GAMMOID_SIZE_GUARD overrides
/// the default, capped at kMaxSizeGuard.
inline std::size_t size_guard() {
  if (const char* env = std::getenv("GAMMOID_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v < kMaxSizeGuard ? v : kMaxSizeGuard;
    }
  }
  return kDefaultSizeGuard;
}

inline void require_enumerable(std::size_t n, std::size_t guard) {
  if (n > guard) {
    throw SizeGuardError("ground set has " + std::to_string(n) +
                         " elements; exhaustive enumeration is limited to " +
                         std::to_string(guard));
  }
}

inline int popcount(Mask m) { return std::popcount(m); }

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.insert(out.end(), v);
  }
  return out;
}

inline Mask set_to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Total order on masks: by cardinality, then lexicographically on the
/// sorted element lists.
inline bool canonical_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  while (a && b) {
    Mask la = a & (~a + 1);
    Mask lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return false;
}

}  // namespace gammoid

#endif  // GAMMOID_ENUMERATION_HPP_
