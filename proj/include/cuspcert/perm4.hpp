#pragma once
// Permutations of {0,1,2,3} as flat arrays: inverse, composition, parity,
// plus the fixed shape-slot convention pairing opposite tetrahedron edges.
#include <array>

namespace cuspcert {

using Perm4 = std::array<int, 4>;

inline constexpr Perm4 kIdentityPerm{0, 1, 2, 3};

constexpr bool perm_valid(const Perm4& p) {
  int seen = 0;
  for (int v : p) {
    if (v < 0 || v > 3) return false;
    seen |= 1 << v;
  }
  return seen == 0xF;
}

constexpr Perm4 perm_inverse(const Perm4& p) {
  Perm4 q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

// (p*q)(i) = p[q[i]]
constexpr Perm4 perm_compose(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = p[q[i]];
  return r;
}

// 1 = odd permutation
constexpr int perm_parity(const Perm4& p) {
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s ^= 1;
  return s;
}

// Shape slots: edges {0,1},{2,3} -> 0 (z); {0,2},{1,3} -> 1 (z'); {0,3},{1,2} -> 2 (z'').
constexpr int edge_slot(int a, int b) {
  return (a == 0 || b == 0) ? a + b - 1 : 5 - a - b;
}

}  // namespace cuspcert
