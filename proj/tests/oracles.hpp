#pragma once

// Independent oracles for the law suites. These deliberately avoid the
// library's enumeration/closure code paths: brute force over all maps,
// direct greatest-lower-bound searches, exhaustive fixpoint scans.

#include <vector>

#include "tense/hom.hpp"
#include "tense/lattice.hpp"

namespace oracles {

using tense::LatticePtr;
using tense::SupLattice;

// All total maps G → L that preserve bottom and binary joins, by filtering
// every one of the |L|^|G| candidates against the definition.
inline std::vector<std::vector<int>> all_join_maps(const SupLattice& G,
                                                   const SupLattice& L) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<size_t>(G.size()), 0);
  while (true) {
    bool ok = f[G.bottom()] == L.bottom();
    for (int x = 0; x < G.size() && ok; ++x)
      for (int y = 0; y < G.size() && ok; ++y)
        ok = f[G.join(x, y)] == L.join(f[x], f[y]);
    if (ok) out.push_back(f);
    int i = G.size() - 1;
    while (i >= 0 && ++f[i] == L.size()) f[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greatest lower bound by direct search (no join-of-lower-bounds detour).
inline int direct_glb(const SupLattice& L, const std::vector<int>& xs) {
  int best = -1;
  for (int z = 0; z < L.size(); ++z) {
    bool lower = true;
    for (int x : xs) lower = lower && L.leq(z, x);
    if (!lower) continue;
    if (best < 0 || L.leq(best, z)) best = z;
  }
  // `best` is a maximal lower bound; confirm it dominates every lower bound
  for (int z = 0; z < L.size() && best >= 0; ++z) {
    bool lower = true;
    for (int x : xs) lower = lower && L.leq(z, x);
    if (lower && !L.leq(z, best)) best = -1;
  }
  return best;
}

// Fixpoints of an operator table.
inline std::vector<int> fixpoints_of(const std::vector<int>& table) {
  std::vector<int> out;
  for (int a = 0; a < int(table.size()); ++a)
    if (table[a] == a) out.push_back(a);
  return out;
}

// n(j)(a) = ⋀{x fixpoint | a ≤ x}: the meet-of-fixpoints formula, computed
// with the direct glb search.
inline std::vector<int> closure_by_meet_formula(const SupLattice& L,
                                                const std::vector<int>& j_table) {
  std::vector<int> fixed = fixpoints_of(j_table);
  std::vector<int> out(static_cast<size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) {
    std::vector<int> above;
    for (int x : fixed)
      if (L.leq(a, x)) above.push_back(x);
    out[a] = direct_glb(L, above);
  }
  return out;
}

}  // namespace oracles
