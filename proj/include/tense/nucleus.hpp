#pragma once

#include <memory>
#include <vector>

#include "tense/hom.hpp"
#include "tense/lattice.hpp"

namespace tense {

using PairSet = std::vector<std::pair<int, int>>;  // sorted, unique

PairSet normalize_pairs(PairSet pairs);

// Monotone increasing operator on an F-sup-semilattice; `lax` records whether
// F(j(x)) ≤ j(F(x)) holds (checked, not assumed).
struct Prenucleus {
  FssPtr base;
  std::vector<int> table;
  bool lax = false;

  int operator()(int x) const {
    base->lat->check_element(x);
    return table[x];
  }
};

// Idempotent prenucleus (a closure operator on the carrier; lax when flagged).
struct Nucleus {
  FssPtr base;
  std::vector<int> table;
  bool lax = false;

  int operator()(int x) const {
    base->lat->check_element(x);
    return table[x];
  }
};

// j[X](a) = a ∨ ⋁{c | d ≤ a, (c,d) ∈ X or (d,c) ∈ X}. Monotone and
// increasing by construction (verified); laxness and the inclusion
// (F×F)(X) ⊆ X are checked and recorded, never assumed.
struct PrenucleusFromPairs {
  Prenucleus j;
  bool pairs_f_closed = false;  // (F×F)(X) ⊆ X
};
PrenucleusFromPairs prenucleus_from_pairs(FssPtr H, const PairSet& X);

// Least closure operator with the same fixpoint set, by fixpoint iteration.
// When the prenucleus is lax the closure must be lax as well (a law of the
// construction; violation throws LawViolation).
Nucleus nucleus_closure(const Prenucleus& j);

// Identity nucleus on H.
Nucleus identity_nucleus(FssPtr H);

// Quotient by a nucleus: carrier = fixpoints with inherited order, join
// j∘(base join); projection is surjective and join-preserving; inducedF =
// j∘F restricted to fixpoints (an F-sup-semilattice structure when lax).
struct Quotient {
  FssPtr base;
  std::vector<int> closure;  // base element → its fixpoint (base index)
  LatticePtr carrier;
  std::vector<int> proj;      // base index → carrier index
  std::vector<int> rep;       // carrier index → base index (the fixpoint)
  std::vector<int> inducedF;  // carrier index → carrier index
  bool lax = false;           // inducedF is lawful only when true

  JoinHom projection() const { return JoinHom::trusted(base->lat, carrier, proj); }
  FSupLattice carrier_fss() const { return FSupLattice{carrier, inducedF}; }
};
Quotient quotient(FssPtr H, const Nucleus& n);

// Unique map ḡ with ḡ ∘ n(j[X]) = g, for g constant on the pairs of X.
// Throws NotConstantOnX when the precondition fails and FiberConflict when g
// is not constant on a nucleus fiber (a reportable law violation).
JoinHom factor_through(const Quotient& q, const JoinHom& g, const PairSet& X);

// Partition of a carrier closed under pointwise joins; F-congruence when
// blocks are additionally F-compatible.
struct Congruence {
  FssPtr base;
  std::vector<int> block_of;  // element → block id (block id = least member)
  bool f_congruence = false;
};

Congruence nucleus_to_congruence(const Nucleus& n);
// Validates the join-closure condition (NotACongruence otherwise).
Nucleus congruence_to_nucleus(FssPtr H, const std::vector<int>& block_of);

}  // namespace tense
