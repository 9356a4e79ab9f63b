#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tense/lattice.hpp"

namespace tense {

// Join-preserving map between two sup-semilattices: table(bottom)=bottom and
// table(x∨y)=table(x)∨table(y). Validated at construction.
struct JoinHom {
  LatticePtr src;
  LatticePtr dst;
  std::vector<int> table;

  int operator()(int x) const {
    src->check_element(x);
    return table[x];
  }

  static JoinHom checked(LatticePtr src, LatticePtr dst, std::vector<int> table);
  // Skips revalidation; for maps whose join preservation is certified by
  // construction (projections, compositions of checked homs).
  static JoinHom trusted(LatticePtr src, LatticePtr dst, std::vector<int> table);

  static JoinHom identity(LatticePtr lat);
  static JoinHom compose(const JoinHom& g, const JoinHom& f);  // g ∘ f

  bool operator==(const JoinHom& o) const { return table == o.table; }
};

// Sup-semilattice with a join-preserving unary operator F.
struct FSupLattice {
  LatticePtr lat;
  std::vector<int> F;

  int apply(int x) const {
    lat->check_element(x);
    return F[x];
  }

  static FSupLattice checked(LatticePtr lat, std::vector<int> F);
  static FSupLattice identity_operator(LatticePtr lat);
};

using FssPtr = std::shared_ptr<const FSupLattice>;

// Predicates on candidate maps. `f` is a total table on G's elements.
bool is_join_hom(std::span<const int> f, const SupLattice& G, const SupLattice& L);
// First witness of a join-preservation failure, for diagnostics.
std::optional<std::string> join_hom_witness(std::span<const int> f, const SupLattice& G,
                                            const SupLattice& L);

bool is_lax_morphism(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2);
bool is_f_homomorphism(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2);
bool is_order_embedding(const JoinHom& f);
// Lax + order-embedding + (F₂(f(a)) ≤ f(a') ⟹ F₁(a) ≤ a') for all a, a'.
bool is_in_E_leq(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2);

// Every join-preserving map G → L exactly once, sorted lexicographically by
// value table. Backtracks over G's join-irreducibles; a map is kept iff its
// join-extension reproduces the assignment, so each hom appears once.
// Throws CarrierTooLarge when more than `max_count` homs exist.
std::vector<JoinHom> enumerate_join_homs(LatticePtr G, LatticePtr L,
                                         size_t max_count = 1u << 20);

size_t count_join_homs(const SupLattice& G, const SupLattice& L, size_t abort_above);

}  // namespace tense
