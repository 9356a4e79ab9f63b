#pragma once

#include <string>
#include <vector>

#include "tense/frame.hpp"
#include "tense/hom.hpp"
#include "tense/lattice.hpp"
#include "tense/nucleus.hpp"
#include "tense/tuples.hpp"

namespace tense {

// L^J: the power lattice L^T carrying the frame-induced operator
// (F^J(x))(i) = ⋁{x(k) | (i,k) ∈ S}. Join preservation of F^J is verified
// at build time.
struct FrameOp {
  FramePtr frame;
  Power power;
  FssPtr fss;  // carrier = power.carrier(), F = F^J

  const LatticePtr& carrier() const { return power.carrier(); }
};

FrameOp frame_operator(LatticePtr L, FramePtr J);

// x_{iS} and x_{i=} as tuples over L.
Tuple indicator(const SupLattice& L, int x, int node, const Frame& J);
Tuple indicator_eq(const SupLattice& L, int x, int node, int arity);

// f^J: L₁^J → L₂^J, (f^J(x))(i) = f(x(i)); an F-homomorphism (verified).
JoinHom hom_power_map(const JoinHom& f, const FrameOp& p1, const FrameOp& p2);

// L^t: L^{J₂} → L^{J₁}, (L^t(x))(i) = x(t(i)); lax (verified).
JoinHom backward_powerset(const FrameHom& t, const FrameOp& p2, const FrameOp& p1);

// t^→: L^{T₁} → L^{T₂}, (t^→(x))(k) = ⋁{x(i) | t(i) = k}.
JoinHom forward_powerset(const FrameHom& t, const FrameOp& p1, const FrameOp& p2);

// J⊗H = G^T / n(j[J,H]). Builds the full power G^T (cap-guarded), generates
// [J,H], closes, quotients. The prenucleus j[J,H] is taken over the pwo
// (G^T, F^J); whether it is lax, and whether (F×F)([J,H]) ⊆ [J,H], is
// checked and recorded rather than assumed.
struct Tensor {
  FramePtr frame;
  FssPtr H;
  FrameOp base_op;
  PairSet X;  // [J,H] as base-power element pairs, set semantics
  Quotient q;
  bool j_lax = false;
  bool pairs_f_closed = false;

  const LatticePtr& carrier() const { return q.carrier; }
  // projection applied to a tuple over H's carrier
  int project_tuple(std::span<const int> tuple) const {
    return q.proj[base_op.power.encode(tuple)];
  }
};

Tensor tensor(FramePtr J, FssPtr H);

// t⊗H: the unique map with n(j[J₂,H]) ∘ t^→ = (t⊗H) ∘ n(j[J₁,H]).
JoinHom tensor_map_frame(const FrameHom& t, const Tensor& t1, const Tensor& t2);

// J⊗f for lax f: H₁ → H₂: n(j[J,H₂]) ∘ f^J = (J⊗f) ∘ n(j[J,H₁]).
JoinHom tensor_map_fss(const JoinHom& f, const Tensor& t1, const Tensor& t2);

// J[H,L]: nodes are the join-homs G → L in canonical order, α S β iff
// β(x) ≤ α(F(x)) for all x. The relation is raw (no closure applied).
struct HomFrame {
  FssPtr H;
  LatticePtr L;
  FramePtr frame;
  std::vector<JoinHom> homs;

  int index_of_hom(const std::vector<int>& table) const;  // -1 when absent
};

HomFrame hom_frame(FssPtr H, LatticePtr L, size_t max_homs = 4096);

// J[H,f]: postcomposition node map α ↦ f∘α (relation preservation verified).
FrameHom hom_frame_map_cod(const JoinHom& f, const HomFrame& hf1, const HomFrame& hf2);

// J[f,L]: precomposition node map α ↦ α∘f for lax f: H₁ → H₂,
// J[H₂,L] → J[H₁,L] (relation preservation verified).
FrameHom hom_frame_map_dom(const JoinHom& f, const HomFrame& hf2, const HomFrame& hf1);

}  // namespace tense
