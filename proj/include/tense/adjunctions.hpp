#pragma once

#include <string>
#include <vector>

#include "tense/constructions.hpp"

namespace tense {

// Outcome of a law-verification run; a verdict passes only if the law held
// on every element checked, and the first counterexample is kept.
struct AdjunctionReport {
  std::string id;
  std::string instance;
  struct Verdict {
    std::string law;
    bool pass = false;
    std::string witness;  // first counterexample, empty on pass
  };
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

struct CheckLimits {
  size_t max_homs = 512;       // bound on lazily enumerated hom-frames
  size_t max_generated = 4096; // bound on lazily generated tensor carriers
  size_t sample_points = 64;   // extra seeded points for factorization spot checks
};

// η_H: H → (J⊗H)^J, (η_H(x))(i) = n(j[J,H])(x_{i=}). Values are tuples of
// tensor-carrier indices; lax and join-preserving by the theorem (verified).
struct EtaMap {
  FssPtr H;
  FramePtr frame;
  LatticePtr tensor_carrier;
  std::vector<Tuple> table;
};
EtaMap eta(const Tensor& t);
// Materialized form into an explicit power of the tensor carrier.
JoinHom eta_as_hom(const EtaMap& e, const FrameOp& tensor_power);

// ε_L: J⊗L^J → L, the unique morphism with ε∘n(j[J,L^J]) = e_L where
// e_L(x̄) = ⋁_i x̄(i)(i). Built by factorization; well-definedness verified.
JoinHom epsilon(const Tensor& t_of_LJ, const FrameOp& pLJ, LatticePtr L);

// φ_J: J → J[H, J⊗H], (φ_J(i))(x) = n(j[J,H])(x_{i=}).
FrameHom phi(const Tensor& t, const HomFrame& hf_tensor);

// ψ_L: J[H,L]⊗H → L, unique with ψ∘n(j[J[H,L],H]) = f_L,
// f_L(x) = ⋁_α α(x(α)).
JoinHom psi(const Tensor& t_over_homframe, const HomFrame& hf);

// ν_J: J → J[L^J, L], (ν_J(i))(x) = x(i).
FrameHom nu(const FrameOp& pLJ, const HomFrame& hf_of_power);

// μ_H: H → L^{J[H,L]}, (μ_H(x))(α) = α(x).
struct MuMap {
  JoinHom hom;
  FrameOp codomain;  // L^{J[H,L]} with its frame operator
};
MuMap mu(const HomFrame& hf);

enum class Adjunction { I, II, III };

// Evaluates both triangle identities of the chosen adjoint situation
// elementwise/nodewise on the given instance. Nested structures that exceed
// the carrier cap are handled through pointwise closure evaluation instead
// of materialization.
AdjunctionReport check_triangles(Adjunction which, FramePtr J, FssPtr H, LatticePtr L,
                                 const CheckLimits& lim = {});

// Naturality squares of the six transformations.
AdjunctionReport eta_naturality(FramePtr J, const JoinHom& f, FssPtr H1, FssPtr H2);
AdjunctionReport epsilon_naturality(FramePtr J, const JoinHom& f,
                                    const CheckLimits& lim = {});
AdjunctionReport phi_naturality(FssPtr H, const FrameHom& t);
AdjunctionReport psi_naturality(FssPtr H, const JoinHom& g, const CheckLimits& lim = {});
AdjunctionReport nu_naturality(LatticePtr L, const FrameHom& t);
AdjunctionReport mu_naturality(LatticePtr L, const JoinHom& f, FssPtr H1, FssPtr H2);

std::string describe_instance(const Frame* J, const FSupLattice* H, const SupLattice* L);

}  // namespace tense
