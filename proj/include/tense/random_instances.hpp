#pragma once

#include <cstdint>
#include <random>

#include "tense/adjunctions.hpp"
#include "tense/constructions.hpp"
#include "tense/nucleus.hpp"

namespace tense {

// Seeded, replayable generators for the law suites. Lattices are built as
// union-closed families of subsets of a small ground set (always genuine
// sup-semilattices); instances whose derived structures would exceed the
// configured bounds are resampled, keeping every check materializable.
class InstanceGen {
 public:
  explicit InstanceGen(uint64_t seed) : rng_(seed) {}

  // lattice with 1..max_elems elements (max_elems ≤ 16)
  LatticePtr lattice(int max_elems);
  // join-preserving endo-operator, uniformly among all of them
  FssPtr fss(int max_elems);
  // frame with 1..max_nodes nodes, random relation density
  FramePtr frame(int max_nodes);

  // random join-hom / lax morphism between the given carriers (hom sets on
  // generator-sized lattices are small enough to enumerate)
  JoinHom join_hom(LatticePtr src, LatticePtr dst);
  JoinHom lax_morphism(FssPtr src, FssPtr dst);
  // frame hom onto a relation-extended copy of `dst` (so one always exists)
  std::pair<FrameHom, FramePtr> frame_hom(FramePtr src, FramePtr dst);

  PairSet pair_set(const SupLattice& L, int max_pairs);

  uint64_t next() { return rng_(); }
  int below(int bound) { return bound <= 1 ? 0 : int(rng_() % uint64_t(bound)); }

 private:
  std::mt19937_64 rng_;
};

// One full adjunction-law instance: triangles I, II, III plus the six
// naturality squares on fresh random morphisms. Derived-structure bounds
// are enforced by resampling inside.
std::vector<AdjunctionReport> run_law_instance(uint64_t seed);

// Close X under (F×F) so that j[X] is a genuine prenucleus.
PairSet f_close_pairs(const FSupLattice& H, PairSet X);

}  // namespace tense
