#include "tense/random_instances.hpp"

#include <algorithm>
#include <set>

namespace tense {

namespace {

bool fits_pow(int64_t base, int exp, int64_t bound) {
  int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > bound) return false;
  }
  return true;
}

}  // namespace

LatticePtr InstanceGen::lattice(int max_elems) {
  // a freshly drawn floor keeps the size distribution spread out instead of
  // collapsing onto tiny chains
  int floor_size = 1 + below(max_elems);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (attempt == 32) floor_size = 1;  // give up on the floor, not on validity
    int ground = 2 + below(3);
    int seeds = 1 + below(5);
    std::set<unsigned> family = {0u};
    for (int s = 0; s < seeds; ++s) family.insert(unsigned(rng_() % (1u << ground)));
    // close under union
    bool grew = true;
    while (grew && int(family.size()) <= max_elems) {
      grew = false;
      std::vector<unsigned> cur(family.begin(), family.end());
      for (size_t i = 0; i < cur.size() && !grew; ++i)
        for (size_t j = i + 1; j < cur.size(); ++j)
          if (family.insert(cur[i] | cur[j]).second) {
            grew = true;
            break;
          }
    }
    if (int(family.size()) > max_elems || int(family.size()) < floor_size) continue;
    std::vector<unsigned> sets(family.begin(), family.end());
    std::sort(sets.begin(), sets.end(), [](unsigned x, unsigned y) {
      int px = std::popcount(x), py = std::popcount(y);
      return px != py ? px < py : x < y;
    });
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < sets.size(); ++i) labels.push_back("e" + std::to_string(i));
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = 0; j < sets.size(); ++j)
        if ((sets[i] & ~sets[j]) == 0) pairs.emplace_back(int(i), int(j));
    return SupLattice::validate_indexed(std::move(labels), pairs);
  }
  return SupLattice::validate({"e0"}, {});
}

FssPtr InstanceGen::fss(int max_elems) {
  LatticePtr lat = lattice(max_elems);
  auto homs = enumerate_join_homs(lat, lat, 1u << 14);
  auto& pick = homs[below(int(homs.size()))];
  return std::make_shared<const FSupLattice>(FSupLattice{lat, pick.table});
}

FramePtr InstanceGen::frame(int max_nodes) {
  int n = 1 + below(max_nodes);
  std::vector<std::string> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back("t" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (below(3) == 0) rel.emplace_back(i, k);
  return Frame::make_indexed(std::move(nodes), std::move(rel));
}

JoinHom InstanceGen::join_hom(LatticePtr src, LatticePtr dst) {
  auto homs = enumerate_join_homs(src, dst, 1u << 14);
  return homs[below(int(homs.size()))];
}

JoinHom InstanceGen::lax_morphism(FssPtr src, FssPtr dst) {
  auto homs = enumerate_join_homs(src->lat, dst->lat, 1u << 14);
  std::vector<JoinHom> lax;
  for (auto& h : homs)
    if (is_lax_morphism(h, *src, *dst)) lax.push_back(std::move(h));
  // the constant-bottom hom is always lax, so `lax` is nonempty
  return lax[below(int(lax.size()))];
}

std::pair<FrameHom, FramePtr> InstanceGen::frame_hom(FramePtr src, FramePtr dst) {
  std::vector<int> table(static_cast<size_t>(src->size()));
  for (int i = 0; i < src->size(); ++i) table[i] = below(dst->size());
  std::vector<std::pair<int, int>> rel = dst->rel();
  for (auto [i, k] : src->rel()) rel.emplace_back(table[i], table[k]);
  FramePtr extended = Frame::make_indexed(dst->nodes(), std::move(rel));
  return {FrameHom::checked(src, extended, std::move(table)), extended};
}

PairSet InstanceGen::pair_set(const SupLattice& L, int max_pairs) {
  PairSet X;
  int count = below(max_pairs + 1);
  for (int i = 0; i < count; ++i) X.emplace_back(below(L.size()), below(L.size()));
  return normalize_pairs(std::move(X));
}

PairSet f_close_pairs(const FSupLattice& H, PairSet X) {
  X = normalize_pairs(std::move(X));
  for (size_t i = 0; i < X.size(); ++i) {
    std::pair<int, int> im{H.F[X[i].first], H.F[X[i].second]};
    if (!std::binary_search(X.begin(), X.end(), im)) {
      X.push_back(im);
      std::sort(X.begin(), X.end());
      X.erase(std::unique(X.begin(), X.end()), X.end());
      i = size_t(-1);  // restart; pair set is ≤ n², terminates
    }
  }
  return X;
}

namespace {

struct TriangleInstance {
  FramePtr J;
  FssPtr H;
  LatticePtr L;
};

// Sample until every derived structure fits its bound, so all three
// triangle checks run materializably.
TriangleInstance sample_triangle_instance(InstanceGen& gen, const CheckLimits& lim) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    FramePtr J = gen.frame(4);
    FssPtr H = gen.fss(6);
    LatticePtr L = gen.lattice(6);
    const int T = J->size();
    if (!fits_pow(H->lat->size(), T, SupLattice::carrier_cap())) continue;
    if (!fits_pow(L->size(), T, 256)) continue;
    Tensor t = tensor(J, H);
    if (!fits_pow(t.carrier()->size(), T, SupLattice::carrier_cap())) continue;
    if (count_join_homs(*H->lat, *t.carrier(), lim.max_homs) > lim.max_homs) continue;
    if (count_join_homs(*H->lat, *L, lim.max_homs) > lim.max_homs) continue;
    FrameOp p = frame_operator(L, J);
    if (count_join_homs(*p.carrier(), *L, lim.max_homs) > lim.max_homs) continue;
    return {J, H, L};
  }
  // guaranteed-tiny fallback
  FramePtr J = Frame::make({"t0"}, {});
  LatticePtr two = SupLattice::validate({"e0", "e1"}, {{"e0", "e1"}});
  return {J, std::make_shared<const FSupLattice>(FSupLattice::identity_operator(two)), two};
}

LatticePtr sample_small_lattice(InstanceGen& gen, int max_elems, int arity, int64_t pow_bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    LatticePtr L = gen.lattice(max_elems);
    if (fits_pow(L->size(), arity, pow_bound)) return L;
  }
  return SupLattice::validate({"e0", "e1"}, {{"e0", "e1"}});
}

}  // namespace

std::vector<AdjunctionReport> run_law_instance(uint64_t seed) {
  InstanceGen gen(seed);
  CheckLimits lim;
  std::vector<AdjunctionReport> reports;

  TriangleInstance ti = sample_triangle_instance(gen, lim);
  reports.push_back(check_triangles(Adjunction::I, ti.J, ti.H, ti.L, lim));
  reports.push_back(check_triangles(Adjunction::II, ti.J, ti.H, ti.L, lim));
  reports.push_back(check_triangles(Adjunction::III, ti.J, ti.H, ti.L, lim));

  // η: (J⊗f)^J ∘ η = η ∘ f for a random lax f
  {
    FssPtr H2;
    for (int attempt = 0; attempt < 64; ++attempt) {
      H2 = gen.fss(6);
      if (fits_pow(H2->lat->size(), ti.J->size(), SupLattice::carrier_cap())) break;
      H2 = nullptr;
    }
    if (H2) {
      JoinHom f = gen.lax_morphism(ti.H, H2);
      reports.push_back(eta_naturality(ti.J, f, ti.H, H2));
    }
  }

  // ε: f ∘ ε = ε ∘ (J⊗f^J) for a random join-hom f; resample when the
  // generated carrier of J⊗L^J does not fit the bound (e.g. empty relations)
  for (int attempt = 0; attempt < 16; ++attempt) {
    FramePtr J = attempt == 0 ? ti.J : gen.frame(3);
    LatticePtr L1 = attempt == 0 ? ti.L : sample_small_lattice(gen, 4, J->size(), 256);
    if (!fits_pow(L1->size(), J->size(), 256)) continue;
    LatticePtr L2 = sample_small_lattice(gen, 6, J->size(), 256);
    JoinHom f = gen.join_hom(L1, L2);
    try {
      reports.push_back(epsilon_naturality(J, f, lim));
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CarrierTooLarge) throw;
    }
  }

  // φ and ν: squares over a random frame hom
  {
    auto [t, J2] = gen.frame_hom(ti.J, gen.frame(4));
    if (fits_pow(ti.H->lat->size(), J2->size(), SupLattice::carrier_cap()) &&
        fits_pow(ti.L->size(), J2->size(), SupLattice::carrier_cap())) {
      reports.push_back(phi_naturality(ti.H, t));
      reports.push_back(nu_naturality(ti.L, t));
    }
  }

  // ψ: square over a random join-hom between small targets; resample when
  // the generated carrier of J[H,L1]⊗H does not fit the bound
  for (int attempt = 0; attempt < 16; ++attempt) {
    FssPtr H = attempt == 0 ? ti.H : gen.fss(5);
    LatticePtr L1 = attempt == 0 ? ti.L : gen.lattice(5);
    LatticePtr L2 = gen.lattice(6);
    if (count_join_homs(*H->lat, *L1, lim.max_homs) > lim.max_homs) continue;
    if (count_join_homs(*H->lat, *L2, lim.max_homs) > lim.max_homs) continue;
    JoinHom g = gen.join_hom(L1, L2);
    try {
      reports.push_back(psi_naturality(H, g, lim));
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CarrierTooLarge) throw;
    }
  }

  // μ: square over a random lax f, with a target small enough to
  // materialize both L^{J[H,L]} powers
  {
    FssPtr H2 = gen.fss(6);
    LatticePtr Lmu;
    for (int attempt = 0; attempt < 64 && !Lmu; ++attempt) {
      LatticePtr cand = gen.lattice(4);
      size_t n1 = count_join_homs(*ti.H->lat, *cand, lim.max_homs);
      size_t n2 = count_join_homs(*H2->lat, *cand, lim.max_homs);
      if (n1 <= lim.max_homs && n2 <= lim.max_homs &&
          fits_pow(cand->size(), int(n1), SupLattice::carrier_cap()) &&
          fits_pow(cand->size(), int(n2), SupLattice::carrier_cap()))
        Lmu = cand;
    }
    if (Lmu) {
      JoinHom f = gen.lax_morphism(ti.H, H2);
      reports.push_back(mu_naturality(Lmu, f, ti.H, H2));
    }
  }

  return reports;
}

}  // namespace tense
