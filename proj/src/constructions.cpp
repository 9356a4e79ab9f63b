#include "tense/constructions.hpp"

#include <algorithm>
#include <unordered_map>

namespace tense {

FrameOp frame_operator(LatticePtr L, FramePtr J) {
  Power p = power_lattice(L, J->nodes());
  const int n = p.carrier()->size();
  const int arity = p.arity();
  std::vector<int> F(n);
  std::vector<int> digits(arity), image(arity);
  for (int u = 0; u < n; ++u) {
    digits = p.decode(u);
    for (int i = 0; i < arity; ++i) {
      int acc = L->bottom();
      for (int k : J->successors(i)) acc = L->join(acc, digits[k]);
      image[i] = acc;
    }
    F[u] = p.encode(image);
  }
  // checked(): F^J preserves all joins
  auto fss = std::make_shared<const FSupLattice>(
      FSupLattice::checked(p.carrier(), std::move(F)));
  return FrameOp{std::move(J), std::move(p), std::move(fss)};
}

Tuple indicator(const SupLattice& L, int x, int node, const Frame& J) {
  L.check_element(x);
  if (node < 0 || node >= J.size()) fail(ErrorKind::UnknownNode, "indicator node out of range");
  Tuple t(static_cast<size_t>(J.size()), L.bottom());
  for (int k : J.successors(node)) t[k] = x;
  return t;
}

Tuple indicator_eq(const SupLattice& L, int x, int node, int arity) {
  L.check_element(x);
  if (node < 0 || node >= arity) fail(ErrorKind::UnknownNode, "indicator node out of range");
  Tuple t(static_cast<size_t>(arity), L.bottom());
  t[node] = x;
  return t;
}

JoinHom hom_power_map(const JoinHom& f, const FrameOp& p1, const FrameOp& p2) {
  if (!Frame::same(*p1.frame, *p2.frame))
    fail(ErrorKind::CarrierMismatch, "f^J needs both powers over the same frame");
  if (!SupLattice::same(*f.src, *p1.power.base()) || !SupLattice::same(*f.dst, *p2.power.base()))
    fail(ErrorKind::CarrierMismatch, "f^J: f does not connect the two base lattices");
  const int n = p1.carrier()->size();
  const int arity = p1.power.arity();
  std::vector<int> table(n);
  std::vector<int> image(arity);
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i < arity; ++i) image[i] = f.table[p1.power.at(u, i)];
    table[u] = p2.power.encode(image);
  }
  JoinHom out = JoinHom::trusted(p1.carrier(), p2.carrier(), std::move(table));
  // the theorem's claim: f^J is an F-homomorphism
  if (!is_f_homomorphism(out, *p1.fss, *p2.fss))
    fail(ErrorKind::LawViolation, "f^J fails to commute with the frame operators");
  return out;
}

JoinHom backward_powerset(const FrameHom& t, const FrameOp& p2, const FrameOp& p1) {
  if (!Frame::same(*t.src, *p1.frame) || !Frame::same(*t.dst, *p2.frame))
    fail(ErrorKind::CarrierMismatch, "L^t: frames do not match the frame hom");
  if (!SupLattice::same(*p1.power.base(), *p2.power.base()))
    fail(ErrorKind::CarrierMismatch, "L^t: powers have different bases");
  const int n2 = p2.carrier()->size();
  const int a1 = p1.power.arity();
  std::vector<int> table(n2);
  std::vector<int> image(a1);
  for (int x = 0; x < n2; ++x) {
    for (int i = 0; i < a1; ++i) image[i] = p2.power.at(x, t.table[i]);
    table[x] = p1.power.encode(image);
  }
  JoinHom out = JoinHom::trusted(p2.carrier(), p1.carrier(), std::move(table));
  // the theorem's claim: L^t is lax
  if (!is_lax_morphism(out, *p2.fss, *p1.fss))
    fail(ErrorKind::LawViolation, "L^t fails the lax inequality");
  return out;
}

JoinHom forward_powerset(const FrameHom& t, const FrameOp& p1, const FrameOp& p2) {
  if (!Frame::same(*t.src, *p1.frame) || !Frame::same(*t.dst, *p2.frame))
    fail(ErrorKind::CarrierMismatch, "t^→: frames do not match the frame hom");
  if (!SupLattice::same(*p1.power.base(), *p2.power.base()))
    fail(ErrorKind::CarrierMismatch, "t^→: powers have different bases");
  const auto& L = *p1.power.base();
  const int n1 = p1.carrier()->size();
  const int a1 = p1.power.arity();
  const int a2 = p2.power.arity();
  std::vector<int> table(n1);
  std::vector<int> image(a2);
  for (int x = 0; x < n1; ++x) {
    std::fill(image.begin(), image.end(), L.bottom());
    for (int i = 0; i < a1; ++i) {
      int k = t.table[i];
      image[k] = L.join(image[k], p1.power.at(x, i));
    }
    table[x] = p2.power.encode(image);
  }
  return JoinHom::trusted(p1.carrier(), p2.carrier(), std::move(table));
}

Tensor tensor(FramePtr J, FssPtr H) {
  Tensor out;
  out.frame = J;
  out.H = H;
  out.base_op = frame_operator(H->lat, J);

  TupleSpace space{H->lat, J->size()};
  auto tuple_pairs = tensor_pair_tuples(space, *J, *H);
  out.X.reserve(tuple_pairs.size());
  for (const auto& [p, d] : tuple_pairs)
    out.X.emplace_back(out.base_op.power.encode(p), out.base_op.power.encode(d));
  out.X = normalize_pairs(std::move(out.X));

  auto pre = prenucleus_from_pairs(out.base_op.fss, out.X);
  out.j_lax = pre.j.lax;
  out.pairs_f_closed = pre.pairs_f_closed;
  Nucleus n = nucleus_closure(pre.j);
  out.q = quotient(out.base_op.fss, n);
  return out;
}

JoinHom tensor_map_frame(const FrameHom& t, const Tensor& t1, const Tensor& t2) {
  if (!Frame::same(*t.src, *t1.frame) || !Frame::same(*t.dst, *t2.frame))
    fail(ErrorKind::CarrierMismatch, "t⊗H: frames do not match the frame hom");
  if (!SupLattice::same(*t1.H->lat, *t2.H->lat))
    fail(ErrorKind::CarrierMismatch, "t⊗H: tensors over different F-carriers");
  JoinHom fwd = forward_powerset(t, t1.base_op, t2.base_op);
  JoinHom g = JoinHom::compose(t2.q.projection(), fwd);
  return factor_through(t1.q, g, t1.X);
}

JoinHom tensor_map_fss(const JoinHom& f, const Tensor& t1, const Tensor& t2) {
  if (!Frame::same(*t1.frame, *t2.frame))
    fail(ErrorKind::CarrierMismatch, "J⊗f: tensors over different frames");
  if (!is_lax_morphism(f, *t1.H, *t2.H))
    fail(ErrorKind::NotLax, "J⊗f requires a lax morphism between the F-carriers");
  JoinHom fj = hom_power_map(f, t1.base_op, t2.base_op);
  JoinHom g = JoinHom::compose(t2.q.projection(), fj);
  return factor_through(t1.q, g, t1.X);
}

HomFrame hom_frame(FssPtr H, LatticePtr L, size_t max_homs) {
  HomFrame out;
  out.H = H;
  out.L = L;
  out.homs = enumerate_join_homs(H->lat, L, max_homs);

  const int n = int(out.homs.size());
  std::vector<std::string> nodes;
  nodes.reserve(n);
  for (const auto& h : out.homs) nodes.push_back(tuple_label(*L, h.table));

  std::vector<std::pair<int, int>> rel;
  const int g = H->lat->size();
  for (int a = 0; a < n; ++a) {
    const auto& alpha = out.homs[a].table;
    for (int b = 0; b < n; ++b) {
      const auto& beta = out.homs[b].table;
      bool related = true;
      for (int x = 0; x < g && related; ++x)
        related = L->leq(beta[x], alpha[H->F[x]]);
      if (related) rel.emplace_back(a, b);
    }
  }
  out.frame = Frame::make_indexed(std::move(nodes), std::move(rel));
  return out;
}

int HomFrame::index_of_hom(const std::vector<int>& table) const {
  for (int i = 0; i < int(homs.size()); ++i)
    if (homs[i].table == table) return i;
  return -1;
}

FrameHom hom_frame_map_cod(const JoinHom& f, const HomFrame& hf1, const HomFrame& hf2) {
  if (!SupLattice::same(*f.src, *hf1.L) || !SupLattice::same(*f.dst, *hf2.L))
    fail(ErrorKind::CarrierMismatch, "J[H,f]: f does not connect the two hom-frames");
  if (!SupLattice::same(*hf1.H->lat, *hf2.H->lat))
    fail(ErrorKind::CarrierMismatch, "J[H,f]: hom-frames over different F-carriers");
  std::vector<int> table(hf1.homs.size());
  for (size_t a = 0; a < hf1.homs.size(); ++a) {
    std::vector<int> image(hf1.homs[a].table.size());
    for (size_t x = 0; x < image.size(); ++x) image[x] = f.table[hf1.homs[a].table[x]];
    int idx = hf2.index_of_hom(image);
    if (idx < 0)
      fail(ErrorKind::LawViolation, "J[H,f]: composite f∘α is not in the target hom set");
    table[a] = idx;
  }
  return FrameHom::checked(hf1.frame, hf2.frame, std::move(table));
}

FrameHom hom_frame_map_dom(const JoinHom& f, const HomFrame& hf2, const HomFrame& hf1) {
  if (!SupLattice::same(*f.src, *hf1.H->lat) || !SupLattice::same(*f.dst, *hf2.H->lat))
    fail(ErrorKind::CarrierMismatch, "J[f,L]: f does not connect the two F-carriers");
  if (!SupLattice::same(*hf1.L, *hf2.L))
    fail(ErrorKind::CarrierMismatch, "J[f,L]: hom-frames over different targets");
  if (!is_lax_morphism(f, *hf1.H, *hf2.H))
    fail(ErrorKind::NotLax, "J[f,L] requires a lax morphism");
  std::vector<int> table(hf2.homs.size());
  for (size_t a = 0; a < hf2.homs.size(); ++a) {
    std::vector<int> image(static_cast<size_t>(hf1.H->lat->size()));
    for (size_t x = 0; x < image.size(); ++x) image[x] = hf2.homs[a].table[f.table[x]];
    int idx = hf1.index_of_hom(image);
    if (idx < 0)
      fail(ErrorKind::LawViolation, "J[f,L]: composite α∘f is not in the target hom set");
    table[a] = idx;
  }
  return FrameHom::checked(hf2.frame, hf1.frame, std::move(table));
}

}  // namespace tense
