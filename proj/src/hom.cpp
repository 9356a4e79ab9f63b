#include "tense/hom.hpp"

#include <algorithm>
#include <functional>

namespace tense {

namespace {

void require_same(const SupLattice& a, const SupLattice& b, const char* what) {
  if (!SupLattice::same(a, b))
    fail(ErrorKind::CarrierMismatch, std::string("carrier mismatch: ") + what);
}

}  // namespace

JoinHom JoinHom::checked(LatticePtr src, LatticePtr dst, std::vector<int> table) {
  if (int(table.size()) != src->size())
    fail(ErrorKind::ForeignElement, "hom table size does not match source carrier");
  for (int v : table) dst->check_element(v);
  if (auto w = join_hom_witness(table, *src, *dst))
    fail(ErrorKind::NotAJoinHom, *w);
  return JoinHom{std::move(src), std::move(dst), std::move(table)};
}

JoinHom JoinHom::trusted(LatticePtr src, LatticePtr dst, std::vector<int> table) {
  return JoinHom{std::move(src), std::move(dst), std::move(table)};
}

JoinHom JoinHom::identity(LatticePtr lat) {
  std::vector<int> t(lat->size());
  for (int x = 0; x < lat->size(); ++x) t[x] = x;
  return JoinHom{lat, lat, std::move(t)};
}

JoinHom JoinHom::compose(const JoinHom& g, const JoinHom& f) {
  require_same(*f.dst, *g.src, "composition g∘f needs dst(f) = src(g)");
  std::vector<int> t(f.table.size());
  for (size_t x = 0; x < f.table.size(); ++x) t[x] = g.table[f.table[x]];
  return JoinHom{f.src, g.dst, std::move(t)};
}

FSupLattice FSupLattice::checked(LatticePtr lat, std::vector<int> F) {
  if (int(F.size()) != lat->size())
    fail(ErrorKind::ForeignElement, "operator table size does not match carrier");
  for (int v : F) lat->check_element(v);
  if (auto w = join_hom_witness(F, *lat, *lat))
    fail(ErrorKind::NotAJoinHom, "operator F is not join-preserving: " + *w);
  return FSupLattice{std::move(lat), std::move(F)};
}

FSupLattice FSupLattice::identity_operator(LatticePtr lat) {
  std::vector<int> t(lat->size());
  for (int x = 0; x < lat->size(); ++x) t[x] = x;
  return FSupLattice{std::move(lat), std::move(t)};
}

std::optional<std::string> join_hom_witness(std::span<const int> f, const SupLattice& G,
                                            const SupLattice& L) {
  if (f[G.bottom()] != L.bottom())
    return "bottom '" + G.label(G.bottom()) + "' maps to '" + L.label(f[G.bottom()]) +
           "', not to bottom";
  const int n = G.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int lhs = f[G.join(x, y)];
      int rhs = L.join(f[x], f[y]);
      if (lhs != rhs)
        return "join not preserved at {" + G.label(x) + "," + G.label(y) + "}: f(" +
               G.label(G.join(x, y)) + ")='" + L.label(lhs) + "' but f(" + G.label(x) +
               ")∨f(" + G.label(y) + ")='" + L.label(rhs) + "'";
    }
  return std::nullopt;
}

bool is_join_hom(std::span<const int> f, const SupLattice& G, const SupLattice& L) {
  if (int(f.size()) != G.size())
    fail(ErrorKind::ForeignElement, "candidate table size does not match source");
  for (int v : f) L.check_element(v);
  return !join_hom_witness(f, G, L).has_value();
}

bool is_lax_morphism(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2) {
  require_same(*f.src, *H1.lat, "lax check: source");
  require_same(*f.dst, *H2.lat, "lax check: target");
  for (int a = 0; a < H1.lat->size(); ++a)
    if (!H2.lat->leq(H2.F[f.table[a]], f.table[H1.F[a]])) return false;
  return true;
}

bool is_f_homomorphism(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2) {
  require_same(*f.src, *H1.lat, "homomorphism check: source");
  require_same(*f.dst, *H2.lat, "homomorphism check: target");
  for (int a = 0; a < H1.lat->size(); ++a)
    if (H2.F[f.table[a]] != f.table[H1.F[a]]) return false;
  return true;
}

bool is_order_embedding(const JoinHom& f) {
  const int n = f.src->size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.src->leq(a, b) != f.dst->leq(f.table[a], f.table[b])) return false;
  return true;
}

bool is_in_E_leq(const JoinHom& f, const FSupLattice& H1, const FSupLattice& H2) {
  if (!is_lax_morphism(f, H1, H2)) return false;
  if (!is_order_embedding(f)) return false;
  const int n = H1.lat->size();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      if (H2.lat->leq(H2.F[f.table[a]], f.table[a2]) && !H1.lat->leq(H1.F[a], a2))
        return false;
  return true;
}

namespace {

// Backtracking enumerator over join-irreducibles of G. A partial assignment
// v on a prefix of the irreducibles (topologically ordered) extends to
// f(x) = ⋁{v(j) | j ≤ x}; the candidate is a join-hom iff every pair check
// f(x∨y) = f(x)∨f(y) passes, and v is recovered as f's restriction exactly
// when the monotonicity constraints among irreducibles hold.
struct HomSearch {
  const SupLattice& G;
  const SupLattice& L;
  std::vector<int> ji;                    // topo order
  std::vector<std::vector<int>> ji_below; // per element: irreducible positions below it
  struct PairCheck { int x, y, xy; };
  std::vector<std::vector<PairCheck>> checks_at;  // keyed by last-needed ji position
  std::vector<int> v;                     // current assignment (ji position → L element)
  std::function<bool(std::vector<int>&&)> emit;

  HomSearch(const SupLattice& g, const SupLattice& l) : G(g), L(l) {
    ji = G.join_irreducibles();
    std::vector<int> pos_of(G.size(), -1);
    for (int p = 0; p < int(ji.size()); ++p) pos_of[ji[p]] = p;
    ji_below.resize(G.size());
    for (int x = 0; x < G.size(); ++x)
      for (int p = 0; p < int(ji.size()); ++p)
        if (G.leq(ji[p], x)) ji_below[x].push_back(p);

    checks_at.resize(ji.size() + 1);
    for (int x = 0; x < G.size(); ++x)
      for (int y = x + 1; y < G.size(); ++y) {
        int xy = G.join(x, y);
        int last = -1;
        for (auto* set : {&ji_below[x], &ji_below[y], &ji_below[xy]})
          for (int p : *set) last = std::max(last, p);
        checks_at[last + 1].push_back({x, y, xy});
      }
    v.assign(ji.size(), -1);
  }

  int extend(int x) const {
    int acc = L.bottom();
    for (int p : ji_below[x]) acc = L.join(acc, v[p]);
    return acc;
  }

  bool run_checks(int upto) const {
    for (const auto& c : checks_at[upto])
      if (extend(c.xy) != L.join(extend(c.x), extend(c.y))) return false;
    return true;
  }

  bool recurse(int p) {
    if (p == int(ji.size())) {
      std::vector<int> table(G.size());
      for (int x = 0; x < G.size(); ++x) table[x] = extend(x);
      return emit(std::move(table));
    }
    // monotone lower bound from assigned irreducibles below ji[p]
    int lo = L.bottom();
    for (int q = 0; q < p; ++q)
      if (G.leq(ji[q], ji[p])) lo = L.join(lo, v[q]);
    for (int c = 0; c < L.size(); ++c) {
      if (!L.leq(lo, c)) continue;
      v[p] = c;
      if (run_checks(p + 1)) {
        if (!recurse(p + 1)) return false;
      }
    }
    v[p] = -1;
    return true;
  }
};

}  // namespace

std::vector<JoinHom> enumerate_join_homs(LatticePtr G, LatticePtr L, size_t max_count) {
  std::vector<std::vector<int>> tables;
  HomSearch search(*G, *L);
  search.emit = [&](std::vector<int>&& t) {
    tables.push_back(std::move(t));
    if (tables.size() > max_count)
      fail(ErrorKind::CarrierTooLarge,
           "hom set exceeds " + std::to_string(max_count) + " maps");
    return true;
  };
  search.recurse(0);
  std::sort(tables.begin(), tables.end());
  std::vector<JoinHom> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(JoinHom{G, L, std::move(t)});
  return out;
}

size_t count_join_homs(const SupLattice& G, const SupLattice& L, size_t abort_above) {
  size_t count = 0;
  HomSearch search(G, L);
  search.emit = [&](std::vector<int>&&) { return ++count <= abort_above; };
  search.recurse(0);
  return count;
}

}  // namespace tense
