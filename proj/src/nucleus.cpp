#include "tense/nucleus.hpp"

#include <algorithm>
#include <unordered_map>

namespace tense {

namespace {

bool check_lax(const FSupLattice& H, const std::vector<int>& table) {
  for (int a = 0; a < H.lat->size(); ++a)
    if (!H.lat->leq(H.F[table[a]], table[H.F[a]])) return false;
  return true;
}

void check_monotone_increasing(const FSupLattice& H, const std::vector<int>& table,
                               const char* what) {
  const auto& L = *H.lat;
  for (int a = 0; a < L.size(); ++a) {
    if (!L.leq(a, table[a]))
      fail(ErrorKind::LawViolation, std::string(what) + ": operator is not increasing");
    for (int b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && !L.leq(table[a], table[b]))
        fail(ErrorKind::LawViolation, std::string(what) + ": operator is not monotone");
  }
}

}  // namespace

PairSet normalize_pairs(PairSet pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

PrenucleusFromPairs prenucleus_from_pairs(FssPtr H, const PairSet& X) {
  const auto& L = *H->lat;
  for (auto [c, d] : X) {
    L.check_element(c);
    L.check_element(d);
  }
  std::vector<int> table(L.size());
  for (int a = 0; a < L.size(); ++a) {
    int acc = a;
    for (auto [c, d] : X) {
      if (L.leq(d, a)) acc = L.join(acc, c);
      if (L.leq(c, a)) acc = L.join(acc, d);
    }
    table[a] = acc;
  }
  check_monotone_increasing(*H, table, "j[X]");

  PrenucleusFromPairs out;
  out.j.base = H;
  out.j.lax = check_lax(*H, table);
  out.j.table = std::move(table);

  out.pairs_f_closed = true;
  PairSet sorted = normalize_pairs(X);
  for (auto [c, d] : sorted) {
    std::pair<int, int> im{H->F[c], H->F[d]};
    if (!std::binary_search(sorted.begin(), sorted.end(), im)) {
      out.pairs_f_closed = false;
      break;
    }
  }
  return out;
}

Nucleus nucleus_closure(const Prenucleus& j) {
  const auto& L = *j.base->lat;
  std::vector<int> table(L.size());
  for (int a = 0; a < L.size(); ++a) {
    int cur = a;
    for (int next = j.table[cur]; next != cur; next = j.table[cur]) cur = next;
    table[a] = cur;
  }
  check_monotone_increasing(*j.base, table, "n(j)");
  for (int a = 0; a < L.size(); ++a)
    if (table[table[a]] != table[a])
      fail(ErrorKind::LawViolation, "n(j) is not idempotent");

  Nucleus n;
  n.base = j.base;
  n.lax = check_lax(*j.base, table);
  n.table = std::move(table);
  if (j.lax && !n.lax)
    fail(ErrorKind::LawViolation,
         "closure of a lax prenucleus failed the lax inequality (falsification)");
  return n;
}

Nucleus identity_nucleus(FssPtr H) {
  std::vector<int> t(H->lat->size());
  for (int x = 0; x < H->lat->size(); ++x) t[x] = x;
  return Nucleus{std::move(H), std::move(t), true};
}

Quotient quotient(FssPtr H, const Nucleus& n) {
  if (!SupLattice::same(*H->lat, *n.base->lat))
    fail(ErrorKind::CarrierMismatch, "nucleus base does not match quotient base");
  const auto& L = *H->lat;

  Quotient q;
  q.base = H;
  q.closure = n.table;
  q.lax = n.lax;

  std::vector<int> members;
  for (int a = 0; a < L.size(); ++a)
    if (n.table[a] == a) members.push_back(a);
  q.carrier = sublattice_by_closure(L, members, n.table, "[", "]");

  q.proj.assign(L.size(), -1);
  std::vector<int> pos(L.size(), -1);
  for (int i = 0; i < int(members.size()); ++i) pos[members[i]] = i;
  for (int a = 0; a < L.size(); ++a) q.proj[a] = pos[n.table[a]];
  q.rep = members;

  q.inducedF.resize(members.size());
  for (int u = 0; u < int(members.size()); ++u)
    q.inducedF[u] = pos[n.table[H->F[members[u]]]];

  // Sup-congruence law: the projection preserves joins onto the carrier.
  for (int a = 0; a < L.size(); ++a)
    for (int b = a; b < L.size(); ++b)
      if (q.proj[L.join(a, b)] != q.carrier->join(q.proj[a], q.proj[b]))
        fail(ErrorKind::LawViolation, "projection does not preserve joins");

  if (n.lax) {
    const auto& C = *q.carrier;
    // quotient carrier is an F-sup-semilattice
    for (int u = 0; u < C.size(); ++u)
      for (int v = u; v < C.size(); ++v)
        if (q.inducedF[C.join(u, v)] != C.join(q.inducedF[u], q.inducedF[v]))
          fail(ErrorKind::LawViolation, "induced operator does not preserve joins");
    if (q.inducedF[C.bottom()] != C.bottom())
      fail(ErrorKind::LawViolation, "induced operator does not preserve bottom");
    // projection is a homomorphism of pwos
    for (int a = 0; a < L.size(); ++a)
      if (q.proj[H->F[a]] != q.inducedF[q.proj[a]])
        fail(ErrorKind::LawViolation, "projection is not an F-homomorphism");
    // inclusion of fixpoints: lax and condition (1)
    for (int u = 0; u < int(members.size()); ++u) {
      if (!L.leq(H->F[members[u]], members[q.inducedF[u]]))
        fail(ErrorKind::LawViolation, "inclusion of fixpoints is not lax");
      for (int v = 0; v < int(members.size()); ++v)
        if (L.leq(H->F[members[u]], members[v]) &&
            !q.carrier->leq(q.inducedF[u], v))
          fail(ErrorKind::LawViolation, "inclusion fails condition (1)");
    }
  }
  return q;
}

JoinHom factor_through(const Quotient& q, const JoinHom& g, const PairSet& X) {
  if (!SupLattice::same(*g.src, *q.base->lat))
    fail(ErrorKind::CarrierMismatch, "factor_through: g's source is not the quotient base");
  for (auto [c, d] : X)
    if (g.table[c] != g.table[d])
      fail(ErrorKind::NotConstantOnX,
           "g('" + g.src->label(c) + "') != g('" + g.src->label(d) + "')");
  for (int a = 0; a < g.src->size(); ++a)
    if (g.table[q.closure[a]] != g.table[a])
      fail(ErrorKind::FiberConflict,
           "g not constant on the fiber of '" + g.src->label(a) +
               "' (law violation: factorization impossible)");
  std::vector<int> table(q.rep.size());
  for (int u = 0; u < int(q.rep.size()); ++u) table[u] = g.table[q.rep[u]];
  return JoinHom::checked(q.carrier, g.dst, std::move(table));
}

Congruence nucleus_to_congruence(const Nucleus& n) {
  const auto& L = *n.base->lat;
  std::vector<int> block(L.size());
  std::unordered_map<int, int> least_of_class;
  for (int a = 0; a < L.size(); ++a) {
    auto [it, fresh] = least_of_class.try_emplace(n.table[a], a);
    block[a] = it->second;
  }
  Congruence out{n.base, std::move(block), false};
  out.f_congruence = true;
  for (int a = 0; a < L.size() && out.f_congruence; ++a)
    for (int b = 0; b < L.size(); ++b)
      if (out.block_of[a] == out.block_of[b] &&
          out.block_of[n.base->F[a]] != out.block_of[n.base->F[b]]) {
        out.f_congruence = false;
        break;
      }
  return out;
}

Nucleus congruence_to_nucleus(FssPtr H, const std::vector<int>& block_of) {
  const auto& L = *H->lat;
  if (int(block_of.size()) != L.size())
    fail(ErrorKind::ForeignElement, "partition size does not match carrier");

  // join-closure of the congruence: a θ b implies (a∨c) θ (b∨c); pairs of
  // related pairs follow by transitivity, families by finite induction.
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (block_of[a] != block_of[b]) continue;
      for (int c = 0; c < L.size(); ++c)
        if (block_of[L.join(a, c)] != block_of[L.join(b, c)])
          fail(ErrorKind::NotACongruence,
               "blocks of '" + L.label(a) + "' θ '" + L.label(b) +
                   "' break join closure at '" + L.label(c) + "'");
    }

  std::vector<int> table(L.size());
  for (int x = 0; x < L.size(); ++x) {
    int acc = x;
    for (int y = 0; y < L.size(); ++y)
      if (block_of[y] == block_of[x]) acc = L.join(acc, y);
    table[x] = acc;
  }
  check_monotone_increasing(*H, table, "j_θ");
  for (int x = 0; x < L.size(); ++x)
    if (table[table[x]] != table[x])
      fail(ErrorKind::NotACongruence, "class joins do not stay in class");

  Nucleus n;
  n.base = H;
  n.lax = check_lax(*H, table);
  n.table = std::move(table);
  return n;
}

}  // namespace tense
