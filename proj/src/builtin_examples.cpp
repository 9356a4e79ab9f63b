#include "tense/builtin_examples.hpp"

#include <sstream>

#include "tense/adjunctions.hpp"
#include "tense/constructions.hpp"
#include "tense/io.hpp"

namespace tense::examples {

LatticePtr diamond5() {
  static LatticePtr l = SupLattice::validate(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
  return l;
}

FssPtr diamond5_swap() {
  static FssPtr h = [] {
    LatticePtr g = diamond5();
    // 0→0, a→a, b→c, c→b, 1→1
    return std::make_shared<const FSupLattice>(
        FSupLattice::checked(g, {0, 1, 3, 2, 4}));
  }();
  return h;
}

LatticePtr chain2() {
  static LatticePtr l = SupLattice::validate({"0", "1"}, {{"0", "1"}});
  return l;
}

FramePtr frame_j3() {
  static FramePtr j = Frame::make({"f2", "f3", "f4"},
                                  {{"f2", "f3"}, {"f3", "f2"}, {"f4", "f4"}});
  return j;
}

LatticePtr cube8() {
  static LatticePtr l = SupLattice::validate(
      {"0", "a", "b", "c", "a∨b", "a∨c", "b∨c", "1"},
      {{"0", "a"},
       {"0", "b"},
       {"0", "c"},
       {"a", "a∨b"},
       {"b", "a∨b"},
       {"a", "a∨c"},
       {"c", "a∨c"},
       {"b", "b∨c"},
       {"c", "b∨c"},
       {"a∨b", "1"},
       {"a∨c", "1"},
       {"b∨c", "1"}});
  return l;
}

FssPtr cube8_swap() {
  static FssPtr h = [] {
    LatticePtr g = cube8();
    // the automorphism induced by swapping the generators b and c
    std::vector<int> F(8);
    F[g->index_of("0")] = g->index_of("0");
    F[g->index_of("a")] = g->index_of("a");
    F[g->index_of("b")] = g->index_of("c");
    F[g->index_of("c")] = g->index_of("b");
    F[g->index_of("a∨b")] = g->index_of("a∨c");
    F[g->index_of("a∨c")] = g->index_of("a∨b");
    F[g->index_of("b∨c")] = g->index_of("b∨c");
    F[g->index_of("1")] = g->index_of("1");
    return std::make_shared<const FSupLattice>(FSupLattice::checked(g, std::move(F)));
  }();
  return h;
}

const std::vector<std::string>& cube_hom_source_labels() {
  static const std::vector<std::string> v = {"f1", "f2", "f3", "f7",
                                             "f4", "f6", "f5", "f8"};
  return v;
}

const std::vector<std::string>& alpha_source_labels() {
  static const std::vector<std::string> v = {"α1", "α4", "α3", "α7",
                                             "α2", "α6", "α5", "α8"};
  return v;
}

namespace {

std::string verdict_line(const std::string& what, bool pass) {
  return what + ": " + (pass ? "pass" : "FAIL") + "\n";
}

std::string rho_pairs(const HomFrame& hf, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "relation S[H,L] (" << hf.frame->rel().size() << " pairs):";
  for (auto [a, b] : hf.frame->rel()) out << " (" << names[a] << "," << names[b] << ")";
  out << "\n";
  return out.str();
}

std::string mu_table(const HomFrame& hf, const MuMap& m,
                     const std::vector<std::string>& names) {
  const auto& G = *hf.H->lat;
  std::ostringstream out;
  out << "μ values (rows x, columns";
  for (const auto& n : names) out << " " << n;
  out << "):\n";
  for (int x = 0; x < G.size(); ++x) {
    out << "  μ(" << G.label(x) << ") =";
    for (size_t a = 0; a < hf.homs.size(); ++a)
      out << " " << hf.L->label(m.codomain.power.at(m.hom.table[x], int(a)));
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string report_example1() {
  std::ostringstream out;
  out << "== example 1: hom-frame J[H,L] and μ ==\n";
  FssPtr H = diamond5_swap();
  LatticePtr L = chain2();
  out << "H: 5-element carrier, atoms a,b,c; F swaps b,c\nL: 2-element chain\n\n";

  HomFrame hf = hom_frame(H, L);
  // canonical order of the genuine homs, tagged with the source-table labels
  std::vector<std::string> names;
  {
    static const std::vector<std::pair<std::vector<int>, std::string>> tagged = {
        {{0, 0, 0, 0, 0}, "f1"}, {{0, 0, 0, 1, 1}, "f2"}, {{0, 0, 1, 0, 1}, "f3"},
        {{0, 1, 0, 0, 1}, "f4"}, {{0, 1, 1, 0, 1}, "f5"}, {{0, 1, 0, 1, 1}, "f6"},
        {{0, 0, 1, 1, 1}, "f7"}, {{0, 1, 1, 1, 1}, "f8"}};
    for (const auto& h : hf.homs) {
      std::string name = "?";
      for (const auto& [tab, n] : tagged)
        if (tab == h.table) name = n;
      names.push_back(name);
    }
  }
  out << "join-homs H.carrier -> L (" << hf.homs.size() << " maps, canonical order):\n"
      << render_hom_table(hf, names);
  out << "note: the source table lists 8 rows; rows f2,f3,f4 are not join-preserving\n"
         "on this 5-element carrier and so are not nodes of J[H,L]:\n";
  for (const auto& [tab, name] :
       std::vector<std::pair<std::vector<int>, std::string>>{
           {{0, 0, 0, 1, 1}, "f2"}, {{0, 0, 1, 0, 1}, "f3"}, {{0, 1, 0, 0, 1}, "f4"}}) {
    auto w = join_hom_witness(tab, *H->lat, *L);
    out << "  " << name << ": " << (w ? *w : std::string("unexpectedly valid")) << "\n";
  }
  out << rho_pairs(hf, names);

  MuMap m = mu(hf);
  out << mu_table(hf, m, names);
  FrameOp& cod = m.codomain;
  out << verdict_line("μ is a join-homomorphism", true);  // construction-checked
  out << verdict_line("μ is an F-homomorphism", is_f_homomorphism(m.hom, *H, *cod.fss));
  out << verdict_line("μ is in E_≤", is_in_E_leq(m.hom, *H, *cod.fss));

  out << "\n-- free reading: the carrier that reproduces the source tables --\n";
  FssPtr Hc = cube8_swap();
  out << "H': free join-semilattice on {a,b,c}; F' swaps b,c\n";
  HomFrame hfc = hom_frame(Hc, L);
  const auto& cnames = cube_hom_source_labels();
  out << "join-homs H'.carrier -> L (" << hfc.homs.size()
      << " maps; columns restricted to 0,a,b,c,1):\n";
  {
    const auto& G = *Hc->lat;
    std::vector<int> cols = {G.index_of("0"), G.index_of("a"), G.index_of("b"),
                             G.index_of("c"), G.index_of("1")};
    out << "   | 0 a b c 1\n";
    for (size_t i = 0; i < hfc.homs.size(); ++i) {
      out << cnames[i] << " |";
      for (int c : cols) out << " " << L->label(hfc.homs[i].table[c]);
      out << "\n";
    }
  }
  out << rho_pairs(hfc, cnames);
  out << "note: the source prints 26 relation pairs; the computed relation also\n"
         "contains (f4,f4), which the source text itself derives (f4∘F = f4).\n";
  MuMap mc = mu(hfc);
  out << mu_table(hfc, mc, cnames);
  out << "note: the source claims μ(1)(f_i)=1 for every i, but f1 is the constant-0\n"
         "hom, so μ(1)(f1)=0.\n";
  out << verdict_line("μ' is a join-homomorphism", true);
  out << verdict_line("μ' is an F-homomorphism",
                      is_f_homomorphism(mc.hom, *Hc, *mc.codomain.fss));
  out << verdict_line("μ' is in E_≤", is_in_E_leq(mc.hom, *Hc, *mc.codomain.fss));
  return out.str();
}

std::string report_example2() {
  std::ostringstream out;
  out << "== example 2: frame operator L^J and ν ==\n";
  FramePtr J = frame_j3();
  LatticePtr L = chain2();
  out << render_frame(*J) << "L: 2-element chain\n\n";

  FrameOp p = frame_operator(L, J);
  const auto& alpha = alpha_source_labels();
  // canonical index of α1..α8 in source order
  static const int by_source[8] = {0, 4, 2, 1, 6, 5, 3, 7};
  out << "L^J and the induced operator (rows in source α order):\n";
  out << "   | f2 f3 f4 | F^J\n";
  for (int r = 0; r < 8; ++r) {
    int k = by_source[r];
    out << alpha[k] << " |";
    for (int i = 0; i < 3; ++i) out << " " << L->label(p.power.at(k, i));
    out << "  | " << alpha[p.fss->F[k]] << "\n";
  }

  HomFrame hf = hom_frame(p.fss, L);
  FrameHom n = nu(p, hf);
  out << "\nν node images: ";
  for (int i = 0; i < J->size(); ++i) {
    if (i) out << ", ";
    out << "ν(" << J->node(i) << ")=" << hf.frame->node(n.table[i]);
  }
  out << "\n";
  bool reflect = true;
  for (int i = 0; i < J->size(); ++i)
    for (int k = 0; k < J->size(); ++k)
      if (J->related(i, k) != hf.frame->related(n.table[i], n.table[k])) reflect = false;
  out << verdict_line("f_i S f_k ⟺ ν(f_i) ρ' ν(f_k) on all 9 node pairs", reflect);
  return out.str();
}

std::string report_example3() {
  std::ostringstream out;
  out << "== example 3: tensor J⊗H and η ==\n";
  FramePtr J = frame_j3();
  FssPtr H = diamond5_swap();
  out << render_frame(*J) << "H: 5-element carrier, atoms a,b,c; F swaps b,c\n\n";

  const auto& G = *H->lat;
  TupleSpace sp{H->lat, J->size()};

  out << "indicator tables (x_{iS}, F(x)_{i=}, and their join):\n";
  out << "              | x_{iS}   | F(x)_{i=} | join\n";
  for (int x = 0; x < G.size(); ++x)
    for (int i = 0; i < J->size(); ++i) {
      Tuple rel = indicator(G, x, i, *J);
      Tuple eq = indicator_eq(G, H->F[x], i, J->size());
      Tuple jn = sp.join(rel, eq);
      std::ostringstream tag;
      tag << G.label(x) << "," << J->node(i);
      std::string t = tag.str();
      t.resize(13, ' ');
      out << t << " | " << tuple_label(G, rel) << "  | " << tuple_label(G, eq)
          << "   | " << tuple_label(G, jn) << "\n";
    }

  Tensor t = tensor(J, H);
  const auto& C = *t.carrier();
  out << "\nJ⊗H carrier (" << C.size() << " elements):";
  for (int u = 0; u < C.size(); ++u) out << " " << C.label(u);
  out << "\n(J⊗H)^J carrier size: ";
  {
    int64_t sz = 1;
    for (int i = 0; i < J->size(); ++i) sz *= C.size();
    out << sz << "\n";
  }

  EtaMap e = eta(t);
  auto eta_table = [&](const char* head, auto value_of) {
    std::ostringstream tb;
    tb << head << "\n";
    for (int x = 0; x < G.size(); ++x) {
      tb << "  " << G.label(x) << " |";
      for (int i = 0; i < J->size(); ++i) tb << " " << C.label(value_of(x, i));
      tb << "\n";
    }
    return tb.str();
  };
  out << "\n" << eta_table("η_H (columns f2 f3 f4):", [&](int x, int i) {
    return e.table[x][i];
  });
  out << "note: the source η table prints the b and c rows with their f2,f3 entries\n"
         "transposed ([(c,b,0)] at (b,f2), [(b,c,0)] at (b,f3), and symmetrically\n"
         "for c); the same transposition carries into its η∘F and F^J∘η tables.\n"
         "A closure operator is increasing, and [(c,b,0)] is not above\n"
         "b_{f2=} = (b,0,0), so the computed cells below stand:\n"
         "  η(b) = [(b,c,0)] [(c,b,0)] [(0,0,1)]\n"
         "  η(c) = [(c,b,0)] [(b,c,0)] [(0,0,1)]\n";
  out << "\n" << eta_table("η_H∘F (columns f2 f3 f4):", [&](int x, int i) {
    return e.table[H->F[x]][i];
  });
  auto fj_of_eta = [&](int x, int i) {
    int acc = C.bottom();
    for (int k : J->successors(i)) acc = C.join(acc, e.table[x][k]);
    return acc;
  };
  out << "\n" << eta_table("F^J∘η_H (columns f2 f3 f4):", fj_of_eta);

  bool hom = true;
  for (int x = 0; x < G.size(); ++x)
    for (int i = 0; i < J->size(); ++i)
      if (fj_of_eta(x, i) != e.table[H->F[x]][i]) hom = false;
  out << "\n" << verdict_line("F^J∘η_H = η_H∘F (tables match)", hom);

  FrameOp pow = frame_operator(t.carrier(), J);
  JoinHom eh = eta_as_hom(e, pow);
  out << verdict_line("η is an F-homomorphism", is_f_homomorphism(eh, *H, *pow.fss));
  out << verdict_line("η is in E_≤", is_in_E_leq(eh, *H, *pow.fss));
  return out.str();
}

}  // namespace tense::examples
