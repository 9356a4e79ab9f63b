#include <doctest.h>

#include "oracles.hpp"
#include "tense/builtin_examples.hpp"
#include "tense/constructions.hpp"
#include "tense/nucleus.hpp"
#include "tense/random_instances.hpp"

using namespace tense;

TEST_CASE("j[X] basics") {
  FssPtr h = examples::diamond5_swap();
  auto empty = prenucleus_from_pairs(h, {});
  for (int a = 0; a < 5; ++a) CHECK(empty.j.table[a] == a);
  CHECK(empty.j.lax);
  CHECK(empty.pairs_f_closed);

  // a reflexive pair contributes nothing
  auto refl = prenucleus_from_pairs(h, {{2, 2}});
  for (int a = 0; a < 5; ++a) CHECK(refl.j.table[a] == a);
}

TEST_CASE("closure of the tensor prenucleus has 15 fixpoints") {
  Tensor t = tensor(examples::frame_j3(), examples::diamond5_swap());
  CHECK(t.carrier()->size() == 15);
  // the generated pair list has 15 entries before set semantics
  CHECK(t.X.size() == 13);  // three coincide under set semantics
  // (F×F)(X) ⊆ X holds on this instance: the f2↔f3 symmetry of S maps the
  // pair set onto itself (checked, not assumed)
  CHECK(t.pairs_f_closed);
  CHECK(t.j_lax);
}

TEST_CASE("the pair-closure hypothesis can fail") {
  // a one-arrow frame breaks the symmetry: F^J sends the pair for x = a at
  // node t0 outside the pair set
  FramePtr j = Frame::make({"t0", "t1"}, {{"t0", "t1"}});
  Tensor t = tensor(j, examples::diamond5_swap());
  CHECK_FALSE(t.pairs_f_closed);
}

TEST_CASE("nucleus closure equals the meet-of-fixpoints formula") {
  InstanceGen gen(5150);
  for (int trial = 0; trial < 1000; ++trial) {
    FssPtr h = gen.fss(6);
    PairSet x = gen.pair_set(*h->lat, 4);
    auto pre = prenucleus_from_pairs(h, x);
    Nucleus n = nucleus_closure(pre.j);
    auto expect = oracles::closure_by_meet_formula(*h->lat, pre.j.table);
    CHECK(n.table == expect);
    // idempotent, increasing, monotone, same fixpoints as j[X]
    for (int a = 0; a < h->lat->size(); ++a) {
      CHECK(n.table[n.table[a]] == n.table[a]);
      CHECK(h->lat->leq(a, n.table[a]));
      CHECK((pre.j.table[a] == a) == (n.table[a] == a));
    }
  }
}

TEST_CASE("lax prenuclei have lax closures and lawful quotients") {
  InstanceGen gen(901);
  for (int trial = 0; trial < 200; ++trial) {
    FssPtr h = gen.fss(6);
    PairSet x = f_close_pairs(*h, gen.pair_set(*h->lat, 4));
    auto pre = prenucleus_from_pairs(h, x);
    CHECK(pre.pairs_f_closed);
    CHECK(pre.j.lax);  // (F×F)(X) ⊆ X forces j[X] to be lax
    Nucleus n = nucleus_closure(pre.j);
    CHECK(n.lax);
    // quotient() verifies the quotient-structure laws internally when lax
    Quotient q = quotient(h, n);
    CHECK(q.lax);
    CHECK(int(q.rep.size()) == int(oracles::fixpoints_of(n.table).size()));
  }
}

TEST_CASE("quotient by the identity nucleus is the original") {
  FssPtr h = examples::diamond5_swap();
  Quotient q = quotient(h, identity_nucleus(h));
  CHECK(q.carrier->size() == h->lat->size());
  for (int a = 0; a < h->lat->size(); ++a) {
    CHECK(q.proj[a] == a);
    CHECK(q.inducedF[a] == h->F[a]);
  }
}

TEST_CASE("factor_through") {
  FssPtr h = examples::diamond5_swap();
  // identify b and c
  PairSet x = {{2, 3}};
  auto pre = prenucleus_from_pairs(h, x);
  Nucleus n = nucleus_closure(pre.j);
  Quotient q = quotient(h, n);

  // the projection factors to the identity on the quotient
  JoinHom gbar = factor_through(q, q.projection(), x);
  for (int u = 0; u < q.carrier->size(); ++u) CHECK(gbar.table[u] == u);

  // a hom that is not constant on X is rejected
  JoinHom id = JoinHom::identity(h->lat);
  CHECK_THROWS_AS(factor_through(q, id, x), Error);
  try {
    factor_through(q, id, x);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConstantOnX);
  }
}

TEST_CASE("factorization identity on random instances") {
  InstanceGen gen(424242);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    FssPtr h = gen.fss(5);
    PairSet x = gen.pair_set(*h->lat, 3);
    auto pre = prenucleus_from_pairs(h, x);
    Nucleus n = nucleus_closure(pre.j);
    Quotient q = quotient(h, n);
    // pick a random hom constant on X
    LatticePtr target = gen.lattice(5);
    auto homs = enumerate_join_homs(h->lat, target);
    std::vector<JoinHom> constant;
    for (auto& g : homs) {
      bool ok = true;
      for (auto [c, d] : x) ok = ok && g.table[c] == g.table[d];
      if (ok) constant.push_back(std::move(g));
    }
    if (constant.empty()) continue;
    JoinHom& g = constant[gen.below(int(constant.size()))];
    JoinHom gbar = factor_through(q, g, x);
    for (int a = 0; a < h->lat->size(); ++a)
      CHECK(gbar.table[q.proj[a]] == g.table[a]);  // ḡ ∘ n = g
    // uniqueness through surjectivity: any map agreeing on all projections
    // IS gbar elementwise, which the previous loop already pins down.
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("nucleus and congruence round trips") {
  FssPtr h = examples::diamond5_swap();

  Nucleus id = identity_nucleus(h);
  Congruence disc = nucleus_to_congruence(id);
  for (int a = 0; a < 5; ++a) CHECK(disc.block_of[a] == a);
  CHECK(congruence_to_nucleus(h, disc.block_of).table == id.table);

  // one block ↔ constant-top nucleus
  std::vector<int> indiscrete(5, 0);
  Nucleus top = congruence_to_nucleus(h, indiscrete);
  for (int a = 0; a < 5; ++a) CHECK(top.table[a] == h->lat->top());

  // a partition that breaks join closure
  std::vector<int> bad = {0, 0, 2, 3, 4};  // {0,a} in one block
  CHECK_THROWS_AS(congruence_to_nucleus(h, bad), Error);
  try {
    congruence_to_nucleus(h, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACongruence);
  }

  InstanceGen gen(31337);
  for (int trial = 0; trial < 200; ++trial) {
    FssPtr g = gen.fss(6);
    PairSet x = f_close_pairs(*g, gen.pair_set(*g->lat, 4));
    Nucleus n = nucleus_closure(prenucleus_from_pairs(g, x).j);
    Congruence th = nucleus_to_congruence(n);
    CHECK(th.f_congruence);
    Nucleus back = congruence_to_nucleus(g, th.block_of);
    CHECK(back.table == n.table);
  }
}

TEST_CASE("tensor quotient matches example 3's congruence size") {
  Tensor t = tensor(examples::frame_j3(), examples::diamond5_swap());
  Nucleus n{t.base_op.fss, [&] {
              std::vector<int> tab(static_cast<size_t>(t.base_op.carrier()->size()));
              for (int a = 0; a < t.base_op.carrier()->size(); ++a)
                tab[a] = t.q.closure[a];
              return tab;
            }(),
            t.q.lax};
  Congruence th = nucleus_to_congruence(n);
  std::vector<int> blocks = th.block_of;
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  CHECK(blocks.size() == 15);  // 15 classes on the 125-element cube
}
