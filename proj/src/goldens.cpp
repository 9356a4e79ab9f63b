#include "tense/builtin_examples.hpp"

namespace tense::examples {

// Frozen renderings of the three example reports; `example n` regenerates
// the report from first principles and diffs against these byte-for-byte.

const std::string& golden_example1() {
  static const std::string s = R"GOLD(== example 1: hom-frame J[H,L] and μ ==
H: 5-element carrier, atoms a,b,c; F swaps b,c
L: 2-element chain

join-homs H.carrier -> L (5 maps, canonical order):
   | 0 a b c 1
f1 | 0 0 0 0 0
f7 | 0 0 1 1 1
f6 | 0 1 0 1 1
f5 | 0 1 1 0 1
f8 | 0 1 1 1 1
note: the source table lists 8 rows; rows f2,f3,f4 are not join-preserving
on this 5-element carrier and so are not nodes of J[H,L]:
  f2: join not preserved at {a,b}: f(1)='1' but f(a)∨f(b)='0'
  f3: join not preserved at {a,c}: f(1)='1' but f(a)∨f(c)='0'
  f4: join not preserved at {b,c}: f(1)='1' but f(b)∨f(c)='0'
relation S[H,L] (12 pairs): (f1,f1) (f7,f1) (f7,f7) (f6,f1) (f6,f5) (f5,f1) (f5,f6) (f8,f1) (f8,f7) (f8,f6) (f8,f5) (f8,f8)
μ values (rows x, columns f1 f7 f6 f5 f8):
  μ(0) = 0 0 0 0 0
  μ(a) = 0 0 1 1 1
  μ(b) = 0 1 0 1 1
  μ(c) = 0 1 1 0 1
  μ(1) = 0 1 1 1 1
μ is a join-homomorphism: pass
μ is an F-homomorphism: pass
μ is in E_≤: pass

-- free reading: the carrier that reproduces the source tables --
H': free join-semilattice on {a,b,c}; F' swaps b,c
join-homs H'.carrier -> L (8 maps; columns restricted to 0,a,b,c,1):
   | 0 a b c 1
f1 | 0 0 0 0 0
f2 | 0 0 0 1 1
f3 | 0 0 1 0 1
f7 | 0 0 1 1 1
f4 | 0 1 0 0 1
f6 | 0 1 0 1 1
f5 | 0 1 1 0 1
f8 | 0 1 1 1 1
relation S[H,L] (27 pairs): (f1,f1) (f2,f1) (f2,f3) (f3,f1) (f3,f2) (f7,f1) (f7,f2) (f7,f3) (f7,f7) (f4,f1) (f4,f4) (f6,f1) (f6,f3) (f6,f4) (f6,f5) (f5,f1) (f5,f2) (f5,f4) (f5,f6) (f8,f1) (f8,f2) (f8,f3) (f8,f7) (f8,f4) (f8,f6) (f8,f5) (f8,f8)
note: the source prints 26 relation pairs; the computed relation also
contains (f4,f4), which the source text itself derives (f4∘F = f4).
μ values (rows x, columns f1 f2 f3 f7 f4 f6 f5 f8):
  μ(0) = 0 0 0 0 0 0 0 0
  μ(a) = 0 0 0 0 1 1 1 1
  μ(b) = 0 0 1 1 0 0 1 1
  μ(c) = 0 1 0 1 0 1 0 1
  μ(a∨b) = 0 0 1 1 1 1 1 1
  μ(a∨c) = 0 1 0 1 1 1 1 1
  μ(b∨c) = 0 1 1 1 0 1 1 1
  μ(1) = 0 1 1 1 1 1 1 1
note: the source claims μ(1)(f_i)=1 for every i, but f1 is the constant-0
hom, so μ(1)(f1)=0.
μ' is a join-homomorphism: pass
μ' is an F-homomorphism: pass
μ' is in E_≤: pass
)GOLD";
  return s;
}

const std::string& golden_example2() {
  static const std::string s = R"GOLD(== example 2: frame operator L^J and ν ==
nodes (3): f2 f3 f4
relation (3): (f2,f3) (f3,f2) (f4,f4)
L: 2-element chain

L^J and the induced operator (rows in source α order):
   | f2 f3 f4 | F^J
α1 | 0 0 0  | α1
α2 | 1 0 0  | α3
α3 | 0 1 0  | α2
α4 | 0 0 1  | α4
α5 | 1 1 0  | α5
α6 | 1 0 1  | α7
α7 | 0 1 1  | α6
α8 | 1 1 1  | α8

ν node images: ν(f2)=(0,0,0,0,1,1,1,1), ν(f3)=(0,0,1,1,0,0,1,1), ν(f4)=(0,1,0,1,0,1,0,1)
f_i S f_k ⟺ ν(f_i) ρ' ν(f_k) on all 9 node pairs: pass
)GOLD";
  return s;
}

const std::string& golden_example3() {
  static const std::string s = R"GOLD(== example 3: tensor J⊗H and η ==
nodes (3): f2 f3 f4
relation (3): (f2,f3) (f3,f2) (f4,f4)
H: 5-element carrier, atoms a,b,c; F swaps b,c

indicator tables (x_{iS}, F(x)_{i=}, and their join):
              | x_{iS}   | F(x)_{i=} | join
0,f2          | (0,0,0)  | (0,0,0)   | (0,0,0)
0,f3          | (0,0,0)  | (0,0,0)   | (0,0,0)
0,f4          | (0,0,0)  | (0,0,0)   | (0,0,0)
a,f2          | (0,a,0)  | (a,0,0)   | (a,a,0)
a,f3          | (a,0,0)  | (0,a,0)   | (a,a,0)
a,f4          | (0,0,a)  | (0,0,a)   | (0,0,a)
b,f2          | (0,b,0)  | (c,0,0)   | (c,b,0)
b,f3          | (b,0,0)  | (0,c,0)   | (b,c,0)
b,f4          | (0,0,b)  | (0,0,c)   | (0,0,1)
c,f2          | (0,c,0)  | (b,0,0)   | (b,c,0)
c,f3          | (c,0,0)  | (0,b,0)   | (c,b,0)
c,f4          | (0,0,c)  | (0,0,b)   | (0,0,1)
1,f2          | (0,1,0)  | (1,0,0)   | (1,1,0)
1,f3          | (1,0,0)  | (0,1,0)   | (1,1,0)
1,f4          | (0,0,1)  | (0,0,1)   | (0,0,1)

J⊗H carrier (15 elements): [(0,0,0)] [(0,0,a)] [(0,0,1)] [(a,a,0)] [(a,a,a)] [(a,a,1)] [(b,c,0)] [(b,c,a)] [(b,c,1)] [(c,b,0)] [(c,b,a)] [(c,b,1)] [(1,1,0)] [(1,1,a)] [(1,1,1)]
(J⊗H)^J carrier size: 3375

η_H (columns f2 f3 f4):
  0 | [(0,0,0)] [(0,0,0)] [(0,0,0)]
  a | [(a,a,0)] [(a,a,0)] [(0,0,a)]
  b | [(b,c,0)] [(c,b,0)] [(0,0,1)]
  c | [(c,b,0)] [(b,c,0)] [(0,0,1)]
  1 | [(1,1,0)] [(1,1,0)] [(0,0,1)]
note: the source η table prints the b and c rows with their f2,f3 entries
transposed ([(c,b,0)] at (b,f2), [(b,c,0)] at (b,f3), and symmetrically
for c); the same transposition carries into its η∘F and F^J∘η tables.
A closure operator is increasing, and [(c,b,0)] is not above
b_{f2=} = (b,0,0), so the computed cells below stand:
  η(b) = [(b,c,0)] [(c,b,0)] [(0,0,1)]
  η(c) = [(c,b,0)] [(b,c,0)] [(0,0,1)]

η_H∘F (columns f2 f3 f4):
  0 | [(0,0,0)] [(0,0,0)] [(0,0,0)]
  a | [(a,a,0)] [(a,a,0)] [(0,0,a)]
  b | [(c,b,0)] [(b,c,0)] [(0,0,1)]
  c | [(b,c,0)] [(c,b,0)] [(0,0,1)]
  1 | [(1,1,0)] [(1,1,0)] [(0,0,1)]

F^J∘η_H (columns f2 f3 f4):
  0 | [(0,0,0)] [(0,0,0)] [(0,0,0)]
  a | [(a,a,0)] [(a,a,0)] [(0,0,a)]
  b | [(c,b,0)] [(b,c,0)] [(0,0,1)]
  c | [(b,c,0)] [(c,b,0)] [(0,0,1)]
  1 | [(1,1,0)] [(1,1,0)] [(0,0,1)]

F^J∘η_H = η_H∘F (tables match): pass
η is an F-homomorphism: pass
η is in E_≤: pass
)GOLD";
  return s;
}

}  // namespace tense::examples
