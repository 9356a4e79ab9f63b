#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "tense/frame.hpp"
#include "tense/hom.hpp"
#include "tense/lattice.hpp"

namespace tense {

using Tuple = std::vector<int>;

struct TupleHash {
  size_t operator()(const Tuple& t) const {
    size_t h = 1469598103934665603ull;
    for (int v : t) {
      h ^= size_t(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Pointwise structure of base^arity without materializing the carrier.
struct TupleSpace {
  LatticePtr base;
  int arity = 0;

  Tuple bottom() const { return Tuple(size_t(arity), base->bottom()); }

  bool leq(const Tuple& u, const Tuple& v) const {
    for (int i = 0; i < arity; ++i)
      if (!base->leq(u[i], v[i])) return false;
    return true;
  }

  Tuple join(const Tuple& u, const Tuple& v) const {
    Tuple out(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) out[i] = base->join(u[i], v[i]);
    return out;
  }

  void join_into(Tuple& acc, const Tuple& v) const {
    for (int i = 0; i < arity; ++i) acc[i] = base->join(acc[i], v[i]);
  }

  // x_{i=}: x at node i, bottom elsewhere.
  Tuple indicator_eq(int x, int i) const {
    Tuple t = bottom();
    base->check_element(x);
    t[i] = x;
    return t;
  }

  // x_{iS}: x at S-successors of i, bottom elsewhere.
  Tuple indicator_rel(int x, int i, const Frame& J) const {
    Tuple t = bottom();
    base->check_element(x);
    for (int k : J.successors(i)) t[k] = x;
    return t;
  }
};

// The generating pair set [J,H] = {(x_{iS} ∨ F(x)_{i=}, F(x)_{i=})} as
// tuples over H's carrier; set semantics, reflexive pairs dropped (they
// contribute nothing to the induced operator).
std::vector<std::pair<Tuple, Tuple>> tensor_pair_tuples(const TupleSpace& space,
                                                        const Frame& J,
                                                        const FSupLattice& H);

// j[X] on a tuple space, iterated to the least fixpoint above a point.
// Memoizes closures; never materializes the ambient power lattice.
class LazyClosure {
 public:
  LazyClosure(TupleSpace space, std::vector<std::pair<Tuple, Tuple>> pairs)
      : space_(std::move(space)), pairs_(std::move(pairs)) {}

  const TupleSpace& space() const { return space_; }
  const std::vector<std::pair<Tuple, Tuple>>& pairs() const { return pairs_; }

  Tuple close(Tuple a) const;

 private:
  TupleSpace space_;
  std::vector<std::pair<Tuple, Tuple>> pairs_;
  mutable std::unordered_map<Tuple, Tuple, TupleHash> memo_;
};

// All fixpoints of the closure, generated as quotient-joins of the closed
// indicators n(x_{i=}) (every tuple is the join of its indicators), sorted
// lexicographically. Throws CarrierTooLarge beyond `max_size`.
std::vector<Tuple> generated_fixpoints(const LazyClosure& cl, size_t max_size);

}  // namespace tense
