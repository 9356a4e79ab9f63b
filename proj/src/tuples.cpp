#include "tense/tuples.hpp"

#include <algorithm>
#include <unordered_set>

namespace tense {

std::vector<std::pair<Tuple, Tuple>> tensor_pair_tuples(const TupleSpace& space,
                                                        const Frame& J,
                                                        const FSupLattice& H) {
  if (!SupLattice::same(*space.base, *H.lat))
    fail(ErrorKind::CarrierMismatch, "tuple space base does not match the F-carrier");
  if (space.arity != J.size())
    fail(ErrorKind::CarrierMismatch, "tuple space arity does not match the frame");
  std::vector<std::pair<Tuple, Tuple>> pairs;
  for (int x = 0; x < H.lat->size(); ++x) {
    const int fx = H.F[x];
    for (int i = 0; i < J.size(); ++i) {
      Tuple spike = space.indicator_eq(fx, i);
      Tuple lhs = space.indicator_rel(x, i, J);
      space.join_into(lhs, spike);
      pairs.emplace_back(std::move(lhs), std::move(spike));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

Tuple LazyClosure::close(Tuple a) const {
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  const Tuple start = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, d] : pairs_) {
      if (p == d) continue;  // reflexive pairs never enlarge the closure
      if (space_.leq(d, a) && !space_.leq(p, a)) {
        space_.join_into(a, p);
        changed = true;
      }
      if (space_.leq(p, a) && !space_.leq(d, a)) {
        space_.join_into(a, d);
        changed = true;
      }
    }
  }
  memo_.emplace(start, a);
  return a;
}

std::vector<Tuple> generated_fixpoints(const LazyClosure& cl, size_t max_size) {
  const auto& sp = cl.space();
  std::unordered_set<Tuple, TupleHash> seen;
  std::vector<Tuple> work;

  auto add = [&](Tuple t) {
    if (seen.insert(t).second) {
      if (seen.size() > max_size)
        fail(ErrorKind::CarrierTooLarge,
             "generated carrier exceeds " + std::to_string(max_size) + " elements");
      work.push_back(std::move(t));
    }
  };

  add(cl.close(sp.bottom()));
  for (int x = 0; x < sp.base->size(); ++x)
    for (int i = 0; i < sp.arity; ++i) add(cl.close(sp.indicator_eq(x, i)));

  // close under the quotient join n(u ∨ v)
  for (size_t w = 0; w < work.size(); ++w) {
    Tuple u = work[w];  // copy: work may reallocate
    for (size_t v = 0; v <= w; ++v) {
      Tuple j = sp.join(u, work[v]);
      if (!seen.contains(j)) add(cl.close(std::move(j)));
    }
  }

  std::vector<Tuple> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tense
