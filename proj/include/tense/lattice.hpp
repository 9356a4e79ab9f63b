#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tense/error.hpp"

namespace tense {

// Row-major n x n bit matrix; rows are small bitsets over element indices.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int n) : n_(n), words_((n + 63) / 64), data_(size_t(n) * words_, 0) {}

  bool get(int r, int c) const {
    return (data_[size_t(r) * words_ + size_t(c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c) {
    data_[size_t(r) * words_ + size_t(c >> 6)] |= uint64_t(1) << (c & 63);
  }
  std::span<const uint64_t> row(int r) const {
    return {data_.data() + size_t(r) * words_, size_t(words_)};
  }
  std::span<uint64_t> row(int r) {
    return {data_.data() + size_t(r) * words_, size_t(words_)};
  }
  int size() const { return n_; }
  int words() const { return words_; }

  // row(r) |= row(s)
  void or_row(int r, int s) {
    auto* a = data_.data() + size_t(r) * words_;
    const auto* b = data_.data() + size_t(s) * words_;
    for (int w = 0; w < words_; ++w) a[w] |= b[w];
  }

  bool operator==(const BitMatrix& o) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> data_;
};

// Finite sup-semilattice: all joins exist, hence all meets. Immutable after
// construction and safe to share read-only across threads.
class SupLattice;
using LatticePtr = std::shared_ptr<const SupLattice>;

class SupLattice {
 public:
  int size() const { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent

  bool leq(int x, int y) const { return up_.get(x, y); }
  int join(int x, int y) const { return join_[size_t(x) * n_ + y]; }
  int meet(int x, int y) const { return meet_[size_t(x) * n_ + y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Empty set convention: join(∅)=bottom, meet(∅)=top.
  int join_all(std::span<const int> xs) const;
  int meet_all(std::span<const int> xs) const;

  const BitMatrix& up() const { return up_; }
  const BitMatrix& down() const { return down_; }

  // Join-irreducible elements (x != join of elements strictly below x),
  // in a topological (≤-respecting) order.
  const std::vector<int>& join_irreducibles() const { return irreducibles_; }

  void check_element(int x) const {
    if (x < 0 || x >= n_)
      fail(ErrorKind::ForeignElement,
           "element index " + std::to_string(x) + " outside carrier of size " +
               std::to_string(n_));
  }

  // Structural identity; cheap enough for API boundaries.
  static bool same(const SupLattice& a, const SupLattice& b) {
    return &a == &b || (a.n_ == b.n_ && a.up_ == b.up_);
  }

  // Builds a lattice from a label list and generating order pairs; the order
  // is the reflexive-transitive closure of the pairs. Verifies antisymmetry,
  // bottom existence and pairwise joins.
  static LatticePtr validate(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& order_pairs);

  // Same carrier checks, inputs already resolved to indices.
  static LatticePtr validate_indexed(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& order_pairs);

  // Carrier cap. Default 4096; override with the TENSE_MAX_CARRIER env var.
  static int carrier_cap();

 private:
  friend class Power;
  friend LatticePtr sublattice_by_closure(const SupLattice&, const std::vector<int>&,
                                          const std::vector<int>&, const std::string&,
                                          const std::string&);

  SupLattice() = default;
  void finish_from_up();  // derives down_, bottom_, top_, tables, irreducibles
  void compute_irreducibles();

  int n_ = 0;
  std::vector<std::string> labels_;
  BitMatrix up_;    // up_(x,y) ⟺ x ≤ y
  BitMatrix down_;  // down_(x,y) ⟺ y ≤ x
  std::vector<uint16_t> join_;
  std::vector<uint16_t> meet_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<int> irreducibles_;
};

// The power lattice L^T with pointwise order. Elements are T-indexed tuples
// of base elements in lexicographic order (first node most significant), so
// element index k decodes as a mixed-radix numeral over |L|.
class Power {
 public:
  Power() = default;
  Power(LatticePtr base, std::vector<std::string> node_names);

  const LatticePtr& carrier() const { return carrier_; }
  const LatticePtr& base() const { return base_; }
  int arity() const { return arity_; }
  const std::vector<std::string>& node_names() const { return node_names_; }

  int encode(std::span<const int> tuple) const;
  std::vector<int> decode(int index) const;
  int at(int index, int node) const;  // decode(index)[node], O(1) arithmetic

 private:
  LatticePtr base_;
  LatticePtr carrier_;
  int arity_ = 0;
  std::vector<std::string> node_names_;
  std::vector<int64_t> stride_;
};

// power_lattice(L, T): the [OP]-level entry point.
Power power_lattice(LatticePtr base, const std::vector<std::string>& node_names);

// Restriction of `base` to the index subset `members` (must be meet-closed
// with joins given by `join_of[x*n+y]` as base indices inside `members`).
// Used by quotients; label(x) = prefix + base.label + suffix.
LatticePtr sublattice_by_closure(const SupLattice& base, const std::vector<int>& members,
                                 const std::vector<int>& closure_table,
                                 const std::string& label_prefix,
                                 const std::string& label_suffix);

std::string tuple_label(const SupLattice& base, std::span<const int> tuple);

}  // namespace tense
