#include "tense/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tense {

namespace {

int popcount_row(std::span<const uint64_t> row) {
  int c = 0;
  for (uint64_t w : row) c += std::popcount(w);
  return c;
}

// a ⊇ b as bit rows
bool row_contains(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  for (size_t w = 0; w < a.size(); ++w)
    if ((b[w] & ~a[w]) != 0) return false;
  return true;
}

template <typename Fn>
void for_each_bit(std::span<const uint64_t> row, Fn&& fn) {
  for (size_t w = 0; w < row.size(); ++w) {
    uint64_t bits = row[w];
    while (bits) {
      int b = std::countr_zero(bits);
      fn(int(w * 64 + b));
      bits &= bits - 1;
    }
  }
}

}  // namespace

int SupLattice::carrier_cap() {
  static int cap = [] {
    int v = 4096;
    if (const char* s = std::getenv("TENSE_MAX_CARRIER")) {
      char* end = nullptr;
      long parsed = std::strtol(s, &end, 10);
      if (end && *end == '\0' && parsed > 0) v = int(parsed);
    }
    return std::clamp(v, 1, 8192);
  }();
  return cap;
}

int SupLattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : int(it - labels_.begin());
}

int SupLattice::join_all(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) {
    check_element(x);
    acc = join(acc, x);
  }
  return acc;
}

int SupLattice::meet_all(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) {
    check_element(x);
    acc = meet(acc, x);
  }
  return acc;
}

void SupLattice::compute_irreducibles() {
  irreducibles_.clear();
  for (int x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    int m = bottom_;
    for_each_bit(down_.row(x), [&](int y) {
      if (y != x) m = join(m, y);
    });
    if (m != x) irreducibles_.push_back(x);
  }
  // downset size is a linear extension of ≤
  std::stable_sort(irreducibles_.begin(), irreducibles_.end(), [&](int a, int b) {
    return popcount_row(down_.row(a)) < popcount_row(down_.row(b));
  });
}

void SupLattice::finish_from_up() {
  down_ = BitMatrix(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (up_.get(x, y)) down_.set(y, x);

  bottom_ = -1;
  for (int x = 0; x < n_; ++x)
    if (popcount_row(up_.row(x)) == n_) { bottom_ = x; break; }
  if (bottom_ < 0)
    fail(ErrorKind::NoBottom, "no bottom element (empty join does not exist)");

  const bool prefilled = !join_.empty();
  if (!prefilled) {
    join_.assign(size_t(n_) * n_, 0);
    std::vector<uint64_t> ub(up_.words());
    for (int x = 0; x < n_; ++x) {
      for (int y = x; y < n_; ++y) {
        auto rx = up_.row(x);
        auto ry = up_.row(y);
        for (int w = 0; w < up_.words(); ++w) ub[w] = rx[w] & ry[w];
        int least = -1;
        for (size_t w = 0; w < ub.size() && least < 0; ++w) {
          uint64_t bits = ub[w];
          while (bits) {
            int z = int(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (row_contains(up_.row(z), {ub.data(), ub.size()})) { least = z; break; }
          }
        }
        if (least < 0)
          fail(ErrorKind::NoJoin, "elements '" + labels_[x] + "' and '" + labels_[y] +
                                      "' have no least upper bound");
        join_[size_t(x) * n_ + y] = uint16_t(least);
        join_[size_t(y) * n_ + x] = uint16_t(least);
      }
    }
  }

  top_ = -1;
  for (int x = 0; x < n_; ++x)
    if (popcount_row(down_.row(x)) == n_) { top_ = x; break; }
  if (top_ < 0) {
    int t = bottom_;
    for (int x = 0; x < n_; ++x) t = join(t, x);
    top_ = t;
  }

  if (meet_.empty()) {
    meet_.assign(size_t(n_) * n_, 0);
    std::vector<uint64_t> lb(down_.words());
    for (int x = 0; x < n_; ++x) {
      for (int y = x; y < n_; ++y) {
        auto rx = down_.row(x);
        auto ry = down_.row(y);
        for (int w = 0; w < down_.words(); ++w) lb[w] = rx[w] & ry[w];
        int greatest = -1;
        for (size_t w = 0; w < lb.size() && greatest < 0; ++w) {
          uint64_t bits = lb[w];
          while (bits) {
            int z = int(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (row_contains(down_.row(z), {lb.data(), lb.size()})) { greatest = z; break; }
          }
        }
        if (greatest < 0)
          fail(ErrorKind::LawViolation,
               "meet missing for a validated lattice; this should be impossible");
        meet_[size_t(x) * n_ + y] = uint16_t(greatest);
        meet_[size_t(y) * n_ + x] = uint16_t(greatest);
      }
    }
  }

  compute_irreducibles();
}

LatticePtr SupLattice::validate_indexed(std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& order_pairs) {
  if (labels.empty()) fail(ErrorKind::NoBottom, "empty carrier has no bottom");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        fail(ErrorKind::DuplicateLabel, "duplicate element label '" + l + "'");
  }
  const int n = int(labels.size());
  if (n > carrier_cap())
    fail(ErrorKind::CarrierTooLarge, "carrier size " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(carrier_cap()));

  auto lat = std::shared_ptr<SupLattice>(new SupLattice());
  lat->n_ = n;
  lat->labels_ = std::move(labels);
  lat->up_ = BitMatrix(n);
  for (int x = 0; x < n; ++x) lat->up_.set(x, x);
  for (auto [a, b] : order_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::ForeignElement, "order pair references unknown element");
    lat->up_.set(a, b);
  }
  // transitive closure (Warshall on bit rows)
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (lat->up_.get(x, k)) lat->up_.or_row(x, k);

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (lat->up_.get(x, y) && lat->up_.get(y, x))
        fail(ErrorKind::CycleError, "cycle through '" + lat->labels_[x] + "' and '" +
                                        lat->labels_[y] + "' violates antisymmetry");

  lat->finish_from_up();
  return lat;
}

LatticePtr SupLattice::validate(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < int(labels.size()); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(order_pairs.size());
  for (const auto& [a, b] : order_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      fail(ErrorKind::ForeignElement, "order pair references unknown label '" + a + "'");
    if (ib == index.end())
      fail(ErrorKind::ForeignElement, "order pair references unknown label '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return validate_indexed(labels, pairs);
}

std::string tuple_label(const SupLattice& base, std::span<const int> tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += base.label(tuple[i]);
  }
  s += ")";
  return s;
}

Power::Power(LatticePtr base, std::vector<std::string> node_names)
    : base_(std::move(base)), arity_(int(node_names.size())), node_names_(std::move(node_names)) {
  if (arity_ == 0) fail(ErrorKind::EmptyNodeSet, "power over an empty node set");
  const int b = base_->size();
  int64_t total = 1;
  for (int i = 0; i < arity_; ++i) {
    total *= b;
    if (total > SupLattice::carrier_cap())
      fail(ErrorKind::CarrierTooLarge,
           "power carrier " + std::to_string(b) + "^" + std::to_string(arity_) +
               " exceeds cap " + std::to_string(SupLattice::carrier_cap()));
  }
  const int n = int(total);
  stride_.assign(arity_, 1);
  for (int i = arity_ - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * b;

  auto lat = std::shared_ptr<SupLattice>(new SupLattice());
  lat->n_ = n;
  lat->labels_.reserve(n);
  std::vector<int> digits(arity_, 0);
  for (int k = 0; k < n; ++k) {
    lat->labels_.push_back(tuple_label(*base_, digits));
    for (int i = arity_ - 1; i >= 0; --i) {
      if (++digits[i] < b) break;
      digits[i] = 0;
    }
  }

  lat->up_ = BitMatrix(n);
  lat->join_.assign(size_t(n) * n, 0);
  lat->meet_.assign(size_t(n) * n, 0);
  std::vector<int> du(arity_, 0), dv(arity_, 0);
  for (int u = 0; u < n; ++u) {
    std::fill(dv.begin(), dv.end(), 0);
    for (int v = 0; v < n; ++v) {
      bool le = true;
      int64_t j = 0, m = 0;
      for (int i = 0; i < arity_; ++i) {
        le = le && base_->leq(du[i], dv[i]);
        j += stride_[i] * base_->join(du[i], dv[i]);
        m += stride_[i] * base_->meet(du[i], dv[i]);
      }
      if (le) lat->up_.set(u, v);
      lat->join_[size_t(u) * n + v] = uint16_t(j);
      lat->meet_[size_t(u) * n + v] = uint16_t(m);
      for (int i = arity_ - 1; i >= 0; --i) {
        if (++dv[i] < b) break;
        dv[i] = 0;
      }
    }
    for (int i = arity_ - 1; i >= 0; --i) {
      if (++du[i] < b) break;
      du[i] = 0;
    }
  }
  lat->finish_from_up();
  carrier_ = lat;
}

int Power::encode(std::span<const int> tuple) const {
  int64_t k = 0;
  for (int i = 0; i < arity_; ++i) {
    base_->check_element(tuple[i]);
    k += stride_[i] * tuple[i];
  }
  return int(k);
}

std::vector<int> Power::decode(int index) const {
  carrier_->check_element(index);
  std::vector<int> digits(arity_);
  for (int i = 0; i < arity_; ++i) {
    digits[i] = int(index / stride_[i]);
    index = int(index % stride_[i]);
  }
  return digits;
}

int Power::at(int index, int node) const {
  return int((index / stride_[node]) % base_->size());
}

Power power_lattice(LatticePtr base, const std::vector<std::string>& node_names) {
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : node_names)
      if (!seen.insert(l).second)
        fail(ErrorKind::DuplicateLabel, "duplicate node label '" + l + "'");
  }
  return Power(std::move(base), node_names);
}

LatticePtr sublattice_by_closure(const SupLattice& base, const std::vector<int>& members,
                                 const std::vector<int>& closure_table,
                                 const std::string& label_prefix,
                                 const std::string& label_suffix) {
  const int m = int(members.size());
  auto lat = std::shared_ptr<SupLattice>(new SupLattice());
  lat->n_ = m;
  lat->labels_.reserve(m);
  std::vector<int> pos(base.size(), -1);
  for (int i = 0; i < m; ++i) {
    pos[members[i]] = i;
    lat->labels_.push_back(label_prefix + base.label(members[i]) + label_suffix);
  }
  lat->up_ = BitMatrix(m);
  lat->join_.assign(size_t(m) * m, 0);
  lat->meet_.assign(size_t(m) * m, 0);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (base.leq(members[u], members[v])) lat->up_.set(u, v);
      int j = pos[closure_table[base.join(members[u], members[v])]];
      int w = pos[base.meet(members[u], members[v])];
      if (j < 0 || w < 0)
        fail(ErrorKind::LawViolation,
             "closure-system restriction is not closed under join/meet");
      lat->join_[size_t(u) * m + v] = uint16_t(j);
      lat->meet_[size_t(u) * m + v] = uint16_t(w);
    }
  }
  lat->finish_from_up();
  return lat;
}

}  // namespace tense
