#pragma once
#include <span>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tense/error.hpp"

namespace tense {

// A frame (T,S): node set with an arbitrary binary relation. (i,k) ∈ S reads
// "i is before k". Immutable after construction.
class Frame {
 public:
  static std::shared_ptr<const Frame> make(std::vector<std::string> nodes,
                                           const std::vector<std::pair<std::string, std::string>>& rel);
  static std::shared_ptr<const Frame> make_indexed(std::vector<std::string> nodes,
                                                   std::vector<std::pair<int, int>> rel);

  int size() const { return int(nodes_.size()); }
  const std::string& node(int i) const { return nodes_[i]; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  int index_of(const std::string& label) const;

  bool related(int i, int k) const { return mat_[size_t(i) * nodes_.size() + k] != 0; }
  const std::vector<std::pair<int, int>>& rel() const { return rel_; }
  const std::vector<int>& successors(int i) const { return succ_[i]; }

  static bool same(const Frame& a, const Frame& b) {
    return &a == &b || (a.nodes_.size() == b.nodes_.size() && a.mat_ == b.mat_);
  }

 private:
  Frame() = default;
  std::vector<std::string> nodes_;
  std::vector<std::pair<int, int>> rel_;  // sorted, deduplicated
  std::vector<uint8_t> mat_;
  std::vector<std::vector<int>> succ_;
};

using FramePtr = std::shared_ptr<const Frame>;

// Relation-preserving node map between frames.
struct FrameHom {
  FramePtr src;
  FramePtr dst;
  std::vector<int> table;

  int operator()(int i) const { return table[i]; }

  static FrameHom checked(FramePtr src, FramePtr dst, std::vector<int> table);
  static FrameHom identity(FramePtr f);
  static FrameHom compose(const FrameHom& g, const FrameHom& f);  // g ∘ f

  bool operator==(const FrameHom& o) const { return table == o.table; }
};

bool is_frame_hom(std::span<const int> t, const Frame& J1, const Frame& J2);

}  // namespace tense
