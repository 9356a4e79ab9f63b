#include "tense/frame.hpp"

#include <algorithm>
#include <span>
#include <unordered_map>
#include <unordered_set>

namespace tense {

FramePtr Frame::make_indexed(std::vector<std::string> nodes,
                             std::vector<std::pair<int, int>> rel) {
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : nodes)
      if (!seen.insert(l).second)
        fail(ErrorKind::DuplicateLabel, "duplicate node label '" + l + "'");
  }
  const int n = int(nodes.size());
  for (auto [i, k] : rel)
    if (i < 0 || i >= n || k < 0 || k >= n)
      fail(ErrorKind::UnknownNode, "relation pair references unknown node");
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());

  auto f = std::shared_ptr<Frame>(new Frame());
  f->nodes_ = std::move(nodes);
  f->rel_ = std::move(rel);
  f->mat_.assign(size_t(n) * n, 0);
  f->succ_.resize(n);
  for (auto [i, k] : f->rel_) {
    f->mat_[size_t(i) * n + k] = 1;
    f->succ_[i].push_back(k);
  }
  return f;
}

FramePtr Frame::make(std::vector<std::string> nodes,
                     const std::vector<std::pair<std::string, std::string>>& rel) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < int(nodes.size()); ++i) index.emplace(nodes[i], i);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(rel.size());
  for (const auto& [a, b] : rel) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorKind::UnknownNode, "unknown node '" + a + "'");
    if (ib == index.end()) fail(ErrorKind::UnknownNode, "unknown node '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return make_indexed(std::move(nodes), std::move(pairs));
}

int Frame::index_of(const std::string& label) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), label);
  return it == nodes_.end() ? -1 : int(it - nodes_.begin());
}

bool is_frame_hom(std::span<const int> t, const Frame& J1, const Frame& J2) {
  if (int(t.size()) != J1.size())
    fail(ErrorKind::UnknownNode, "candidate table size does not match source frame");
  for (int v : t)
    if (v < 0 || v >= J2.size()) fail(ErrorKind::UnknownNode, "image node out of range");
  for (auto [i, k] : J1.rel())
    if (!J2.related(t[i], t[k])) return false;
  return true;
}

FrameHom FrameHom::checked(FramePtr src, FramePtr dst, std::vector<int> table) {
  if (!is_frame_hom(table, *src, *dst))
    fail(ErrorKind::LawViolation, "node map does not preserve the frame relation");
  return FrameHom{std::move(src), std::move(dst), std::move(table)};
}

FrameHom FrameHom::identity(FramePtr f) {
  std::vector<int> t(f->size());
  for (int i = 0; i < f->size(); ++i) t[i] = i;
  return FrameHom{f, f, std::move(t)};
}

FrameHom FrameHom::compose(const FrameHom& g, const FrameHom& f) {
  if (!Frame::same(*f.dst, *g.src))
    fail(ErrorKind::CarrierMismatch, "frame hom composition g∘f needs dst(f) = src(g)");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
  return FrameHom{f.src, g.dst, std::move(t)};
}

}  // namespace tense
