#include "tense/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tense {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& origin,
                                     const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    fail(ErrorKind::ParseError, origin + ": missing or non-array field '" + field + "'");
  std::vector<std::string> out;
  for (size_t i = 0; i < j[field].size(); ++i) {
    const auto& v = j[field][i];
    if (!v.is_string())
      fail(ErrorKind::ParseError, origin + ": " + field + "[" + std::to_string(i) +
                                      "] is not a string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j,
                                                           const std::string& origin,
                                                           const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    fail(ErrorKind::ParseError, origin + ": missing or non-array field '" + field + "'");
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < j[field].size(); ++i) {
    const auto& v = j[field][i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      fail(ErrorKind::ParseError, origin + ": " + field + "[" + std::to_string(i) +
                                      "] is not a [string,string] pair");
    out.emplace_back(v[0].get<std::string>(), v[1].get<std::string>());
  }
  return out;
}

LatticePtr lattice_from_json(const json& j, const std::string& origin) {
  return SupLattice::validate(string_list(j, origin, "elements"),
                              pair_list(j, origin, "leq"));
}

FssPtr fss_from_json(const json& j, const std::string& origin) {
  if (!j.contains("lattice") || !j["lattice"].is_object())
    fail(ErrorKind::ParseError, origin + ": missing 'lattice' object");
  LatticePtr lat = lattice_from_json(j["lattice"], origin + ".lattice");
  if (!j.contains("F") || !j["F"].is_object())
    fail(ErrorKind::ParseError, origin + ": missing 'F' object");
  std::vector<int> F(size_t(lat->size()), -1);
  for (const auto& [key, val] : j["F"].items()) {
    int src = lat->index_of(key);
    if (src < 0) fail(ErrorKind::ParseError, origin + ".F: unknown element '" + key + "'");
    if (!val.is_string())
      fail(ErrorKind::ParseError, origin + ".F['" + key + "']: value is not a string");
    int dst = lat->index_of(val.get<std::string>());
    if (dst < 0)
      fail(ErrorKind::ParseError,
           origin + ".F['" + key + "']: unknown image '" + val.get<std::string>() + "'");
    F[src] = dst;
  }
  for (int x = 0; x < lat->size(); ++x)
    if (F[x] < 0)
      fail(ErrorKind::ParseError, origin + ".F: no image for '" + lat->label(x) + "'");
  return std::make_shared<const FSupLattice>(FSupLattice::checked(lat, std::move(F)));
}

FramePtr frame_from_json(const json& j, const std::string& origin) {
  return Frame::make(string_list(j, origin, "nodes"), pair_list(j, origin, "rel"));
}

}  // namespace

Structure parse_structure(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(ErrorKind::ParseError, origin + ": missing string field 'kind'");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "lattice") return lattice_from_json(j, origin);
  if (kind == "fss") return fss_from_json(j, origin);
  if (kind == "frame") return frame_from_json(j, origin);
  fail(ErrorKind::ParseError, origin + ": unknown kind '" + kind + "'");
}

Structure load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str(), path);
}

std::string structure_kind(const Structure& s) {
  if (std::holds_alternative<LatticePtr>(s)) return "lattice";
  if (std::holds_alternative<FssPtr>(s)) return "fss";
  return "frame";
}

namespace {

json lattice_json(const SupLattice& L) {
  json j;
  j["kind"] = "lattice";
  j["elements"] = L.labels();
  json leq = json::array();
  // covers suffice to regenerate the order; emit x < y with nothing between
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < L.size() && cover; ++z)
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) cover = false;
      if (cover) leq.push_back(json::array({L.label(x), L.label(y)}));
    }
  j["leq"] = leq;
  return j;
}

}  // namespace

std::string lattice_to_json(const SupLattice& L) { return lattice_json(L).dump(2) + "\n"; }

std::string fss_to_json(const FSupLattice& H) {
  json j;
  j["kind"] = "fss";
  j["lattice"] = lattice_json(*H.lat);
  json F = json::object();
  for (int x = 0; x < H.lat->size(); ++x) F[H.lat->label(x)] = H.lat->label(H.F[x]);
  j["F"] = F;
  return j.dump(2) + "\n";
}

std::string frame_to_json(const Frame& J) {
  json j;
  j["kind"] = "frame";
  j["nodes"] = J.nodes();
  json rel = json::array();
  for (auto [a, b] : J.rel()) rel.push_back(json::array({J.node(a), J.node(b)}));
  j["rel"] = rel;
  return j.dump(2) + "\n";
}

namespace {

std::string pad(const std::string& s, size_t w) {
  std::string out = s;
  while (out.size() < w) out += ' ';
  return out;
}

}  // namespace

std::string render_lattice(const SupLattice& L) {
  std::ostringstream out;
  out << "elements (" << L.size() << "): ";
  for (int x = 0; x < L.size(); ++x) out << (x ? " " : "") << L.label(x);
  out << "\nbottom: " << L.label(L.bottom()) << "  top: " << L.label(L.top()) << "\ncovers:";
  bool any = false;
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < L.size() && cover; ++z)
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) cover = false;
      if (cover) {
        out << " " << L.label(x) << "<" << L.label(y);
        any = true;
      }
    }
  if (!any) out << " (none)";
  out << "\n";
  return out.str();
}

std::string render_fss(const FSupLattice& H) {
  std::ostringstream out;
  out << render_lattice(*H.lat) << "F:";
  for (int x = 0; x < H.lat->size(); ++x)
    out << " " << H.lat->label(x) << "->" << H.lat->label(H.F[x]);
  out << "\n";
  return out.str();
}

std::string render_frame(const Frame& J) {
  std::ostringstream out;
  out << "nodes (" << J.size() << "): ";
  for (int i = 0; i < J.size(); ++i) out << (i ? " " : "") << J.node(i);
  out << "\nrelation (" << J.rel().size() << "):";
  for (auto [a, b] : J.rel()) out << " (" << J.node(a) << "," << J.node(b) << ")";
  out << "\n";
  return out.str();
}

std::string render_hom_table(const HomFrame& hf, const std::vector<std::string>& row_names) {
  const auto& G = *hf.H->lat;
  size_t name_w = 0;
  for (const auto& n : row_names) name_w = std::max(name_w, n.size());
  std::vector<size_t> col_w(static_cast<size_t>(G.size()));
  for (int x = 0; x < G.size(); ++x) {
    col_w[x] = G.label(x).size();
    for (const auto& h : hf.homs)
      col_w[x] = std::max(col_w[x], hf.L->label(h.table[x]).size());
  }
  std::ostringstream out;
  out << pad("", name_w) << " |";
  for (int x = 0; x < G.size(); ++x) out << " " << pad(G.label(x), col_w[x]);
  out << "\n";
  for (size_t i = 0; i < hf.homs.size(); ++i) {
    out << pad(row_names[i], name_w) << " |";
    for (int x = 0; x < G.size(); ++x)
      out << " " << pad(hf.L->label(hf.homs[i].table[x]), col_w[x]);
    out << "\n";
  }
  return out.str();
}

}  // namespace tense
