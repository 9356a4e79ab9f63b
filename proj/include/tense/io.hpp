#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tense/constructions.hpp"
#include "tense/frame.hpp"
#include "tense/hom.hpp"
#include "tense/lattice.hpp"

namespace tense {

// Structure files are UTF-8 JSON with a "kind" tag:
//   lattice: {"kind":"lattice","elements":[...],"leq":[[a,b],...]}
//   fss:     {"kind":"fss","lattice":{...},"F":{"x":"y",...}}
//   frame:   {"kind":"frame","nodes":[...],"rel":[[i,k],...]}
// "leq" lists generating pairs; the order is their reflexive-transitive
// closure. Parse errors carry a JSON-path location.
using Structure = std::variant<LatticePtr, FssPtr, FramePtr>;

Structure load_structure(const std::string& path);
Structure parse_structure(const std::string& text, const std::string& origin);

std::string lattice_to_json(const SupLattice& L);
std::string fss_to_json(const FSupLattice& H);
std::string frame_to_json(const Frame& J);

// Plain-text tables, byte-stable across runs.
std::string render_lattice(const SupLattice& L);
std::string render_fss(const FSupLattice& H);
std::string render_frame(const Frame& J);
std::string render_hom_table(const HomFrame& hf,
                             const std::vector<std::string>& row_names);

std::string structure_kind(const Structure& s);

}  // namespace tense
