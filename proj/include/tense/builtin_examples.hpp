#pragma once

#include "tense/frame.hpp"
#include "tense/hom.hpp"
#include "tense/lattice.hpp"

namespace tense::examples {

// The three bundled reference instances used by `example 1|2|3` and the
// acceptance suite.

// 5-element lattice with atoms a,b,c (0 < a,b,c < 1).
LatticePtr diamond5();
// diamond5 with F: 0→0, a→a, b→c, c→b, 1→1.
FssPtr diamond5_swap();
// Two-element chain 0 < 1.
LatticePtr chain2();
// Frame on {f2,f3,f4} with f2 S f3, f3 S f2, f4 S f4.
FramePtr frame_j3();

// Free join-semilattice on three generators a,b,c (the 8-element cube) with
// the operator induced by swapping b and c. Example 1's source tables are
// reproduced exactly by this carrier; see the example-1 report.
LatticePtr cube8();
FssPtr cube8_swap();

// Source-table row labels of the hom tables
// keyed by canonical (lexicographic) hom order, for the cube reading.
const std::vector<std::string>& cube_hom_source_labels();

// Table-1 tuple labels in canonical order (α-indices of the source table).
const std::vector<std::string>& alpha_source_labels();

// Golden renderings for `example n` (byte-exact).
const std::string& golden_example1();
const std::string& golden_example2();
const std::string& golden_example3();

// Report text generators (must equal the goldens above).
std::string report_example1();
std::string report_example2();
std::string report_example3();

}  // namespace tense::examples
