// tense: finite sup-semilattices with join-preserving operators, frames,
// and the constructions connecting them.
//
// exit codes: 0 ok, 1 law/golden failure, 2 input error

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tense/adjunctions.hpp"
#include "tense/builtin_examples.hpp"
#include "tense/constructions.hpp"
#include "tense/io.hpp"
#include "tense/random_instances.hpp"

using namespace tense;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

template <typename T>
T expect(const Structure& s, const std::string& path, const char* kind) {
  if (!std::holds_alternative<T>(s))
    fail(ErrorKind::ParseError,
         path + ": expected a " + kind + " file, found " + structure_kind(s));
  return std::get<T>(s);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, p.string() + ": cannot write");
  out << text;
}

int cmd_validate(const std::string& path) {
  Structure s = load_structure(path);
  std::cout << path << ": valid " << structure_kind(s) << "\n";
  if (auto* l = std::get_if<LatticePtr>(&s)) std::cout << render_lattice(**l);
  if (auto* h = std::get_if<FssPtr>(&s)) std::cout << render_fss(**h);
  if (auto* j = std::get_if<FramePtr>(&s)) std::cout << render_frame(**j);
  return kExitOk;
}

int cmd_compute(const std::string& what, const std::vector<std::string>& inputs,
                const std::string& outdir) {
  fs::create_directories(outdir);
  if (what == "power") {
    if (inputs.size() != 2)
      fail(ErrorKind::ParseError, "power needs <lattice> <frame>");
    LatticePtr l = expect<LatticePtr>(load_structure(inputs[0]), inputs[0], "lattice");
    FramePtr j = expect<FramePtr>(load_structure(inputs[1]), inputs[1], "frame");
    FrameOp p = frame_operator(l, j);
    write_file(fs::path(outdir) / "power.json", fss_to_json(*p.fss));
    std::string table = render_fss(*p.fss);
    write_file(fs::path(outdir) / "power.txt", table);
    std::cout << table;
    return kExitOk;
  }
  if (what == "tensor") {
    if (inputs.size() != 2)
      fail(ErrorKind::ParseError, "tensor needs <frame> <fss>");
    FramePtr j = expect<FramePtr>(load_structure(inputs[0]), inputs[0], "frame");
    FssPtr h = expect<FssPtr>(load_structure(inputs[1]), inputs[1], "fss");
    Tensor t = tensor(j, h);
    write_file(fs::path(outdir) / "tensor.json", lattice_to_json(*t.carrier()));
    std::string table = render_lattice(*t.carrier());
    write_file(fs::path(outdir) / "tensor.txt", table);
    std::cout << table;
    return kExitOk;
  }
  if (what == "homframe") {
    if (inputs.size() != 2)
      fail(ErrorKind::ParseError, "homframe needs <fss> <lattice>");
    FssPtr h = expect<FssPtr>(load_structure(inputs[0]), inputs[0], "fss");
    LatticePtr l = expect<LatticePtr>(load_structure(inputs[1]), inputs[1], "lattice");
    HomFrame hf = hom_frame(h, l);
    write_file(fs::path(outdir) / "homframe.json", frame_to_json(*hf.frame));
    std::string table = render_frame(*hf.frame) + render_hom_table(hf, hf.frame->nodes());
    write_file(fs::path(outdir) / "homframe.txt", table);
    std::cout << table;
    return kExitOk;
  }
  fail(ErrorKind::ParseError, "unknown construction '" + what + "'");
}

int report_outcome(const std::vector<AdjunctionReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& v : r.verdicts) {
      std::cout << "[" << (v.pass ? "ok" : "XX") << "] " << r.id << ": " << v.law
                << " @ " << r.instance;
      if (!v.pass) std::cout << " — counterexample: " << v.witness;
      std::cout << "\n";
      ok = ok && v.pass;
    }
  }
  return ok ? kExitOk : kExitLawFailure;
}

int cmd_check(const std::string& which, const std::vector<std::string>& inputs,
              uint64_t seed, int count) {
  if (which == "laws") {
    std::vector<AdjunctionReport> all;
    bool ok = true;
    for (int i = 0; i < count; ++i) {
      auto reports = run_law_instance(seed + uint64_t(i));
      for (const auto& r : reports)
        for (const auto& v : r.verdicts)
          if (!v.pass) {
            ok = false;
            std::cout << "[XX] instance seed " << seed + uint64_t(i) << ": " << r.id
                      << " / " << v.law << " @ " << r.instance
                      << " — counterexample: " << v.witness << " (replay: check laws --random "
                      << seed + uint64_t(i) << " 1)\n";
          }
    }
    std::cout << (ok ? "all law instances pass" : "law failures above") << " (" << count
              << " instances from seed " << seed << ")\n";
    return ok ? kExitOk : kExitLawFailure;
  }

  if (inputs.size() != 3)
    fail(ErrorKind::ParseError, "check " + which + " needs <frame> <fss> <lattice>");
  FramePtr j = expect<FramePtr>(load_structure(inputs[0]), inputs[0], "frame");
  FssPtr h = expect<FssPtr>(load_structure(inputs[1]), inputs[1], "fss");
  LatticePtr l = expect<LatticePtr>(load_structure(inputs[2]), inputs[2], "lattice");
  Adjunction a = which == "I" ? Adjunction::I : which == "II" ? Adjunction::II : Adjunction::III;
  CheckLimits lim;
  lim.max_homs = 4096;  // one-shot runs afford larger hom-frames
  return report_outcome({check_triangles(a, j, h, l, lim)});
}

int cmd_example(int n) {
  std::string report, golden;
  switch (n) {
    case 1: report = examples::report_example1(); golden = examples::golden_example1(); break;
    case 2: report = examples::report_example2(); golden = examples::golden_example2(); break;
    case 3: report = examples::report_example3(); golden = examples::golden_example3(); break;
    default: fail(ErrorKind::ParseError, "example id must be 1, 2 or 3");
  }
  std::cout << report;
  if (report == golden) {
    std::cout << "golden: match\n";
    return kExitOk;
  }
  // locate the first differing line for a cell-level diagnostic
  std::istringstream got(report), want(golden);
  std::string gline, wline;
  int lineno = 0;
  while (true) {
    bool g = bool(std::getline(got, gline));
    bool w = bool(std::getline(want, wline));
    ++lineno;
    if (!g && !w) break;
    if (gline != wline || g != w) {
      std::cout << "golden: MISMATCH at line " << lineno << "\n  computed: "
                << (g ? gline : "<eof>") << "\n  golden:   " << (w ? wline : "<eof>")
                << "\n";
      break;
    }
  }
  return kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite sup-semilattice, frame and tense-operator engine"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("file", path)->required();

  std::string construction, outdir = ".";
  std::vector<std::string> inputs;
  auto* compute = app.add_subcommand("compute", "run a construction");
  compute->add_option("construction", construction)
      ->required()
      ->check(CLI::IsMember({"power", "tensor", "homframe"}));
  compute->add_option("inputs", inputs)->required();
  compute->add_option("-o,--out", outdir, "output directory");

  std::string which;
  std::vector<std::string> check_inputs;
  std::vector<uint64_t> random_args;
  auto* check = app.add_subcommand("check", "verify adjunction laws");
  check->add_option("which", which)
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "laws"}));
  check->add_option("inputs", check_inputs, "frame, fss, lattice files");
  check->add_option("--random", random_args, "seed and instance count")
      ->expected(2);

  int example_id = 0;
  auto* example = app.add_subcommand("example", "reproduce a bundled example");
  example->add_option("id", example_id)->required()->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*compute) return cmd_compute(construction, inputs, outdir);
    if (*check) {
      uint64_t seed = random_args.size() == 2 ? random_args[0] : 7;
      int count = random_args.size() == 2 ? int(random_args[1]) : 1;
      return cmd_check(which, check_inputs, seed, count);
    }
    if (*example) return cmd_example(example_id);
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    bool law = e.kind() == ErrorKind::LawViolation || e.kind() == ErrorKind::FiberConflict;
    return law ? kExitLawFailure : kExitInputError;
  }
  return kExitOk;
}
