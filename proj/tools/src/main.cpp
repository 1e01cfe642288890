// thinlab command-line front end: one subcommand per manifest kind.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thinlab/error.hpp"
#include "thinlab/runner/manifest.hpp"
#include "thinlab/runner/run.hpp"

namespace {

using thinlab::Error;
using thinlab::ErrorCode;
using namespace thinlab::runner;

struct Flag {
  const char* name;  // long option without dashes
  const char* key;   // manifest parameter
  const char* help;
};

const std::vector<Flag>& module_flags(Kind k) {
  static const std::vector<Flag> generators = {
      {"generators", "generators", "generator preset: sl2, unipotent3, dwork4, dwork4-ac, gamma44"},
      {"matrices", "matrices", "explicit generators, e.g. '1,1;0,1|1,0;1,1'"},
      {"labels", "labels", "comma separated generator names"},
  };
  static const std::map<Kind, std::vector<Flag>> table = [] {
    std::map<Kind, std::vector<Flag>> t;
    t[Kind::kExpander] = generators;
    t[Kind::kExpander].insert(t[Kind::kExpander].end(),
                              {{"q", "q", "comma separated moduli"},
                               {"q-max", "q_max", "scan squarefree q in 2..q-max"},
                               {"allow-non-squarefree", "allow_non_squarefree", "true to accept any modulus"},
                               {"k", "k", "eigenvalues from the top, trivial one included"},
                               {"dense-check-max", "dense_check_max", "largest graph checked densely"}});
    t[Kind::kMonodromy] = {{"families", "families", "comma separated family names"},
                           {"n-max", "n_max", "largest rank per family"},
                           {"calabi-yau", "calabi_yau", "true/false: append the Calabi-Yau entries"},
                           {"alpha", "alpha", "custom exponents, e.g. 1/5,2/5,3/5,4/5"},
                           {"beta", "beta", "custom exponents"}};
    t[Kind::kCartan] = {{"gram", "gram", "Gram matrix, rows separated by ';'"},
                        {"heights", "heights", "comma separated height bounds"},
                        {"max-vertices", "max_vertices", "root count cap per height"}};
    t[Kind::kRotation] = {{"m", "m", "order of the first rotation"},
                          {"n", "n", "order of the second rotation"},
                          {"Lmax", "lmax", "largest harmonic degree"},
                          {"rotations", "matrices", "explicit 3x3 real generators"}};
    t[Kind::kZaremba] = {{"A", "A", "partial quotient bound"}, {"Q", "Q", "largest denominator"}};
    t[Kind::kApollonian] = {{"root", "root", "Descartes quadruple a,b,c,d"},
                            {"bound", "bound", "largest curvature kept"},
                            {"modulus", "modulus", "residue modulus"}};
    t[Kind::kWalk] = generators;
    t[Kind::kWalk].insert(t[Kind::kWalk].end(),
                          {{"lengths", "lengths", "comma separated walk lengths"}, {"trials", "trials", "samples per length"}});
    t[Kind::kBall] = generators;
    t[Kind::kBall].insert(t[Kind::kBall].end(),
                          {{"radius", "radius", "word length bound"},
                           {"norm-bound", "norm_bound", "entry bound on kept elements"},
                           {"relation-length", "relation_length", "search relations up to this length"}});
    return t;
  }();
  return table.at(k);
}

// Whitespace separated rows become the inline ';' / ',' syntax.
std::string read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::string line, out;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string cell, joined;
    while (row >> cell) joined += (joined.empty() ? "" : ",") + cell;
    if (joined.empty()) continue;
    out += (out.empty() ? "" : ";") + joined;
  }
  return out;
}

struct Options {
  std::optional<std::string> manifest, out, format, gram_file, matrix_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads, cap_elements, cap_iterations;
  std::optional<double> cap_wall;
  std::vector<std::string> params;  // key=value
  std::map<std::string, std::string> flags;
  bool print = false;
};

int run(Kind kind, const Options& o) {
  Manifest m;
  if (o.manifest) {
    m = load_manifest(*o.manifest);
    if (m.kind != kind)
      throw Error(ErrorCode::kSchemaViolation, "manifest kind '" + std::string(to_string(m.kind)) +
                                                   "' does not match subcommand '" + std::string(to_string(kind)) + "'");
  }
  m.kind = kind;
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kSchemaViolation, "--param expects key=value, got '" + p + "'");
    m.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  for (const auto& [key, value] : o.flags) m.params[key] = value;
  if (o.gram_file) m.params["gram"] = read_matrix_file(*o.gram_file);
  if (o.matrix_file) m.params[kind == Kind::kCartan ? "gram" : "matrices"] = read_matrix_file(*o.matrix_file);
  if (o.seed) m.seed = *o.seed;
  if (o.threads) m.threads = *o.threads;
  if (o.cap_elements) m.caps.max_elements = *o.cap_elements;
  if (o.cap_iterations) m.caps.max_iterations = *o.cap_iterations;
  if (o.cap_wall) m.caps.wall_seconds = *o.cap_wall;
  if (o.format) m.format = *o.format == "csv" ? Format::kCsv : Format::kJson;
  validate(m);
  if (o.print) {
    std::cout << to_text(m);
    return 0;
  }

  const ResultBundle bundle = run_manifest(m);
  const auto dir = resolve_out_dir(m, o.out);
  emit_report(bundle, dir);
  for (const auto& e : bundle.errors) std::cerr << "thinlab: " << e.item << ": " << e.code << ": " << e.message << '\n';
  std::cout << to_string(kind) << ": " << bundle.status() << " (" << bundle.errors.size() << " errors) -> "
            << dir.string() << '\n';
  return static_cast<int>(bundle.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thinlab: experiments on thin matrix groups"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);
  const char* env_help = "output directory (default: $THINLAB_OUT_DIR, then ./thinlab-out)";

  std::map<Kind, Options> options;
  std::map<Kind, std::map<std::string, std::string>> raw;
  for (Kind kind : all_kinds()) {
    Options& o = options[kind];
    auto* sub = app.add_subcommand(std::string(to_string(kind)), "run a " + std::string(to_string(kind)) + " manifest");
    sub->add_option("--manifest", o.manifest, "manifest file (plain text or JSON)");
    sub->add_option("--out", o.out, env_help);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cap-elements", o.cap_elements, "element cap for enumerations");
    sub->add_option("--cap-iterations", o.cap_iterations, "iteration cap for eigensolvers");
    sub->add_option("--cap-wall-seconds", o.cap_wall, "wall-clock budget, checked between units");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--param", o.params, "extra manifest parameter key=value (repeatable)");
    sub->add_flag("--print-manifest", o.print, "print the merged manifest and exit");
    if (kind == Kind::kCartan) sub->add_option("--gram-file", o.gram_file, "Gram matrix file, whitespace separated rows");
    if (kind == Kind::kRotation || kind == Kind::kExpander || kind == Kind::kWalk || kind == Kind::kBall)
      sub->add_option("--matrix-file", o.matrix_file, "one generator matrix file, whitespace separated rows");
    for (const auto& f : module_flags(kind)) {
      auto& slot = raw[kind][f.key];
      sub->add_option(std::string("--") + f.name, slot, f.help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kInvalid);
  }

  for (Kind kind : all_kinds()) {
    if (!app.got_subcommand(std::string(to_string(kind)))) continue;
    Options& o = options[kind];
    for (const auto& [key, value] : raw[kind])
      if (!value.empty()) o.flags[key] = value;
    try {
      return run(kind, o);
    } catch (const Error& e) {
      std::cerr << "thinlab: " << to_string(e.code()) << ": " << e.what() << '\n';
      return static_cast<int>(e.code() == ErrorCode::kIo ? ExitCode::kFailure : exit_code_for(e.code()));
    } catch (const std::exception& e) {
      std::cerr << "thinlab: internal: " << e.what() << '\n';
      return static_cast<int>(ExitCode::kFailure);
    }
  }
  return static_cast<int>(ExitCode::kInvalid);
}
