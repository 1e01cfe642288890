#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thinlab/error.hpp"
#include "thinlab/runner/manifest.hpp"
#include "thinlab/runner/report.hpp"
#include "thinlab/runner/run.hpp"

using namespace thinlab;
using namespace thinlab::runner;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("thinlab-unit-" + name);
  fs::remove_all(p);
  return p;
}

// Minimal RFC 4180 reader for the round-trip check.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      rows.back().push_back(cell);
      cell.clear();
      rows.emplace_back();
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

}  // namespace

TEST(Manifest, PlainTextAndJsonAgree) {
  const Manifest a = parse_manifest(
      "# scan\nkind = expander\nseed = 9\ngenerators = sl2\nq = 2, 3, 5, 7\ncap.elements = 5000\nformat = csv\n");
  const Manifest b = parse_manifest(
      R"({"kind": "expander", "seed": 9, "generators": "sl2", "q": [2, 3, 5, 7], "cap": {"elements": 5000}, "format": "csv"})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.caps.max_elements, 5000u);
  EXPECT_EQ(a.get_int_list("q"), (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_EQ(parse_manifest(to_text(a)), a);
}

TEST(Manifest, MatricesAndRationals) {
  const Manifest m = parse_manifest("kind = ball\nmatrices = 1,1;0,1 | 1,0;1,1\nradius = 2\n");
  const auto mats = m.get_int_matrices("matrices");
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_EQ(mats[1], (exact::IntMatrix{{1, 0}, {1, 1}}));
  const Manifest j = parse_manifest(R"({"kind": "monodromy", "alpha": ["1/2", "1/2"], "beta": [0, 0]})");
  EXPECT_EQ(j.get_rational_list("alpha").front(), exact::Rational(1, 2));
}

TEST(Manifest, SchemaViolations) {
  auto code_of = [](const std::string& text) {
    try {
      parse_manifest(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;  // no error
  };
  EXPECT_EQ(code_of("kind = expander\nq =\n"), ErrorCode::kSchemaViolation);
  EXPECT_EQ(code_of("kind = expander\n"), ErrorCode::kSchemaViolation);
  EXPECT_EQ(code_of("kind = zaremba\nA = 2\nQ = 10\ncolour = blue\n"), ErrorCode::kSchemaViolation);
  EXPECT_EQ(code_of("kind = zaremba\nA = two\nQ = 10\n"), ErrorCode::kSchemaViolation);
  EXPECT_EQ(code_of("kind = teleport\n"), ErrorCode::kSchemaViolation);
  EXPECT_EQ(code_of("kind = zaremba\nA = 2\nQ = 10\n"), ErrorCode::kIo);
  EXPECT_THROW(load_manifest("/nonexistent/manifest.txt"), Error);
}

TEST(Report, CanonicalJson) {
  const nlohmann::json j = {{"b", 1}, {"a", {1.5, -0.0, 2}}, {"c", std::nan("")}};
  const std::string text = dump_canonical(j);
  EXPECT_EQ(text, dump_canonical(nlohmann::json::parse(R"({"c": null, "a": [1.5, -0.0, 2], "b": 1})")));
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(format_double(-0.0), "0.000000000000");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
}

TEST(Report, CsvRoundTrip) {
  Table t{"t", {"name", "x"}, {}};
  std::vector<double> values{1.0 / 7.0, -2.5e-5, 123456.789012345678, 0.0};
  for (std::size_t i = 0; i < values.size(); ++i) t.rows.push_back({"row \"" + std::to_string(i) + "\", ok", values[i]});
  const auto rows = read_csv(to_csv(t));
  ASSERT_EQ(rows.size(), values.size() + 1);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"name", "x"}));
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(rows[i + 1][0], "row \"" + std::to_string(i) + "\", ok");
    EXPECT_NEAR(std::stod(rows[i + 1][1]), values[i], 1e-12);
  }
}

TEST(Run, ExpanderBundle) {
  const Manifest m = parse_manifest("kind = expander\ngenerators = sl2\nq = 2, 3, 5, 7\n");
  const ResultBundle b = run_manifest(m);
  EXPECT_EQ(b.exit_code(), ExitCode::kOk);
  ASSERT_EQ(b.outputs["rows"].size(), 4u);
  for (const auto& row : b.outputs["rows"]) EXPECT_TRUE(row.contains("spectrum"));
}

TEST(Run, MonodromyAtlasCarriesDworkMatrices) {
  const Manifest m = parse_manifest("kind = monodromy\nfamilies = half-shift, dwork, hyperbolic-gap, hyperbolic-triple-zero\nn_max = 9\n");
  const ResultBundle b = run_manifest(m);
  EXPECT_EQ(b.exit_code(), ExitCode::kOk);
  bool found = false;
  for (const auto& e : b.outputs["atlas"]) {
    if (e["name"] != "dwork-4") continue;
    found = true;
    EXPECT_EQ(e["A"], nlohmann::json::parse("[[0,0,0,-1],[1,0,0,-1],[0,1,0,-1],[0,0,1,-1]]"));
    EXPECT_EQ(e["C"], nlohmann::json::parse("[[1,0,0,5],[0,1,0,-5],[0,0,1,5],[0,0,0,1]]"));
  }
  EXPECT_TRUE(found);
}

TEST(Run, PartialAndTotalFailure) {
  // 4 and 9 are not squarefree: those items fail, the others succeed.
  const ResultBundle partial = run_manifest(parse_manifest("kind = expander\nq = 2, 4, 5, 9\n"));
  EXPECT_EQ(partial.errors.size(), 2u);
  EXPECT_EQ(partial.exit_code(), ExitCode::kPartial);
  EXPECT_EQ(bundle_json(partial)["errors"].size(), 2u);

  const ResultBundle total = run_manifest(parse_manifest("kind = expander\nq = 4, 9\n"));
  EXPECT_EQ(total.exit_code(), ExitCode::kInvalid);
  EXPECT_EQ(total.status(), "failed");

  const ResultBundle cap = run_manifest(parse_manifest("kind = expander\nq = 2, 11\ncap.elements = 100\n"));
  EXPECT_EQ(cap.exit_code(), ExitCode::kCap);

  EXPECT_THROW(run_manifest(parse_manifest("kind = zaremba\nA = 0\nQ = 5\n")), Error);
}

TEST(Run, EmitIsByteStable) {
  const Manifest m = parse_manifest("kind = cartan\ngram = -2,-3;-3,-2\nheights = 5, 20\nformat = csv\n");
  const fs::path d1 = scratch("emit1"), d2 = scratch("emit2");
  const auto files = emit_report(run_manifest(m), d1);
  emit_report(run_manifest(m), d2);
  for (const auto& f : files) {
    ASSERT_TRUE(fs::exists(d2 / f)) << f;
    if (f == "provenance.json") continue;
    EXPECT_EQ(slurp(d1 / f), slurp(d2 / f)) << f;
  }
  EXPECT_NE(std::find(files.begin(), files.end(), "roots.csv"), files.end());
}

TEST(Run, OutputDirectoryResolution) {
  Manifest m = parse_manifest("kind = zaremba\nA = 2\nQ = 10\n");
  EXPECT_EQ(resolve_out_dir(m, std::string("x")), fs::path("x"));
  setenv("THINLAB_OUT_DIR", "from-env", 1);
  EXPECT_EQ(resolve_out_dir(m), fs::path("from-env"));
  m.out = "from-manifest";
  EXPECT_EQ(resolve_out_dir(m), fs::path("from-manifest"));
  unsetenv("THINLAB_OUT_DIR");
}

TEST(Run, EveryKindRuns) {
  const std::vector<std::string> manifests{
      "kind = expander\nq = 3\n",
      "kind = monodromy\nfamilies = dwork\nn_max = 4\ncalabi_yau = false\n",
      "kind = cartan\ngram = 2,0,0;0,2,0;0,0,-2\nheights = 1, 3\n",
      "kind = rotation\nm = 4\nn = 4\nlmax = 3\n",
      "kind = zaremba\nA = 2\nQ = 50\n",
      "kind = apollonian\nroot = -1, 2, 2, 3\nbound = 100\n",
      "kind = walk\ngenerators = dwork4-ac\nlengths = 4, 8\ntrials = 10\n",
      "kind = ball\ngenerators = gamma44\nradius = 10\nrelation_length = 4\n",
  };
  for (const auto& text : manifests) {
    const ResultBundle b = run_manifest(parse_manifest(text));
    EXPECT_EQ(b.exit_code(), ExitCode::kOk) << text << bundle_json(b).dump();
  }
}
