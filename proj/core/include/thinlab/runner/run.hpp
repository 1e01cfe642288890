#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thinlab/error.hpp"
#include "thinlab/group/gen_set.hpp"
#include "thinlab/runner/manifest.hpp"
#include "thinlab/runner/report.hpp"

namespace thinlab::runner {

// 0 success, 1 some items failed, 2 invalid input, 3 a resource cap fired,
// 4 every item failed for another reason (or the report could not be written).
enum class ExitCode : int { kOk = 0, kPartial = 1, kInvalid = 2, kCap = 3, kFailure = 4 };

ExitCode exit_code_for(ErrorCode code) noexcept;

struct ItemError {
  std::string item;
  std::string code;
  std::string message;
};

struct ResultBundle {
  Manifest manifest;
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Table> tables;
  std::vector<ItemError> errors;
  std::size_t items = 0;
  std::string version;
  std::string timestamp;  // provenance only; kept out of result.json

  ExitCode exit_code() const;
  std::string status() const;  // "ok", "partial" or "failed"
};

std::string library_version();

// Generator presets: sl2, unipotent3, dwork4 ({A, C}), dwork4-ac ({A, AC}),
// gamma44 (integral rotations). Explicit `matrices` take precedence.
group::GenSet resolve_generators(const Manifest& m);

// Runs the experiment. Throws Error(kSchemaViolation) for an invalid
// manifest; every other failure is recorded in the bundle's errors.
ResultBundle run_manifest(const Manifest& m);

// The result.json document: manifest echo, outputs, errors, status, version
// and seed.
nlohmann::json bundle_json(const ResultBundle& b);

// Writes result.json, the CSV tables when the manifest asks for csv,
// provenance.json and index.json (listing the other files). Returns the file
// names written. Throws Error(kIo).
std::vector<std::string> emit_report(const ResultBundle& b, const std::filesystem::path& dir);

// Explicit directory, then the manifest's `out`, then $THINLAB_OUT_DIR, then
// ./thinlab-out.
std::filesystem::path resolve_out_dir(const Manifest& m, const std::optional<std::string>& explicit_dir = std::nullopt);

}  // namespace thinlab::runner
