#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::runner {

enum class Kind { kExpander, kMonodromy, kCartan, kRotation, kZaremba, kApollonian, kWalk, kBall };

std::string_view to_string(Kind k) noexcept;
// Throws Error(kSchemaViolation) for unknown names.
Kind parse_kind(std::string_view name);
std::vector<Kind> all_kinds();

enum class Format { kJson, kCsv };

struct Caps {
  std::size_t max_elements = 10'000'000;
  std::optional<std::size_t> max_iterations;
  std::optional<double> wall_seconds;
  friend bool operator==(const Caps&, const Caps&) = default;
};

// One experiment. Module parameters are kept as raw strings in the plain-text
// syntax; typed access validates them against the schema.
struct Manifest {
  Kind kind = Kind::kExpander;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  Format format = Format::kJson;
  std::optional<std::string> out;
  Caps caps;
  std::map<std::string, std::string> params;

  friend bool operator==(const Manifest&, const Manifest&) = default;

  bool has(const std::string& key) const { return params.contains(key); }
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;
  std::vector<exact::Rational> get_rational_list(const std::string& key) const;
  // Matrices separated by '|', rows by ';', entries by ','.
  std::vector<exact::IntMatrix> get_int_matrices(const std::string& key) const;
  std::vector<std::vector<std::vector<double>>> get_real_matrices(const std::string& key) const;
};

// Plain text: one `key = value` per line, '#' starts a comment. Input whose
// first non-blank character is '{' is read as a JSON object instead. Throws
// Error(kSchemaViolation) on malformed input, unknown keys or bad values.
Manifest parse_manifest(std::string_view text);
Manifest load_manifest(const std::string& path);

// Checks that every parameter belongs to the kind and parses with its type,
// and that the required ones are present.
void validate(const Manifest& m);

// Canonical plain-text form; parse_manifest(to_text(m)) == m.
std::string to_text(const Manifest& m);
// Echo used in reports; leaves out the output directory and thread count,
// which do not affect results.
nlohmann::json to_json(const Manifest& m);

struct ParamSpec {
  std::string key;
  std::string type;  // int, bool, string, int_list, string_list, rational_list, matrices, real_matrices
  bool required = false;
  std::string help;
};

const std::vector<ParamSpec>& schema(Kind k);

}  // namespace thinlab::runner
