#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace thinlab::runner {

// Fixed notation with 12 decimals; negative zero prints as zero.
std::string format_double(double x);

// Deterministic JSON text: keys sorted, two-space indent, doubles through
// format_double, non-finite doubles as null. Ends with a newline.
std::string dump_canonical(const nlohmann::json& value);

struct Table {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

// RFC 4180 style CSV with a header line; cells use the JSON scalar
// formatting, null cells are empty.
std::string to_csv(const Table& table);

}  // namespace thinlab::runner
