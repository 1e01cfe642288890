#include "thinlab/runner/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "thinlab/error.hpp"

namespace thinlab::runner {
namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::kSchemaViolation, "manifest: " + what); }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::int64_t to_int(const std::string& key, const std::string& text) {
  const auto v = parse_number<std::int64_t>(text);
  if (!v) violation(key + ": expected an integer, got '" + text + "'");
  return *v;
}

double to_double(const std::string& key, const std::string& text) {
  const auto v = parse_number<double>(text);
  if (!v) violation(key + ": expected a number, got '" + text + "'");
  return *v;
}

std::size_t to_count(const std::string& key, const std::string& text) {
  const auto v = to_int(key, text);
  if (v < 0) violation(key + ": must be non-negative");
  return static_cast<std::size_t>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  violation(key + ": expected true or false, got '" + text + "'");
}

std::vector<std::vector<std::vector<std::string>>> matrix_cells(const std::string& key, const std::string& text) {
  std::vector<std::vector<std::vector<std::string>>> out;
  for (const auto& block : split(text, '|')) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : split(block, ';')) rows.push_back(split(row, ','));
    for (const auto& row : rows)
      if (row.size() != rows.size()) violation(key + ": matrices must be square");
    out.push_back(std::move(rows));
  }
  return out;
}

// JSON values are rewritten into the plain-text value syntax.
std::string json_value_text(const std::string& key, const nlohmann::json& v) {
  auto depth = [](const nlohmann::json& j) {
    int d = 0;
    const nlohmann::json* cur = &j;
    while (cur->is_array() && !cur->empty()) {
      ++d;
      cur = &cur->front();
    }
    return d;
  };
  auto scalar = [&](const nlohmann::json& s) -> std::string {
    if (s.is_string()) return s.get<std::string>();
    if (s.is_boolean()) return s.get<bool>() ? "true" : "false";
    if (s.is_number_integer()) return std::to_string(s.get<std::int64_t>());
    if (s.is_number_unsigned()) return std::to_string(s.get<std::uint64_t>());
    if (s.is_number_float()) {
      std::ostringstream os;
      os.precision(17);
      os << s.get<double>();
      return os.str();
    }
    violation(key + ": unsupported JSON value");
  };
  auto join = [](const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
  };
  auto list = [&](const nlohmann::json& a) {
    std::vector<std::string> parts;
    for (const auto& e : a) parts.push_back(scalar(e));
    return join(parts, ", ");
  };
  auto matrix = [&](const nlohmann::json& a) {
    std::vector<std::string> rows;
    for (const auto& r : a) rows.push_back(list(r));
    return join(rows, "; ");
  };
  switch (depth(v)) {
    case 0: return scalar(v);
    case 1: return list(v);
    case 2: return matrix(v);
    case 3: {
      std::vector<std::string> mats;
      for (const auto& m : v) mats.push_back(matrix(m));
      return join(mats, " | ");
    }
    default: violation(key + ": arrays nested too deeply");
  }
}

void assign(Manifest& m, const std::string& key, const std::string& value, bool& have_kind) {
  if (key == "kind") {
    m.kind = parse_kind(value);
    have_kind = true;
  } else if (key == "seed") {
    const auto v = parse_number<std::uint64_t>(value);
    if (!v) violation("seed: expected a non-negative integer");
    m.seed = *v;
  } else if (key == "threads") {
    m.threads = std::max<std::size_t>(1, to_count(key, value));
  } else if (key == "format") {
    if (value == "json") m.format = Format::kJson;
    else if (value == "csv") m.format = Format::kCsv;
    else violation("format: expected json or csv");
  } else if (key == "out") {
    m.out = value;
  } else if (key == "cap.elements") {
    m.caps.max_elements = to_count(key, value);
  } else if (key == "cap.iterations") {
    m.caps.max_iterations = to_count(key, value);
  } else if (key == "cap.wall_seconds") {
    m.caps.wall_seconds = to_double(key, value);
    if (!(*m.caps.wall_seconds > 0)) violation("cap.wall_seconds: must be positive");
  } else {
    if (m.params.contains(key)) violation("duplicate key '" + key + "'");
    m.params[key] = value;
  }
}

void flatten_json(const nlohmann::json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [k, v] : obj.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      flatten_json(v, key == "caps" ? "cap" : key, out);
    } else if (!v.is_null()) {
      out.emplace_back(key, json_value_text(key, v));
    }
  }
}

const std::vector<ParamSpec> kGeneratorParams = {
    {"generators", "string", false, "preset: sl2, unipotent3, dwork4, dwork4-ac, gamma44"},
    {"matrices", "matrices", false, "explicit integer generators"},
    {"labels", "string_list", false, "names for explicit generators"},
};

std::vector<ParamSpec> with_generators(std::vector<ParamSpec> specs) {
  specs.insert(specs.begin(), kGeneratorParams.begin(), kGeneratorParams.end());
  return specs;
}

}  // namespace

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::kExpander: return "expander";
    case Kind::kMonodromy: return "monodromy";
    case Kind::kCartan: return "cartan";
    case Kind::kRotation: return "rotation";
    case Kind::kZaremba: return "zaremba";
    case Kind::kApollonian: return "apollonian";
    case Kind::kWalk: return "walk";
    case Kind::kBall: return "ball";
  }
  return "unknown";
}

std::vector<Kind> all_kinds() {
  return {Kind::kExpander, Kind::kMonodromy, Kind::kCartan, Kind::kRotation,
          Kind::kZaremba,  Kind::kApollonian, Kind::kWalk,  Kind::kBall};
}

Kind parse_kind(std::string_view name) {
  for (Kind k : all_kinds())
    if (to_string(k) == name) return k;
  violation("unknown kind '" + std::string(name) + "'");
}

const std::vector<ParamSpec>& schema(Kind k) {
  static const std::map<Kind, std::vector<ParamSpec>> table = {
      {Kind::kExpander,
       with_generators({
           {"q", "int_list", false, "moduli to scan"},
           {"q_max", "int", false, "scan the squarefree q in 2..q_max"},
           {"allow_non_squarefree", "bool", false, "accept moduli that are not squarefree"},
           {"k", "int", false, "eigenvalues from the top, trivial one included (default 2)"},
           {"dense_check_max", "int", false, "largest graph cross-checked densely (default 5000)"},
       })},
      {Kind::kMonodromy,
       {
           {"families", "string_list", false, "half-shift, dwork, hyperbolic-gap, hyperbolic-triple-zero"},
           {"n_max", "int", false, "largest rank per family (default 9)"},
           {"calabi_yau", "bool", false, "append the Calabi-Yau entries (default true)"},
           {"alpha", "rational_list", false, "custom exponents, with beta"},
           {"beta", "rational_list", false, "custom exponents, with alpha"},
       }},
      {Kind::kCartan,
       {
           {"gram", "matrices", true, "integral Gram matrix of signature (n-1, 1)"},
           {"heights", "int_list", true, "height bounds to enumerate"},
           {"max_vertices", "int", false, "root count cap per height (default 20000)"},
       }},
      {Kind::kRotation,
       {
           {"m", "int", false, "order of the first rotation"},
           {"n", "int", false, "order of the second rotation"},
           {"matrices", "real_matrices", false, "explicit rotation generators"},
           {"lmax", "int", true, "largest harmonic degree"},
       }},
      {Kind::kZaremba,
       {
           {"A", "int", true, "partial quotient bound"},
           {"Q", "int", true, "largest denominator"},
       }},
      {Kind::kApollonian,
       {
           {"root", "int_list", true, "Descartes quadruple a, b, c, d"},
           {"bound", "int", true, "largest curvature kept"},
           {"modulus", "int", false, "residue modulus (default 24)"},
       }},
      {Kind::kWalk,
       with_generators({
           {"lengths", "int_list", true, "walk lengths"},
           {"trials", "int", true, "samples per length"},
       })},
      {Kind::kBall,
       with_generators({
           {"radius", "int", true, "word length bound"},
           {"norm_bound", "int", false, "keep elements with max(|B|, |B^-1|) <= bound"},
           {"relation_length", "int", false, "also search relations up to this length"},
       })},
  };
  return table.at(k);
}

std::int64_t Manifest::get_int(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) violation("missing required key '" + key + "'");
  return to_int(key, it->second);
}

std::int64_t Manifest::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Manifest::get_bool(const std::string& key, bool fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : to_bool(key, it->second);
}

std::string Manifest::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::vector<std::int64_t> Manifest::get_int_list(const std::string& key) const {
  std::vector<std::int64_t> out;
  for (const auto& s : get_string_list(key)) out.push_back(to_int(key, s));
  return out;
}

std::vector<std::string> Manifest::get_string_list(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) violation("missing required key '" + key + "'");
  if (it->second.empty()) return {};
  auto parts = split(it->second, ',');
  for (const auto& p : parts)
    if (p.empty()) violation(key + ": empty list element");
  return parts;
}

std::vector<exact::Rational> Manifest::get_rational_list(const std::string& key) const {
  std::vector<exact::Rational> out;
  for (const auto& s : get_string_list(key)) {
    exact::Rational r;
    if (r.set_str(s, 10) != 0 || s.find_first_not_of("+-0123456789/") != std::string::npos)
      violation(key + ": expected a rational, got '" + s + "'");
    if (r.get_den() == 0) violation(key + ": zero denominator");
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<exact::IntMatrix> Manifest::get_int_matrices(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) violation("missing required key '" + key + "'");
  std::vector<exact::IntMatrix> out;
  for (const auto& rows : matrix_cells(key, it->second)) {
    exact::IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (m(i, j).set_str(rows[i][j], 10) != 0) violation(key + ": bad integer '" + rows[i][j] + "'");
      }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<std::vector<double>>> Manifest::get_real_matrices(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) violation("missing required key '" + key + "'");
  std::vector<std::vector<std::vector<double>>> out;
  for (const auto& rows : matrix_cells(key, it->second)) {
    std::vector<std::vector<double>> m;
    for (const auto& row : rows) {
      std::vector<double> r;
      for (const auto& cell : row) r.push_back(to_double(key, cell));
      m.push_back(std::move(r));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  bool have_kind = false;
  const std::string trimmed = trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      violation(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) violation("JSON manifest must be an object");
    std::vector<std::pair<std::string, std::string>> entries;
    flatten_json(j, "", entries);
    for (const auto& [k, v] : entries) assign(m, k, v, have_kind);
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string body = trim(line);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos) violation("line " + std::to_string(number) + ": expected 'key = value'");
      const std::string key = trim(std::string_view(body).substr(0, eq));
      if (key.empty()) violation("line " + std::to_string(number) + ": empty key");
      assign(m, key, trim(std::string_view(body).substr(eq + 1)), have_kind);
    }
  }
  if (!have_kind) violation("missing required key 'kind'");
  validate(m);
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read manifest '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

void validate(const Manifest& m) {
  const auto& specs = schema(m.kind);
  for (const auto& [key, value] : m.params) {
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == key; });
    if (it == specs.end()) violation("key '" + key + "' is not valid for kind " + std::string(to_string(m.kind)));
    if (it->type == "int") m.get_int(key);
    else if (it->type == "bool") m.get_bool(key, false);
    else if (it->type == "int_list") m.get_int_list(key);
    else if (it->type == "string_list") m.get_string_list(key);
    else if (it->type == "rational_list") m.get_rational_list(key);
    else if (it->type == "matrices") m.get_int_matrices(key);
    else if (it->type == "real_matrices") m.get_real_matrices(key);
  }
  for (const auto& s : specs)
    if (s.required && !m.has(s.key)) violation("missing required key '" + s.key + "'");

  switch (m.kind) {
    case Kind::kExpander:
      if (!m.has("q") && !m.has("q_max")) violation("expander needs q or q_max");
      if (m.has("q") && m.get_int_list("q").empty()) violation("q: empty modulus list");
      break;
    case Kind::kMonodromy:
      if (m.has("alpha") != m.has("beta")) violation("alpha and beta must be given together");
      break;
    case Kind::kRotation:
      if (m.has("matrices") == (m.has("m") || m.has("n"))) violation("rotation needs either m and n, or matrices");
      if (!m.has("matrices") && !(m.has("m") && m.has("n"))) violation("rotation needs both m and n");
      break;
    case Kind::kApollonian:
      if (m.get_int_list("root").size() != 4) violation("root: expected four integers");
      break;
    case Kind::kWalk:
      if (m.get_int_list("lengths").empty()) violation("lengths: empty list");
      break;
    default:
      break;
  }
}

std::string to_text(const Manifest& m) {
  std::ostringstream os;
  os << "kind = " << to_string(m.kind) << "\n";
  os << "seed = " << m.seed << "\n";
  os << "threads = " << m.threads << "\n";
  os << "format = " << (m.format == Format::kJson ? "json" : "csv") << "\n";
  if (m.out) os << "out = " << *m.out << "\n";
  os << "cap.elements = " << m.caps.max_elements << "\n";
  if (m.caps.max_iterations) os << "cap.iterations = " << *m.caps.max_iterations << "\n";
  if (m.caps.wall_seconds) {
    std::ostringstream v;
    v.precision(17);
    v << *m.caps.wall_seconds;
    os << "cap.wall_seconds = " << v.str() << "\n";
  }
  for (const auto& [k, v] : m.params) os << k << " = " << v << "\n";
  return os.str();
}

nlohmann::json to_json(const Manifest& m) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(m.kind));
  j["seed"] = m.seed;
  j["format"] = m.format == Format::kJson ? "json" : "csv";
  j["caps"]["elements"] = m.caps.max_elements;
  if (m.caps.max_iterations) j["caps"]["iterations"] = *m.caps.max_iterations;
  if (m.caps.wall_seconds) j["caps"]["wall_seconds"] = *m.caps.wall_seconds;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : m.params) j["params"][k] = v;
  return j;
}

}  // namespace thinlab::runner
