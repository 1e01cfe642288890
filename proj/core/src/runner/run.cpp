#include "thinlab/runner/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "thinlab/diophantine/apollonian.hpp"
#include "thinlab/diophantine/zaremba.hpp"
#include "thinlab/expander/cayley.hpp"
#include "thinlab/group/reducibility.hpp"
#include "thinlab/group/words.hpp"
#include "thinlab/hyperbolic/cartan.hpp"
#include "thinlab/monodromy/hypergeometric.hpp"
#include "thinlab/rotation/rotation.hpp"

#ifndef THINLAB_VERSION
#define THINLAB_VERSION "unknown"
#endif

namespace thinlab::runner {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json int_json(const exact::Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix_json(const exact::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json generators_json(const group::GenSet& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back({{"label", s.labels()[i]}, {"matrix", matrix_json(s[i])}});
  return out;
}

std::string join_words(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Context {
  const Manifest& m;
  ResultBundle& b;
  std::optional<Clock::time_point> deadline;

  void fail(const std::string& item, const Error& e) {
    b.errors.push_back({item, std::string(to_string(e.code())), e.what()});
  }
  bool out_of_time() const { return deadline && Clock::now() > *deadline; }
  void time_out(const std::string& item) {
    b.errors.push_back({item, std::string(to_string(ErrorCode::kCapExceeded)),
                        "resource cap exceeded: wall-clock budget"});
  }
};

void run_expander(Context& ctx) {
  const Manifest& m = ctx.m;
  const group::GenSet s = resolve_generators(m);
  std::vector<std::uint64_t> qs;
  if (m.has("q")) {
    for (auto q : m.get_int_list("q")) {
      if (q < 2) throw Error(ErrorCode::kSchemaViolation, "manifest: q: moduli must be >= 2");
      qs.push_back(static_cast<std::uint64_t>(q));
    }
  } else {
    const auto q_max = m.get_int("q_max");
    const bool all = m.get_bool("allow_non_squarefree", false);
    for (std::int64_t q = 2; q <= q_max; ++q)
      if (all || expander::is_squarefree(static_cast<std::uint64_t>(q))) qs.push_back(static_cast<std::uint64_t>(q));
    if (qs.empty()) throw Error(ErrorCode::kSchemaViolation, "manifest: q_max leaves no moduli");
  }

  expander::ScanOptions o;
  o.closure.allow_non_squarefree = m.get_bool("allow_non_squarefree", false);
  o.closure.max_elements = m.caps.max_elements;
  o.spectrum.k = static_cast<std::size_t>(std::max<std::int64_t>(0, m.get_int("k", 2)));
  o.spectrum.dense_check_max = static_cast<std::size_t>(std::max<std::int64_t>(0, m.get_int("dense_check_max", 5000)));
  o.spectrum.max_matvecs = m.caps.max_iterations;
  o.spectrum.seed = m.seed;
  o.threads = m.threads;
  o.deadline = ctx.deadline;
  const expander::ScanReport report = expander::expander_scan(s, qs, o);

  Table table{"expander",
              {"q", "order", "target_order", "onto", "index", "vertices", "degree", "lambda1", "lambda2", "lambda_min",
               "one_sided_gap", "two_sided_gap", "bipartite", "converged", "matvecs", "oracle_lambda2",
               "oracle_lambda_min", "oracle_mismatch", "error"},
              {}};
  json rows = json::array();
  std::optional<double> min_gap;
  for (const auto& row : report.rows) {
    json r;
    r["q"] = row.q;
    std::vector<json> cells(table.columns.size(), nullptr);
    cells[0] = row.q;
    if (row.closure) {
      const auto& c = *row.closure;
      r["order"] = c.order;
      r["overflow"] = c.overflow;
      r["target_order"] = c.target_order ? int_json(*c.target_order) : json(nullptr);
      r["onto"] = std::string(expander::to_string(c.onto));
      r["index"] = c.index ? int_json(*c.index) : json(nullptr);
      cells[1] = c.order;
      cells[2] = r["target_order"];
      cells[3] = r["onto"];
      cells[4] = r["index"];
    }
    if (row.spectrum) {
      const auto& sp = *row.spectrum;
      json spectrum;
      spectrum["vertices"] = sp.vertices;
      spectrum["degree"] = sp.degree;
      spectrum["top"] = sp.top;
      spectrum["lambda1"] = sp.lambda1;
      spectrum["lambda2"] = sp.lambda2;
      spectrum["lambda_min"] = sp.lambda_min;
      spectrum["one_sided_gap"] = sp.one_sided_gap;
      spectrum["two_sided_gap"] = sp.two_sided_gap;
      spectrum["trivial_residual"] = sp.trivial_residual;
      spectrum["bipartite"] = sp.bipartite;
      spectrum["converged"] = sp.converged;
      spectrum["matvecs"] = sp.matvecs;
      spectrum["oracle_lambda2"] = sp.oracle_lambda2 ? json(*sp.oracle_lambda2) : json(nullptr);
      spectrum["oracle_lambda_min"] = sp.oracle_lambda_min ? json(*sp.oracle_lambda_min) : json(nullptr);
      spectrum["oracle_mismatch"] = sp.oracle_mismatch;
      r["spectrum"] = spectrum;
      const char* keys[] = {"vertices", "degree", "lambda1", "lambda2", "lambda_min", "one_sided_gap", "two_sided_gap",
                            "bipartite", "converged", "matvecs", "oracle_lambda2", "oracle_lambda_min", "oracle_mismatch"};
      for (std::size_t k = 0; k < std::size(keys); ++k) cells[5 + k] = spectrum[keys[k]];
      if (sp.converged) min_gap = std::min(min_gap.value_or(sp.one_sided_gap), sp.one_sided_gap);
    }
    if (!row.error.empty()) {
      r["error"] = row.error;
      cells.back() = row.error;
      ctx.b.errors.push_back({"q=" + std::to_string(row.q), row.error_code, row.error});
    }
    rows.push_back(std::move(r));
    table.rows.push_back(std::move(cells));
  }
  ctx.b.items = report.rows.size();
  ctx.b.outputs["generators"] = generators_json(s);
  ctx.b.outputs["rows"] = std::move(rows);
  ctx.b.outputs["not_onto"] = report.not_onto;
  ctx.b.outputs["min_one_sided_gap"] = min_gap ? json(*min_gap) : json(nullptr);
  ctx.b.tables.push_back(std::move(table));
}

json signature_json(const std::optional<exact::Signature>& s) {
  if (!s) return nullptr;
  return {{"positive", s->positive}, {"negative", s->negative}, {"zero", s->zero}};
}

json rationals_json(const std::vector<exact::Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(monodromy::format_rational(r));
  return out;
}

void run_monodromy(Context& ctx) {
  const Manifest& m = ctx.m;
  std::vector<monodromy::Family> families;
  if (m.has("families")) {
    for (const auto& name : m.get_string_list("families")) {
      try {
        families.push_back(monodromy::parse_family(name));
      } catch (const Error& e) {
        throw Error(ErrorCode::kSchemaViolation, std::string("manifest: families: ") + e.what());
      }
    }
  } else if (!m.has("alpha")) {
    families = monodromy::all_families();
  }
  const auto n_max = m.get_int("n_max", 9);
  if (n_max < 2 || n_max > 40) throw Error(ErrorCode::kSchemaViolation, "manifest: n_max must be in 2..40");

  std::vector<monodromy::AtlasEntry> entries =
      monodromy::monodromy_atlas(families, static_cast<std::size_t>(n_max), m.get_bool("calabi_yau", !m.has("alpha")));
  if (m.has("alpha")) {
    try {
      monodromy::AtlasEntry e;
      e.name = "custom";
      e.params = monodromy::make_params(m.get_rational_list("alpha"), m.get_rational_list("beta"));
      e.triple = monodromy::build_monodromy(e.params);
      e.closure = monodromy::classify_closure(e.triple);
      e.known_status = "unknown";
      e.source = "manifest";
      entries.push_back(std::move(e));
    } catch (const Error& e) {
      ctx.fail("custom", e);
    }
  }

  Table table{"monodromy", {"name", "family", "n", "alpha", "beta", "closure", "signature", "hyperbolic", "known_status"}, {}};
  json atlas = json::array();
  for (const auto& e : entries) {
    json j;
    j["name"] = e.name;
    j["family"] = e.family ? json(std::string(monodromy::to_string(*e.family))) : json(nullptr);
    j["n"] = e.params.n;
    j["alpha"] = rationals_json(e.params.alpha);
    j["beta"] = rationals_json(e.params.beta);
    j["A"] = matrix_json(e.triple.A);
    j["B"] = matrix_json(e.triple.B);
    j["C"] = matrix_json(e.triple.C);
    j["closure"] = std::string(monodromy::to_string(e.closure.tag));
    j["form_space_dim"] = e.closure.form_space_dim;
    j["form"] = e.closure.form ? matrix_json(*e.closure.form) : json(nullptr);
    j["signature"] = signature_json(e.closure.signature);
    j["hyperbolic"] = e.closure.hyperbolic;
    j["known_status"] = e.known_status;
    j["source"] = e.source;
    std::vector<std::string> a, bt;
    for (const auto& r : e.params.alpha) a.push_back(monodromy::format_rational(r));
    for (const auto& r : e.params.beta) bt.push_back(monodromy::format_rational(r));
    table.rows.push_back({e.name, j["family"], e.params.n, join_words(a), join_words(bt), j["closure"],
                          e.closure.signature ? json(e.closure.signature->to_string()) : json(nullptr),
                          e.closure.hyperbolic, e.known_status});
    atlas.push_back(std::move(j));
  }
  ctx.b.items = entries.size() + (m.has("alpha") && entries.empty() ? 1 : 0);
  if (ctx.b.items == 0) ctx.b.items = 1;
  ctx.b.outputs["atlas"] = std::move(atlas);
  ctx.b.tables.push_back(std::move(table));
}

std::string vector_text(const hyperbolic::Vector& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return join_words(parts);
}

void run_cartan(Context& ctx) {
  const Manifest& m = ctx.m;
  const auto grams = m.get_int_matrices("gram");
  if (grams.size() != 1) throw Error(ErrorCode::kSchemaViolation, "manifest: gram: expected exactly one matrix");
  const hyperbolic::QuadLattice L(grams.front());
  const auto heights = m.get_int_list("heights");
  if (heights.empty()) throw Error(ErrorCode::kSchemaViolation, "manifest: heights: empty list");
  const auto max_vertices = static_cast<std::size_t>(std::max<std::int64_t>(1, m.get_int("max_vertices", 20000)));

  Table summary{"cartan", {"height", "vertices", "edges", "components", "involutions_verified"}, {}};
  Table roots{"roots", {"height", "index", "component", "root"}, {}};
  json per_height = json::array();
  std::vector<std::pair<std::int64_t, hyperbolic::MinDistGraph>> graphs;
  for (auto h : heights) {
    const std::string item = "height=" + std::to_string(h);
    if (ctx.out_of_time()) {
      ctx.time_out(item);
      continue;
    }
    try {
      hyperbolic::MinDistGraph g = hyperbolic::min_distance_graph(L, h, max_vertices);
      std::size_t verified = 0;
      const exact::IntMatrix& G = L.gram();
      const exact::IntMatrix I = exact::IntMatrix::identity(L.dim());
      for (const auto& v : g.vertices) {
        const exact::IntMatrix r = hyperbolic::cartan_involution(L, v);
        if (r.transpose() * G * r == G && r * r == I) ++verified;
      }
      if (verified != g.vertices.size())
        ctx.b.errors.push_back({item, "internal", "an involution failed to preserve the form"});
      json comps = json::array();
      std::vector<std::size_t> component_of(g.vertices.size());
      for (std::size_t c = 0; c < g.components.size(); ++c) {
        const auto& comp = g.components[c];
        for (auto v : comp.vertices) component_of[v] = c;
        const auto fp = hyperbolic::component_fingerprint(L, g, c);
        json pairings = json::object();
        for (const auto& [value, count] : fp.pairings) pairings[std::to_string(value)] = count;
        json census = json::array();
        for (const auto& [gram, count] : comp.edge_gram_census)
          census.push_back({{"gram", {{gram[0], gram[1]}, {gram[1], gram[2]}}}, {"count", count}});
        comps.push_back({{"id", c},
                         {"size", comp.vertices.size()},
                         {"edges", comp.edges},
                         {"degree_sequence", fp.degree_sequence},
                         {"diameter", fp.diameter},
                         {"pairings", pairings},
                         {"edge_gram_census", census}});
      }
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        roots.rows.push_back({h, i, component_of[i], vector_text(g.vertices[i])});
      json roots_json = json::array();
      for (const auto& v : g.vertices) roots_json.push_back(v);
      per_height.push_back({{"height", h},
                            {"vertices", g.vertices.size()},
                            {"edges", g.edges.size()},
                            {"involutions_verified", verified},
                            {"roots", roots_json},
                            {"components", comps}});
      summary.rows.push_back({h, g.vertices.size(), g.edges.size(), g.components.size(), verified});
      graphs.emplace_back(h, std::move(g));
    } catch (const Error& e) {
      ctx.fail(item, e);
    }
  }
  // Vertex and edge sets must grow with the height.
  std::sort(graphs.begin(), graphs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  bool monotone = true;
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    const auto& lo = graphs[i - 1].second;
    const auto& hi = graphs[i].second;
    const std::set<hyperbolic::Vector> big(hi.vertices.begin(), hi.vertices.end());
    for (const auto& v : lo.vertices) monotone = monotone && big.contains(v);
    std::set<std::pair<hyperbolic::Vector, hyperbolic::Vector>> edges;
    for (const auto& [a, b] : hi.edges) edges.emplace(hi.vertices[a], hi.vertices[b]);
    for (const auto& [a, b] : lo.edges) monotone = monotone && edges.contains({lo.vertices[a], lo.vertices[b]});
  }
  ctx.b.items = heights.size();
  ctx.b.outputs["gram"] = matrix_json(L.gram());
  ctx.b.outputs["heights"] = std::move(per_height);
  ctx.b.outputs["monotone_in_height"] = monotone;
  ctx.b.tables.push_back(std::move(summary));
  ctx.b.tables.push_back(std::move(roots));
}

void run_rotation(Context& ctx) {
  const Manifest& m = ctx.m;
  rotation::RotationGenSet gens;
  if (m.has("matrices")) {
    std::vector<rotation::Mat3> mats;
    for (const auto& rows : m.get_real_matrices("matrices")) {
      if (rows.size() != 3) throw Error(ErrorCode::kSchemaViolation, "manifest: matrices: rotations must be 3x3");
      rotation::Mat3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      mats.push_back(r);
    }
    gens = rotation::make_rotation_gen_set(std::move(mats));
  } else {
    gens = rotation::gamma_generators(static_cast<int>(m.get_int("m")), static_cast<int>(m.get_int("n")));
  }
  const auto lmax = m.get_int("lmax");
  if (lmax < 1 || lmax > 200) throw Error(ErrorCode::kSchemaViolation, "manifest: lmax must be in 1..200");
  const rotation::GapTable table = rotation::tsigma_gap(gens, static_cast<int>(lmax), m.threads);

  Table csv{"rotation", {"degree", "lambda_max", "lambda_min", "gap_so_far", "error"}, {}};
  json rows = json::array();
  for (const auto& row : table.rows) {
    const json gap = row.gap_so_far ? json(*row.gap_so_far) : json(nullptr);
    rows.push_back({{"degree", row.degree}, {"lambda_max", row.lambda_max}, {"lambda_min", row.lambda_min}, {"gap_so_far", gap}});
    csv.rows.push_back({row.degree, row.lambda_max, row.lambda_min, gap, row.error.empty() ? json(nullptr) : json(row.error)});
    if (!row.error.empty()) ctx.b.errors.push_back({"degree=" + std::to_string(row.degree), "not_converged", row.error});
  }
  json gen_json = json::array();
  for (std::size_t i = 0; i < gens.t(); ++i) {
    json mat = json::array();
    for (int r = 0; r < 3; ++r) mat.push_back({gens.gens[i](r, 0), gens.gens[i](r, 1), gens.gens[i](r, 2)});
    gen_json.push_back({{"label", gens.labels[i]}, {"matrix", mat}});
  }
  ctx.b.items = table.rows.size();
  ctx.b.outputs["t"] = gens.t();
  ctx.b.outputs["generators"] = gen_json;
  ctx.b.outputs["rows"] = rows;
  ctx.b.outputs["gap"] = table.rows.back().gap_so_far ? json(*table.rows.back().gap_so_far) : json(nullptr);
  if (const auto integral = rotation::integral_generators(gens)) {
    group::BallOptions bo;
    bo.max_elements = m.caps.max_elements;
    try {
      const auto ball = group::ball_enumerate(*integral, 64, bo);
      ctx.b.outputs["integral_closure"] = {{"closed", ball.closed}, {"elements", ball.elements.size()}};
    } catch (const Error& e) {
      ctx.fail("integral_closure", e);
    }
  }
  ctx.b.tables.push_back(std::move(csv));
}

void run_zaremba(Context& ctx) {
  const Manifest& m = ctx.m;
  const auto A = m.get_int("A");
  const auto Q = m.get_int("Q");
  if (A < 1 || Q < 1) throw Error(ErrorCode::kSchemaViolation, "manifest: A and Q must be >= 1");
  const auto report = diophantine::zaremba_scan(static_cast<std::uint64_t>(A), static_cast<std::uint64_t>(Q), m.threads);
  Table table{"zaremba", {"q", "achieved", "witness"}, {}};
  json rows = json::array();
  for (const auto& row : report.rows) {
    const json witness = row.achieved ? json(row.witness) : json(nullptr);
    table.rows.push_back({row.q, row.achieved, witness});
    rows.push_back({row.q, row.achieved, witness});
  }
  ctx.b.items = 1;
  ctx.b.outputs["A"] = A;
  ctx.b.outputs["Q"] = Q;
  ctx.b.outputs["achieved_count"] = report.achieved.size();
  ctx.b.outputs["exceptions"] = report.exceptions;
  ctx.b.outputs["density"] = report.density;
  ctx.b.outputs["rows"] = std::move(rows);
  ctx.b.tables.push_back(std::move(table));
}

void run_apollonian(Context& ctx) {
  const Manifest& m = ctx.m;
  const auto r = m.get_int_list("root");
  const diophantine::Quadruple root{r[0], r[1], r[2], r[3]};
  diophantine::ApollonianOptions o;
  o.modulus = m.get_int("modulus", 24);
  o.max_quadruples = m.caps.max_elements;
  const auto report = diophantine::apollonian_orbit(root, m.get_int("bound"), o);
  Table table{"apollonian", {"curvature", "quadruples"}, {}};
  json curvatures = json::array();
  std::size_t distinct_positive = 0;
  for (const auto& [c, count] : report.curvatures) {
    table.rows.push_back({c, count});
    curvatures.push_back({c, count});
    if (c > 0) ++distinct_positive;
  }
  ctx.b.items = 1;
  ctx.b.outputs["root"] = r;
  ctx.b.outputs["bound"] = report.bound;
  ctx.b.outputs["modulus"] = report.modulus;
  ctx.b.outputs["quadruples"] = report.quadruples;
  ctx.b.outputs["distinct_positive_curvatures"] = distinct_positive;
  ctx.b.outputs["density"] = report.density;
  ctx.b.outputs["residues_covered"] = report.residues_covered;
  ctx.b.outputs["residue_counts"] = report.residue_counts;
  ctx.b.outputs["curvatures"] = std::move(curvatures);
  ctx.b.tables.push_back(std::move(table));
}

void run_walk(Context& ctx) {
  const Manifest& m = ctx.m;
  const group::GenSet s = resolve_generators(m);
  std::vector<std::size_t> lengths;
  for (auto l : m.get_int_list("lengths")) {
    if (l < 0) throw Error(ErrorCode::kSchemaViolation, "manifest: lengths must be >= 0");
    lengths.push_back(static_cast<std::size_t>(l));
  }
  const auto trials = m.get_int("trials");
  if (trials < 1) throw Error(ErrorCode::kSchemaViolation, "manifest: trials must be >= 1");
  const auto report = group::walk_charpoly_stats(s, lengths, static_cast<std::size_t>(trials), m.seed, m.threads);
  Table table{"walk",
              {"length", "trials", "irreducible", "reducible", "undetermined", "irreducible_fraction",
               "reducible_fraction", "undetermined_fraction"},
              {}};
  json rows = json::array();
  for (const auto& row : report.rows) {
    table.rows.push_back({row.length, row.trials, row.irreducible, row.reducible, row.undetermined,
                          row.irreducible_fraction(), row.reducible_fraction(), row.undetermined_fraction()});
    rows.push_back({{"length", row.length},
                    {"trials", row.trials},
                    {"irreducible", row.irreducible},
                    {"reducible", row.reducible},
                    {"undetermined", row.undetermined},
                    {"reducible_fraction", row.reducible_fraction()}});
  }
  ctx.b.items = report.rows.size();
  ctx.b.outputs["generators"] = generators_json(s);
  ctx.b.outputs["rows"] = std::move(rows);
  ctx.b.tables.push_back(std::move(table));
}

void run_ball(Context& ctx) {
  const Manifest& m = ctx.m;
  const group::GenSet s = resolve_generators(m);
  const auto radius = m.get_int("radius");
  if (radius < 0) throw Error(ErrorCode::kSchemaViolation, "manifest: radius must be >= 0");
  ctx.b.items = 1;
  ctx.b.outputs["generators"] = generators_json(s);
  Table table{"ball", {"radius", "elements"}, {}};
  try {
    group::BallOptions o;
    o.max_elements = m.caps.max_elements;
    if (m.has("norm_bound")) o.norm_bound = exact::Integer(static_cast<long>(m.get_int("norm_bound")));
    const auto ball = group::ball_enumerate(s, static_cast<std::size_t>(radius), o);
    for (std::size_t r = 0; r < ball.counts.size(); ++r) table.rows.push_back({r, ball.counts[r]});
    ctx.b.outputs["counts"] = ball.counts;
    ctx.b.outputs["elements"] = ball.elements.size();
    ctx.b.outputs["closed"] = ball.closed;
    ctx.b.outputs["norm_bound"] = m.has("norm_bound") ? json(m.get_int("norm_bound")) : json(nullptr);
  } catch (const Error& e) {
    ctx.fail("ball", e);
  }
  if (m.has("relation_length")) {
    ++ctx.b.items;
    const auto len = m.get_int("relation_length");
    if (len < 1) throw Error(ErrorCode::kSchemaViolation, "manifest: relation_length must be >= 1");
    try {
      group::RelationOptions o;
      o.max_words = m.caps.max_elements;
      json rels = json::array();
      for (const auto& w : group::relation_search(s, static_cast<std::size_t>(len), o)) rels.push_back(w.to_string(s));
      ctx.b.outputs["relation_length"] = len;
      ctx.b.outputs["relations"] = std::move(rels);
    } catch (const Error& e) {
      ctx.fail("relations", e);
    }
  }
  ctx.b.tables.push_back(std::move(table));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << content;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kCapExceeded: return ExitCode::kCap;
    case ErrorCode::kNotClosed:
    case ErrorCode::kNotConverged:
    case ErrorCode::kIo: return ExitCode::kFailure;
    default: return ExitCode::kInvalid;
  }
}

ExitCode ResultBundle::exit_code() const {
  if (errors.empty()) return ExitCode::kOk;
  const std::string cap(to_string(ErrorCode::kCapExceeded));
  if (std::any_of(errors.begin(), errors.end(), [&](const ItemError& e) { return e.code == cap; })) return ExitCode::kCap;
  std::set<std::string> failed;
  for (const auto& e : errors) failed.insert(e.item);
  if (failed.size() < items) return ExitCode::kPartial;
  // Everything failed: classify by the first error.
  for (ErrorCode c : {ErrorCode::kInvalidArgument, ErrorCode::kDimensionMismatch, ErrorCode::kNotMonic, ErrorCode::kNotIntegral,
                      ErrorCode::kImprimitive, ErrorCode::kOffQuadric, ErrorCode::kNotOrthogonal,
                      ErrorCode::kNotCartanRoot, ErrorCode::kSchemaViolation})
    if (errors.front().code == to_string(c)) return ExitCode::kInvalid;
  return ExitCode::kFailure;
}

std::string ResultBundle::status() const {
  switch (exit_code()) {
    case ExitCode::kOk: return "ok";
    case ExitCode::kPartial: return "partial";
    default: return "failed";
  }
}

std::string library_version() { return THINLAB_VERSION; }

group::GenSet resolve_generators(const Manifest& m) {
  if (m.has("matrices")) {
    if (m.has("generators")) throw Error(ErrorCode::kSchemaViolation, "manifest: give either generators or matrices");
    std::vector<std::string> labels;
    if (m.has("labels")) labels = m.get_string_list("labels");
    return group::GenSet(m.get_int_matrices("matrices"), labels);
  }
  if (m.has("labels")) throw Error(ErrorCode::kSchemaViolation, "manifest: labels need explicit matrices");
  const std::string preset = m.get_string("generators", "sl2");
  if (preset == "sl2") return group::sl2_standard();
  if (preset == "unipotent3") return group::unipotent_pair(3);
  if (preset == "dwork4" || preset == "dwork4-ac") {
    const auto t = monodromy::build_monodromy(monodromy::family_catalog(monodromy::Family::kDwork, 4));
    if (preset == "dwork4") return group::GenSet({t.A, t.C}, {"A", "C"});
    return group::GenSet({t.A, t.A * t.C}, {"A", "AC"});
  }
  if (preset == "gamma44") return *rotation::integral_generators(rotation::gamma_generators(4, 4));
  throw Error(ErrorCode::kSchemaViolation, "manifest: unknown generator preset '" + preset + "'");
}

ResultBundle run_manifest(const Manifest& m) {
  validate(m);
  ResultBundle b;
  b.manifest = m;
  b.version = library_version();
  b.timestamp = utc_timestamp();
  Context ctx{m, b, std::nullopt};
  if (m.caps.wall_seconds)
    ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*m.caps.wall_seconds));
  try {
    switch (m.kind) {
      case Kind::kExpander: run_expander(ctx); break;
      case Kind::kMonodromy: run_monodromy(ctx); break;
      case Kind::kCartan: run_cartan(ctx); break;
      case Kind::kRotation: run_rotation(ctx); break;
      case Kind::kZaremba: run_zaremba(ctx); break;
      case Kind::kApollonian: run_apollonian(ctx); break;
      case Kind::kWalk: run_walk(ctx); break;
      case Kind::kBall: run_ball(ctx); break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaViolation) throw;
    b.items = std::max<std::size_t>(b.items, 1);
    ctx.fail("run", e);
  }
  return b;
}

nlohmann::json bundle_json(const ResultBundle& b) {
  json j;
  j["kind"] = std::string(to_string(b.manifest.kind));
  j["manifest"] = to_json(b.manifest);
  j["outputs"] = b.outputs;
  j["errors"] = json::array();
  for (const auto& e : b.errors) j["errors"].push_back({{"item", e.item}, {"code", e.code}, {"message", e.message}});
  j["status"] = b.status();
  j["exit_code"] = static_cast<int>(b.exit_code());
  j["version"] = b.version;
  j["seed"] = b.manifest.seed;
  return j;
}

std::vector<std::string> emit_report(const ResultBundle& b, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::string> files;
  write_file(dir / "result.json", dump_canonical(bundle_json(b)));
  files.push_back("result.json");
  if (b.manifest.format == Format::kCsv) {
    for (const auto& t : b.tables) {
      write_file(dir / (t.name + ".csv"), to_csv(t));
      files.push_back(t.name + ".csv");
    }
    if (!b.errors.empty()) {
      Table errors{"errors", {"item", "code", "message"}, {}};
      for (const auto& e : b.errors) errors.rows.push_back({e.item, e.code, e.message});
      write_file(dir / "errors.csv", to_csv(errors));
      files.push_back("errors.csv");
    }
  }
  const json provenance = {{"version", b.version}, {"timestamp", b.timestamp}, {"seed", b.manifest.seed},
                           {"manifest", to_text(b.manifest)}};
  write_file(dir / "provenance.json", dump_canonical(provenance));
  files.push_back("provenance.json");
  std::sort(files.begin(), files.end());
  write_file(dir / "index.json", dump_canonical({{"files", files}, {"kind", std::string(to_string(b.manifest.kind))}}));
  files.push_back("index.json");
  return files;
}

std::filesystem::path resolve_out_dir(const Manifest& m, const std::optional<std::string>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (m.out) return *m.out;
  if (const char* env = std::getenv("THINLAB_OUT_DIR"); env && *env) return env;
  return "thinlab-out";
}

}  // namespace thinlab::runner
