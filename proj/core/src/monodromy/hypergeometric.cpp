#include "thinlab/monodromy/hypergeometric.hpp"

#include <algorithm>
#include <map>

#include "thinlab/error.hpp"
#include "thinlab/exact/cyclotomic.hpp"

namespace thinlab::monodromy {
namespace {

Rational reduce_mod_one(Rational r) {
  r.canonicalize();
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(floor);
  out.canonicalize();
  return out;
}

Rational frac(long num, long den) {
  Rational r(num, den);
  return reduce_mod_one(r);
}

}  // namespace

std::string format_rational(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

HGParams make_params(std::vector<Rational> alpha, std::vector<Rational> beta) {
  if (alpha.empty() || alpha.size() != beta.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "hypergeometric parameters: alpha and beta must have the same nonzero length");
  }
  for (auto& a : alpha) a = reduce_mod_one(a);
  for (auto& b : beta) b = reduce_mod_one(b);
  for (const auto& a : alpha)
    for (const auto& b : beta)
      if (a == b) {
        throw Error(ErrorCode::kImprimitive,
                    "hypergeometric parameters: alpha - beta is an integer at " + format_rational(a));
      }
  return {alpha.size(), std::move(alpha), std::move(beta)};
}

IntPoly exponent_polynomial(std::span<const Rational> exponents) {
  // denominator -> numerator -> count
  std::map<unsigned long, std::map<unsigned long, unsigned>> orbits;
  for (const auto& e : exponents) {
    const Rational r = reduce_mod_one(e);
    if (!r.get_den().fits_ulong_p()) throw Error(ErrorCode::kNotIntegral, "exponent denominator too large");
    ++orbits[r.get_den().get_ui()][r.get_num().get_ui()];
  }
  IntPoly result{1};
  for (const auto& [d, numerators] : orbits) {
    const unsigned mult = numerators.begin()->second;
    const bool complete = numerators.size() == exact::euler_phi(d) &&
                          std::all_of(numerators.begin(), numerators.end(),
                                      [mult](const auto& kv) { return kv.second == mult; });
    if (!complete) {
      throw Error(ErrorCode::kNotIntegral,
                  "exponents with denominator " + std::to_string(d) + " do not form complete Galois orbits");
    }
    result = result * exact::pow(exact::cyclotomic_poly(d), mult);
  }
  return result;
}

IntMatrix companion(const IntPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw Error(ErrorCode::kNotMonic, "companion: need a monic polynomial of degree >= 1");
  const auto n = static_cast<std::size_t>(monic.degree());
  IntMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -monic[i];
  return m;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::kHalfShift: return "half-shift";
    case Family::kDwork: return "dwork";
    case Family::kHyperbolicGap: return "hyperbolic-gap";
    case Family::kHyperbolicTripleZero: return "hyperbolic-triple-zero";
  }
  return "unknown";
}

std::vector<Family> all_families() {
  return {Family::kHalfShift, Family::kDwork, Family::kHyperbolicGap, Family::kHyperbolicTripleZero};
}

Family parse_family(std::string_view name) {
  for (Family f : all_families())
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::kInvalidArgument, "unknown hypergeometric family '" + std::string(name) + "'");
}

HGParams family_catalog(Family f, std::size_t n) {
  const long N = static_cast<long>(n);
  const bool even = n % 2 == 0;
  auto fail = [&](const char* why) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(f)) + " family: " + why + " (n = " + std::to_string(n) + ")");
  };
  std::vector<Rational> alpha, beta;
  switch (f) {
    case Family::kHalfShift:
      if (!even || n < 2) fail("n must be even and >= 2");
      for (long k = 1; k <= N; ++k) alpha.push_back(frac(N + 1 + 2 * k, 2 * (N + 1)));
      beta.push_back(Rational(0));
      for (long j = 1; j < N; ++j) beta.push_back(frac(N + 2 * j, 2 * N));
      break;
    case Family::kDwork:
      if (!even || n < 4) fail("n must be even and >= 4");
      alpha.assign(n, Rational(0));
      for (long k = 1; k <= N; ++k) beta.push_back(frac(k, N + 1));
      break;
    case Family::kHyperbolicGap:
      if (even || n < 3) fail("n must be odd and >= 3");
      alpha.push_back(Rational(0));
      for (long k = 1; k <= N; ++k)
        if (2 * k != N + 1) alpha.push_back(frac(k, N + 1));
      beta.push_back(frac(1, 2));
      for (long k = 1; k < N; ++k) beta.push_back(frac(k, N));
      break;
    case Family::kHyperbolicTripleZero:
      if (even || n < 3) fail("n must be odd and >= 3");
      alpha.push_back(frac(1, 2));
      for (long k = 1; k < N; ++k) alpha.push_back(frac(2 * k - 1, 2 * N - 2));
      beta.assign(3, Rational(0));
      for (long k = 1; k <= N - 3; ++k) beta.push_back(frac(k, N - 2));
      break;
  }
  return make_params(std::move(alpha), std::move(beta));
}

MonodromyTriple build_monodromy(const HGParams& p) {
  if (p.alpha.size() != p.n || p.beta.size() != p.n) {
    throw Error(ErrorCode::kDimensionMismatch, "build_monodromy: exponent lists do not match n");
  }
  MonodromyTriple t;
  t.A = companion(exponent_polynomial(p.beta));
  t.B = companion(exponent_polynomial(p.alpha));
  const auto a_inv = t.A.inverse();
  if (!a_inv) throw Error(ErrorCode::kNotIntegral, "build_monodromy: A is not invertible over Z");
  t.C = *a_inv * t.B;
  if (exact::rank(t.C - IntMatrix::identity(p.n)) != 1) {
    throw Error(ErrorCode::kImprimitive, "build_monodromy: C - I does not have rank 1");
  }
  return t;
}

std::string_view to_string(ClosureTag t) noexcept {
  switch (t) {
    case ClosureTag::kFinite: return "finite";
    case ClosureTag::kOrthogonal: return "orthogonal";
    case ClosureTag::kSymplectic: return "symplectic";
    case ClosureTag::kDegenerate: return "degenerate";
    case ClosureTag::kUndetermined: return "undetermined";
  }
  return "unknown";
}

ClosureClass classify_closure(const MonodromyTriple& t) {
  const std::vector<IntMatrix> gens{t.A, t.B};
  const exact::FormSpace space = exact::fixed_form_space(gens);
  ClosureClass out;
  out.form_space_dim = space.dim();
  if (space.dim() != 1) return out;

  const exact::RatMatrix& f = space.basis.front();
  IntMatrix form = f.primitive_integer_multiple();
  if (f.is_antisymmetric()) {
    out.form = std::move(form);
    out.tag = exact::rank(*out.form) == t.A.dim() ? ClosureTag::kSymplectic : ClosureTag::kDegenerate;
    return out;
  }
  if (!f.is_symmetric()) return out;

  exact::Signature sig = exact::signature(exact::RatMatrix(form));
  if (sig.negative > sig.positive) {
    std::swap(sig.positive, sig.negative);
    for (std::size_t i = 0; i < form.dim(); ++i)
      for (std::size_t j = 0; j < form.dim(); ++j) form(i, j) = -form(i, j);
  }
  out.form = std::move(form);
  out.signature = sig;
  if (sig.zero > 0) {
    out.tag = ClosureTag::kDegenerate;
  } else if (sig.negative == 0) {
    out.tag = ClosureTag::kFinite;
  } else {
    out.tag = ClosureTag::kOrthogonal;
    out.hyperbolic = sig.negative == 1;
  }
  return out;
}

ClosureClass classify_closure(const HGParams& p) { return classify_closure(build_monodromy(p)); }

std::vector<AtlasEntry> calabi_yau_entries() {
  struct Row {
    long b[4][2];
    const char* status;
  };
  // Three are known arithmetic and the first (the quintic) is known thin. Of
  // the remaining ten, six are thin and four open, without an attribution
  // per entry.
  static const Row rows[] = {
      {{{1, 5}, {2, 5}, {3, 5}, {4, 5}}, "thin"},
      {{{1, 10}, {3, 10}, {7, 10}, {9, 10}}, "arithmetic"},
      {{{1, 2}, {1, 2}, {1, 2}, {1, 2}}, "thin_or_open"},
      {{{1, 3}, {1, 3}, {2, 3}, {2, 3}}, "thin_or_open"},
      {{{1, 3}, {1, 2}, {1, 2}, {2, 3}}, "thin_or_open"},
      {{{1, 4}, {1, 2}, {1, 2}, {3, 4}}, "thin_or_open"},
      {{{1, 8}, {3, 8}, {5, 8}, {7, 8}}, "thin_or_open"},
      {{{1, 6}, {1, 3}, {2, 3}, {5, 6}}, "thin_or_open"},
      {{{1, 12}, {5, 12}, {7, 12}, {11, 12}}, "thin_or_open"},
      {{{1, 4}, {1, 4}, {3, 4}, {3, 4}}, "thin_or_open"},
      {{{1, 4}, {1, 3}, {2, 3}, {3, 4}}, "thin_or_open"},
      {{{1, 6}, {1, 4}, {3, 4}, {5, 6}}, "arithmetic"},
      {{{1, 6}, {1, 6}, {5, 6}, {5, 6}}, "arithmetic"},
      {{{1, 6}, {1, 2}, {1, 2}, {5, 6}}, "thin_or_open"},
  };
  std::vector<AtlasEntry> out;
  std::size_t index = 0;
  for (const Row& row : rows) {
    std::vector<Rational> beta;
    for (const auto& b : row.b) beta.push_back(frac(b[0], b[1]));
    AtlasEntry e;
    e.name = "calabi-yau-" + std::to_string(++index);
    e.params = make_params(std::vector<Rational>(4, Rational(0)), std::move(beta));
    e.triple = build_monodromy(e.params);
    e.closure = classify_closure(e.triple);
    e.known_status = row.status;
    e.source = "Calabi-Yau threefold list";
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<AtlasEntry> monodromy_atlas(std::span<const Family> families, std::size_t n_max, bool include_calabi_yau) {
  std::vector<AtlasEntry> out;
  for (Family f : families) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      const bool even = n % 2 == 0;
      const bool valid = (f == Family::kHalfShift && even) || (f == Family::kDwork && even && n >= 4) ||
                         ((f == Family::kHyperbolicGap || f == Family::kHyperbolicTripleZero) && !even && n >= 3);
      if (!valid) continue;
      AtlasEntry e;
      e.name = std::string(to_string(f)) + "-" + std::to_string(n);
      e.family = f;
      e.params = family_catalog(f, n);
      e.triple = build_monodromy(e.params);
      e.closure = classify_closure(e.triple);
      switch (f) {
        case Family::kHalfShift: e.known_status = "arithmetic"; break;
        case Family::kDwork: e.known_status = n == 4 ? "thin" : "open"; break;
        default: e.known_status = n == 3 ? "arithmetic" : "thin"; break;
      }
      e.source = "parametric family";
      out.push_back(std::move(e));
    }
  }
  if (include_calabi_yau) {
    auto cy = calabi_yau_entries();
    std::move(cy.begin(), cy.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace thinlab::monodromy
