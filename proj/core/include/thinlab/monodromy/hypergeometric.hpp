#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thinlab/exact/form_space.hpp"
#include "thinlab/exact/int_matrix.hpp"
#include "thinlab/exact/poly.hpp"

namespace thinlab::monodromy {

using exact::IntMatrix;
using exact::Integer;
using exact::IntPoly;
using exact::Rational;

// Exponent data of a hypergeometric group H(alpha, beta). Entries are kept
// reduced into [0, 1).
struct HGParams {
  std::size_t n = 0;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

// Reduces the exponents mod 1 and checks alpha_i != beta_j for all i, j
// (throws Error(kImprimitive) otherwise).
HGParams make_params(std::vector<Rational> alpha, std::vector<Rational> beta);

// prod_j (t - exp(2 pi i a_j)) as an integer polynomial. Throws
// Error(kNotIntegral) unless the exponents form whole Galois orbits.
IntPoly exponent_polynomial(std::span<const Rational> exponents);

// Companion matrix with 1s on the subdiagonal and last column -p_0..-p_{n-1}.
IntMatrix companion(const IntPoly& monic);

enum class Family { kHalfShift, kDwork, kHyperbolicGap, kHyperbolicTripleZero };

std::string_view to_string(Family f) noexcept;
// Accepts the names printed by to_string.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

// Parametric families:
//   half-shift (n even):    alpha_k = 1/2 + k/(n+1), beta = (0, 1/2 + j/n)
//   dwork (n even, >= 4):   alpha = 0^n, beta_k = k/(n+1)
//   hyperbolic-gap (n odd): alpha = (0, k/(n+1) for k != (n+1)/2), beta = (1/2, k/n)
//   hyperbolic-triple-zero (n odd):
//                           alpha = (1/2, (2k-1)/(2n-2)), beta = (0, 0, 0, k/(n-2))
HGParams family_catalog(Family f, std::size_t n);

// A carries the beta exponents (loop about 0), B the alpha exponents (loop
// about infinity), C = A^-1 B (loop about 1).
struct MonodromyTriple {
  IntMatrix A;
  IntMatrix B;
  IntMatrix C;
};

// Throws Error(kNotIntegral) for non-integral exponent data; asserts that C
// is a pseudo-reflection.
MonodromyTriple build_monodromy(const HGParams& p);

enum class ClosureTag { kFinite, kOrthogonal, kSymplectic, kDegenerate, kUndetermined };

std::string_view to_string(ClosureTag t) noexcept;

struct ClosureClass {
  ClosureTag tag = ClosureTag::kUndetermined;
  // Dimension of the space of forms fixed by A and B.
  std::size_t form_space_dim = 0;
  // Primitive integral invariant form, when the space is one-dimensional.
  std::optional<IntMatrix> form;
  // Symmetric forms only, normalized so positive >= negative.
  std::optional<exact::Signature> signature;
  // Orthogonal with signature (n-1, 1).
  bool hyperbolic = false;
};

ClosureClass classify_closure(const HGParams& p);
ClosureClass classify_closure(const MonodromyTriple& t);

// Curated literature status; never computed.
struct AtlasEntry {
  std::string name;
  std::optional<Family> family;
  HGParams params;
  MonodromyTriple triple;
  ClosureClass closure;
  std::string known_status;  // "arithmetic", "thin", "thin_or_open", "open"
  std::string source;
};

// The 14 rank-4 parameters with alpha = 0 attached to Calabi-Yau threefolds.
std::vector<AtlasEntry> calabi_yau_entries();

// Every valid n <= n_max for each family, followed by the Calabi-Yau entries
// when `include_calabi_yau` is set.
std::vector<AtlasEntry> monodromy_atlas(std::span<const Family> families, std::size_t n_max,
                                        bool include_calabi_yau = true);

std::string format_rational(const Rational& r);

}  // namespace thinlab::monodromy
