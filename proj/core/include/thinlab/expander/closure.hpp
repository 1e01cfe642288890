#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "thinlab/expander/mod_matrix.hpp"
#include "thinlab/group/gen_set.hpp"

namespace thinlab::expander {

using group::GenSet;

enum class Onto { kYes, kNo, kUnknown };
std::string_view to_string(Onto onto) noexcept;

struct ClosureOptions {
  // The expansion theorem is stated for squarefree q; other moduli are
  // exploratory and must be requested explicitly.
  bool allow_non_squarefree = false;
  std::size_t max_elements = 10'000'000;
};

struct ClosureResult {
  std::uint64_t q = 0;
  std::size_t n = 0;
  // Size of the generated subgroup (or of the partial closure on overflow).
  std::size_t order = 0;
  bool overflow = false;
  // |SL_n(Z/q)| when the generators are known to target SL_n; see
  // congruence_closure.
  std::optional<Integer> target_order;
  Onto onto = Onto::kUnknown;
  std::optional<Integer> index;
};

// The generated subgroup of GL_n(Z/q) together with its Cayley graph.
struct Closure {
  ClosureResult result;
  std::size_t degree = 0;
  // Residues of vertex v are vertices[v*n*n .. (v+1)*n*n), in BFS order from I.
  std::vector<std::uint32_t> vertices;
  // neighbors[v*degree + s] = index of s*x_v. Complete only without overflow.
  std::vector<std::uint32_t> neighbors;
};

// BFS closure of pi_q(S). The SL_n order formula is used as the target only
// when every generator has determinant 1 and, for n >= 3, the generators
// preserve no nonzero bilinear form (otherwise the Zariski closure is a
// proper subgroup such as Sp_n or O_n and onto is reported as unknown).
// Overflow is reported in the result, never thrown.
Closure congruence_closure(const GenSet& s, std::uint64_t q, const ClosureOptions& options = {});

ClosureResult closure_mod(const GenSet& s, std::uint64_t q, const ClosureOptions& options = {});

}  // namespace thinlab::expander
