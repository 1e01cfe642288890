#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thinlab/exact/poly.hpp"
#include "thinlab/group/gen_set.hpp"

namespace thinlab::group {

using exact::IntPoly;

enum class Reducibility { kIrreducible, kReducible, kUndetermined };

struct ReducibilityVerdict {
  Reducibility verdict = Reducibility::kUndetermined;
  // Prime p <= 100 modulo which the polynomial is irreducible.
  std::optional<std::uint32_t> witness_prime;
  // Proper factor whose exact division has been checked.
  std::optional<IntPoly> factor;
};

// Irreducibility over F_p of a monic integer polynomial (Rabin's test).
bool irreducible_mod_p(const IntPoly& monic, std::uint32_t p);

// Sound one-sided certificates for a monic polynomial: irreducible modulo a
// prime <= 100, or an exact factor (degree-2 discriminant, rational root,
// repeated factor, cyclotomic factor, or a factor lifted from the trace
// polynomial of a reciprocal polynomial). Anything else is Undetermined.
ReducibilityVerdict classify_reducibility(const IntPoly& monic);

struct ReducibilityRow {
  std::size_t length = 0;
  std::size_t trials = 0;
  std::size_t irreducible = 0;
  std::size_t reducible = 0;
  std::size_t undetermined = 0;

  double irreducible_fraction() const { return trials ? double(irreducible) / double(trials) : 0.0; }
  double reducible_fraction() const { return trials ? double(reducible) / double(trials) : 0.0; }
  double undetermined_fraction() const { return trials ? double(undetermined) / double(trials) : 0.0; }
};

struct ReducibilityReport {
  std::uint64_t seed = 0;
  std::vector<ReducibilityRow> rows;
};

// Seed for trial `trial` at walk length `length`, derived with splitmix64.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t length, std::size_t trial);

ReducibilityReport walk_charpoly_stats(const GenSet& s, std::span<const std::size_t> lengths, std::size_t trials,
                                       std::uint64_t seed, std::size_t threads = 1);

}  // namespace thinlab::group
