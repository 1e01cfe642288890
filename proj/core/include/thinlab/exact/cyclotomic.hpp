#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thinlab/exact/poly.hpp"

namespace thinlab::exact {

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

// Phi_d, built from the Moebius product over divisors of d.
IntPoly cyclotomic_poly(std::uint64_t d);

struct CyclotomicFactor {
  std::uint64_t index = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicVerdict {
  bool cyclotomic = false;
  // Sorted by index. Empty when not cyclotomic (or for p = 1).
  std::vector<CyclotomicFactor> factors;
};

// Decides whether a monic p is a product of cyclotomic polynomials by peeling
// off every Phi_d with phi(d) <= deg p. Throws ErrorCode::kNotMonic otherwise.
CyclotomicVerdict cyclotomic_factor(const IntPoly& p);

// prod Phi_d^e
IntPoly expand_cyclotomic(std::span<const CyclotomicFactor> factors);

}  // namespace thinlab::exact
