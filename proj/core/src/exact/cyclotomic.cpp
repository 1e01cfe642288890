#include "thinlab/exact/cyclotomic.hpp"

#include "thinlab/error.hpp"

namespace thinlab::exact {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(std::uint64_t n) {
  if (n == 0) return 0;
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly cyclotomic_poly(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "cyclotomic_poly: index must be positive");
  IntPoly numerator{1};
  IntPoly denominator{1};
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = mobius(d / e);
    if (mu == 1) numerator = numerator * IntPoly::power_minus_one(e);
    if (mu == -1) denominator = denominator * IntPoly::power_minus_one(e);
  }
  // denominator is +-monic; the quotient is exact.
  auto q = exact_quotient(numerator, denominator);
  if (!q) throw Error(ErrorCode::kInvalidArgument, "cyclotomic_poly: inexact Moebius quotient");
  return *q;
}

CyclotomicVerdict cyclotomic_factor(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorCode::kNotMonic, "cyclotomic_factor: input must be monic");
  CyclotomicVerdict verdict;
  IntPoly rest = p;
  const auto deg = static_cast<std::uint64_t>(p.degree());
  // phi(d) >= sqrt(d / 2), so every Phi_d of degree <= deg has d <= 2 deg^2.
  const std::uint64_t d_max = 2 * deg * deg + 2;
  for (std::uint64_t d = 1; d <= d_max && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree())) continue;
    const IntPoly phi = cyclotomic_poly(d);
    unsigned mult = 0;
    for (;;) {
      PolyDivision div = divide_by_monic(rest, phi);
      if (!div.remainder.is_zero()) break;
      rest = std::move(div.quotient);
      ++mult;
    }
    if (mult) verdict.factors.push_back({d, mult});
  }
  if (rest.degree() != 0) {
    verdict.factors.clear();
    return verdict;
  }
  verdict.cyclotomic = true;
  return verdict;
}

IntPoly expand_cyclotomic(std::span<const CyclotomicFactor> factors) {
  IntPoly out{1};
  for (const auto& f : factors) out = out * pow(cyclotomic_poly(f.index), f.multiplicity);
  return out;
}

}  // namespace thinlab::exact
