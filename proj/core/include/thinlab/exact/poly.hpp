#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::exact {

// Univariate polynomial over Z. Coefficients are stored lowest degree first;
// the zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly monomial(const Integer& coefficient, std::size_t degree);
  // t^k - 1
  static IntPoly power_minus_one(std::size_t k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  // Coefficient of t^i (zero past the degree).
  Integer operator[](std::size_t i) const;

  Integer eval(const Integer& x) const;
  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  IntPoly negated() const;

  std::string to_string(char var = 't') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

 private:
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a monic polynomial stays inside Z[t].
PolyDivision divide_by_monic(const IntPoly& numerator, const IntPoly& monic_divisor);

// Quotient a / b when b divides a in Z[t]; empty otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Q, normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, unsigned exponent);

// det(tI - M), computed with Faddeev-LeVerrier recursion. All divisions in the
// recursion are exact, so the computation never leaves Z.
IntPoly charpoly(const IntMatrix& m);

}  // namespace thinlab::exact
