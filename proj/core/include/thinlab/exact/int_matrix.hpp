#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thinlab::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// Square matrix of arbitrary-precision integers, stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::size_t n, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t dim() const noexcept { return n_; }
  std::span<const Integer> entries() const noexcept { return entries_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  IntMatrix transpose() const;
  Integer trace() const;
  // Fraction-free Bareiss elimination.
  Integer determinant() const;
  bool is_unimodular() const { return abs(determinant()) == 1; }
  // Exact inverse; nullopt unless the determinant is +1 or -1.
  std::optional<IntMatrix> inverse() const;
  bool is_identity() const;
  Integer max_abs_entry() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

IntMatrix power(const IntMatrix& m, unsigned exponent);

// Rank over Q.
std::size_t rank(const IntMatrix& m);

// Square matrix over Q, used for invariant forms.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  explicit RatMatrix(const IntMatrix& m);

  std::size_t dim() const noexcept { return n_; }
  std::span<const Rational> entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  std::size_t rank() const;
  // Integer multiple with coprime entries and positive first nonzero entry.
  IntMatrix primitive_integer_multiple() const;

  std::string to_string() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace thinlab::exact
