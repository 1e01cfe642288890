#include "thinlab/exact/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "thinlab/error.hpp"

namespace thinlab::exact {

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "IntMatrix: expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "IntMatrix: ragged rows");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "IntMatrix: matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer IntMatrix::trace() const {
  Integer s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Integer> a = entries_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n_ + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n_ && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  Integer det = at(n_ - 1, n_ - 1);
  return sign > 0 ? det : Integer(-det);
}

std::optional<IntMatrix> IntMatrix::inverse() const {
  // Gauss-Jordan over Q on [M | I].
  const std::size_t w = 2 * n_;
  std::vector<Rational> a(n_ * w);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) a[i * w + j] = (*this)(i, j);
    a[i * w + n_ + i] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a[piv * w + col] == 0) ++piv;
    if (piv == n_) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[piv * w + j], a[col * w + j]);
    Rational inv = 1 / a[col * w + col];
    for (std::size_t j = 0; j < w; ++j) a[col * w + j] *= inv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || a[i * w + col] == 0) continue;
      Rational f = a[i * w + col];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] -= f * a[col * w + j];
    }
  }
  IntMatrix inv(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& v = a[i * w + n_ + j];
      if (v.get_den() != 1) return std::nullopt;
      inv(i, j) = v.get_num();
    }
  }
  return inv;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Integer IntMatrix::max_abs_entry() const {
  Integer best = 0;
  for (const auto& e : entries_)
    if (abs(e) > best) best = abs(e);
  return best;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kDimensionMismatch, "IntMatrix product");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  Integer acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
      }
      c(i, j) = acc;
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kDimensionMismatch, "IntMatrix sum");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kDimensionMismatch, "IntMatrix difference");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.n_ == b.n_ && std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ m.dim();
  for (const auto& e : m.entries()) {
    const mpz_srcptr z = e.get_mpz_t();
    std::size_t eh = static_cast<std::size_t>(mpz_sgn(z)) * 0x51ed27ULL;
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) eh = eh * 0x100000001b3ULL ^ mpz_getlimbn(z, i);
    h ^= eh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  IntMatrix result = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::size_t rank(const IntMatrix& m) { return RatMatrix(m).rank(); }

RatMatrix::RatMatrix(const IntMatrix& m) : n_(m.dim()), entries_(m.dim() * m.dim()) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = m.entries()[i];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
}

bool RatMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::size_t RatMatrix::rank() const {
  std::vector<Rational> a = entries_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_ && r < n_; ++col) {
    std::size_t piv = r;
    while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
    if (piv == n_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[r * n_ + j]);
    for (std::size_t i = r + 1; i < n_; ++i) {
      if (a[i * n_ + col] == 0) continue;
      Rational f = a[i * n_ + col] / a[r * n_ + col];
      for (std::size_t j = col; j < n_; ++j) a[i * n_ + j] -= f * a[r * n_ + j];
    }
    ++r;
  }
  return r;
}

IntMatrix RatMatrix::primitive_integer_multiple() const {
  Integer lcm_den = 1;
  for (const auto& e : entries_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.get_den_mpz_t());
  IntMatrix m(n_);
  Integer g = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    Rational scaled = entries_[i] * lcm_den;
    m(i / n_, i % n_) = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
  }
  if (g == 0) return m;
  int sign = 1;
  for (const auto& e : m.entries()) {
    if (e != 0) {
      sign = sgn(e);
      break;
    }
  }
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Integer v = m(i, j) / g;
      out(i, j) = sign > 0 ? v : Integer(-v);
    }
  return out;
}

std::string RatMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kDimensionMismatch, "RatMatrix product");
  const std::size_t n = a.n_;
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.n_ == b.n_ && std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
}

}  // namespace thinlab::exact
