#include "thinlab/expander/mod_matrix.hpp"

#include <utility>

#include "thinlab/error.hpp"

namespace thinlab::expander {
namespace {

void check_modulus(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2, got " + std::to_string(q));
  if (q >= (1ULL << 31)) throw Error(ErrorCode::kInvalidArgument, "modulus must be < 2^31");
}

}  // namespace

ModMatrix::ModMatrix(std::size_t n, std::uint64_t q) : n_(n), q_(q), entries_(n * n, 0) { check_modulus(q); }

ModMatrix::ModMatrix(std::size_t n, std::uint64_t q, std::vector<std::uint32_t> entries)
    : n_(n), q_(q), entries_(std::move(entries)) {
  check_modulus(q);
  if (entries_.size() != n * n) throw Error(ErrorCode::kDimensionMismatch, "ModMatrix: wrong entry count");
  for (auto e : entries_)
    if (e >= q) throw Error(ErrorCode::kInvalidArgument, "ModMatrix: entry out of range");
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t q) {
  ModMatrix m(n, q);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

std::uint64_t ModMatrix::determinant() const {
  // Integer Bareiss on the residues, reduced at the end.
  IntMatrix lifted(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) lifted(i / n_, i % n_) = static_cast<unsigned long>(entries_[i]);
  Integer det = lifted.determinant();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), det.get_mpz_t(), q_);
  return r.get_ui();
}

bool ModMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (entries_[i * n_ + j] != (i == j ? 1U : 0U)) return false;
  return true;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.n_ != b.n_ || a.q_ != b.q_) throw Error(ErrorCode::kDimensionMismatch, "ModMatrix product");
  const std::size_t n = a.n_;
  ModMatrix c(n, a.q_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc = (acc + std::uint64_t{a.entries_[i * n + k]} * b.entries_[k * n + j]) % a.q_;
      c.entries_[i * n + j] = static_cast<std::uint32_t>(acc);
    }
  return c;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t q) {
  check_modulus(q);
  std::vector<std::uint32_t> entries;
  entries.reserve(m.dim() * m.dim());
  Integer r;
  for (const auto& e : m.entries()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), q);
    entries.push_back(static_cast<std::uint32_t>(r.get_ui()));
  }
  return ModMatrix(m.dim(), q, std::move(entries));
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t q) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    unsigned e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (q > 1) out.emplace_back(q, 1);
  return out;
}

bool is_squarefree(std::uint64_t q) {
  for (const auto& [p, e] : factorize(q))
    if (e > 1) return false;
  return true;
}

Integer sl_order(std::size_t n, std::uint64_t q) {
  Integer order = 1;
  for (const auto& [p, e] : factorize(q)) {
    const Integer pz(static_cast<unsigned long>(p));
    Integer local;
    mpz_pow_ui(local.get_mpz_t(), pz.get_mpz_t(), n * (n - 1) / 2);
    for (std::size_t k = 2; k <= n; ++k) {
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
      local *= pk - 1;
    }
    Integer lift;
    mpz_pow_ui(lift.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>((e - 1) * (n * n - 1)));
    order *= local * lift;
  }
  return order;
}

}  // namespace thinlab::expander
