#pragma once

#include <cstdint>
#include <vector>

namespace thinlab::diophantine {

// Partial quotients of b/q = [0; a_1, ..., a_k] in the canonical form
// (a_k >= 2 unless b/q = 1). Requires 1 <= b <= q.
std::vector<std::uint64_t> partial_quotients(std::uint64_t b, std::uint64_t q);

// True when b/q has an expansion with every partial quotient <= A: either
// the canonical one or the variant ending in (a_k - 1, 1).
bool bounded_expansion(std::uint64_t b, std::uint64_t q, std::uint64_t A);

struct ZarembaRow {
  std::uint64_t q = 0;
  bool achieved = false;
  std::uint64_t witness = 0;  // smallest admissible b, 0 when none
};

struct ZarembaReport {
  std::uint64_t A = 0;
  std::uint64_t Q = 0;
  std::vector<ZarembaRow> rows;  // q = 1..Q
  std::vector<std::uint64_t> achieved;
  std::vector<std::uint64_t> exceptions;
  double density = 0.0;  // |achieved| / Q
};

// q = 1 counts as achieved (empty expansion).
ZarembaReport zaremba_scan(std::uint64_t A, std::uint64_t Q, std::size_t threads = 1);

}  // namespace thinlab::diophantine
