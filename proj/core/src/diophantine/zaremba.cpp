#include "thinlab/diophantine/zaremba.hpp"

#include <numeric>

#include "thinlab/error.hpp"
#include "thinlab/parallel.hpp"

namespace thinlab::diophantine {

std::vector<std::uint64_t> partial_quotients(std::uint64_t b, std::uint64_t q) {
  if (b < 1 || b > q) throw Error(ErrorCode::kInvalidArgument, "partial_quotients: need 1 <= b <= q");
  std::vector<std::uint64_t> out;
  std::uint64_t num = q, den = b;
  while (den != 0) {
    out.push_back(num / den);
    const std::uint64_t r = num % den;
    num = den;
    den = r;
  }
  return out;
}

bool bounded_expansion(std::uint64_t b, std::uint64_t q, std::uint64_t A) {
  if (b < 1 || b > q) throw Error(ErrorCode::kInvalidArgument, "bounded_expansion: need 1 <= b <= q");
  std::uint64_t num = q, den = b;
  for (;;) {
    const std::uint64_t a = num / den;
    const std::uint64_t r = num % den;
    if (r == 0) return a <= A + 1;  // last quotient may be split as (a - 1, 1)
    if (a > A) return false;
    num = den;
    den = r;
  }
}

ZarembaReport zaremba_scan(std::uint64_t A, std::uint64_t Q, std::size_t threads) {
  if (A < 1 || Q < 1) throw Error(ErrorCode::kInvalidArgument, "zaremba_scan: need A >= 1 and Q >= 1");
  ZarembaReport report;
  report.A = A;
  report.Q = Q;
  report.rows.resize(Q);
  parallel_for(Q, threads, [&](std::size_t i) {
    ZarembaRow& row = report.rows[i];
    row.q = i + 1;
    for (std::uint64_t b = 1; b <= row.q; ++b) {
      if (std::gcd(b, row.q) != 1) continue;
      if (bounded_expansion(b, row.q, A)) {
        row.achieved = true;
        row.witness = b;
        break;
      }
    }
  });
  for (const auto& row : report.rows) (row.achieved ? report.achieved : report.exceptions).push_back(row.q);
  report.density = static_cast<double>(report.achieved.size()) / static_cast<double>(Q);
  return report;
}

}  // namespace thinlab::diophantine
