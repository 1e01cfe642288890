#include "thinlab/diophantine/apollonian.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "thinlab/error.hpp"

namespace thinlab::diophantine {
namespace {

__extension__ typedef __int128 i128;

struct QuadrupleHash {
  std::size_t operator()(const Quadruple& x) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : x) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::int64_t descartes_form(const Quadruple& x) {
  i128 squares = 0, sum = 0;
  for (auto v : x) {
    squares += static_cast<i128>(v) * v;
    sum += v;
  }
  return static_cast<std::int64_t>(2 * squares - sum * sum);
}

Quadruple swap_move(const Quadruple& x, std::size_t i) {
  if (i >= 4) throw Error(ErrorCode::kInvalidArgument, "swap_move: index out of range");
  Quadruple y = x;
  std::int64_t others = 0;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != i) others += x[j];
  y[i] = 2 * others - x[i];
  return y;
}

CurvatureReport apollonian_orbit(const Quadruple& root, std::int64_t bound, const ApollonianOptions& options) {
  if (descartes_form(root) != 0) throw Error(ErrorCode::kOffQuadric, "apollonian_orbit: root is not a Descartes quadruple");
  if (bound < *std::max_element(root.begin(), root.end()))
    throw Error(ErrorCode::kInvalidArgument, "apollonian_orbit: bound is below the root's largest curvature");
  if (bound > (std::int64_t{1} << 40)) throw Error(ErrorCode::kInvalidArgument, "apollonian_orbit: bound exceeds 2^40");
  if (options.modulus < 1) throw Error(ErrorCode::kInvalidArgument, "apollonian_orbit: modulus must be >= 1");

  CurvatureReport report;
  report.bound = bound;
  report.modulus = options.modulus;

  std::unordered_set<Quadruple, QuadrupleHash> seen{root};
  std::deque<Quadruple> frontier{root};
  const bool bfs = options.traversal == Traversal::kBreadthFirst;
  while (!frontier.empty()) {
    Quadruple x;
    if (bfs) {
      x = frontier.front();
      frontier.pop_front();
    } else {
      x = frontier.back();
      frontier.pop_back();
    }
    ++report.quadruples;
    if (options.visitor) options.visitor(x);
    for (auto v : x) ++report.curvatures[v];
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t i = bfs ? k : 3 - k;
      const Quadruple y = swap_move(x, i);
      if (y[i] > bound) continue;
      if (descartes_form(y) != 0) throw Error(ErrorCode::kOffQuadric, "apollonian_orbit: swap left the quadric");
      if (!seen.insert(y).second) continue;
      if (seen.size() > options.max_quadruples) throw CapExceeded("apollonian quadruples", options.max_quadruples);
      frontier.push_back(y);
    }
  }

  const auto m = options.modulus;
  report.residue_counts.assign(static_cast<std::size_t>(m), 0);
  std::size_t positive = 0;
  for (const auto& [c, count] : report.curvatures) {
    if (c <= 0) continue;
    ++positive;
    ++report.residue_counts[static_cast<std::size_t>(c % m)];
  }
  for (std::int64_t r = 0; r < m; ++r)
    if (report.residue_counts[static_cast<std::size_t>(r)] > 0) report.residues_covered.push_back(r);
  report.density = static_cast<double>(positive) / static_cast<double>(bound);
  return report;
}

}  // namespace thinlab::diophantine
