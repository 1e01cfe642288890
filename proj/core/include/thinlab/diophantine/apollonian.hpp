#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace thinlab::diophantine {

using Quadruple = std::array<std::int64_t, 4>;

// 2 (a^2 + b^2 + c^2 + d^2) - (a + b + c + d)^2, zero on Descartes quadruples.
std::int64_t descartes_form(const Quadruple& x);

// Replaces x_i by 2 (sum of the others) - x_i.
Quadruple swap_move(const Quadruple& x, std::size_t i);

enum class Traversal { kBreadthFirst, kDepthFirstReversed };

struct ApollonianOptions {
  std::int64_t modulus = 24;
  std::size_t max_quadruples = 10'000'000;
  Traversal traversal = Traversal::kBreadthFirst;
  // Called once per visited quadruple, root included.
  std::function<void(const Quadruple&)> visitor;
};

struct CurvatureReport {
  std::int64_t bound = 0;
  std::int64_t modulus = 24;
  std::size_t quadruples = 0;
  // Curvature -> number of visited quadruples containing it (values <= bound).
  std::map<std::int64_t, std::size_t> curvatures;
  // Residue -> number of distinct positive curvatures in that class.
  std::vector<std::size_t> residue_counts;
  std::vector<std::int64_t> residues_covered;
  // Distinct positive curvatures <= bound, divided by bound.
  double density = 0.0;
};

// Orbit of `root` under the four swap moves, pruning quadruples whose largest
// entry exceeds `bound`. Throws Error(kOffQuadric) for a root off the quadric
// and CapExceeded past max_quadruples.
CurvatureReport apollonian_orbit(const Quadruple& root, std::int64_t bound, const ApollonianOptions& options = {});

}  // namespace thinlab::diophantine
