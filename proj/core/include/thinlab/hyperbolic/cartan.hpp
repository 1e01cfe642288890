#pragma once

#include <cstddef>
#include <cstdint>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::hyperbolic {

using exact::IntMatrix;
using Vector = std::vector<std::int64_t>;

// Integral symmetric bilinear form B(u, v) = u^T G v of signature (n-1, 1).
// Gram entries are limited to |g| <= 2^20 so that pairings of vectors with
// entries up to kMaxHeight stay inside 64 bits.
class QuadLattice {
 public:
  static constexpr std::int64_t kMaxGramEntry = std::int64_t{1} << 20;
  static constexpr std::int64_t kMaxHeight = std::int64_t{1} << 15;

  // Throws Error(kInvalidArgument) unless G is symmetric, within the entry
  // limit, nondegenerate and of signature (n-1, 1).
  explicit QuadLattice(const IntMatrix& gram);

  std::size_t dim() const noexcept { return n_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::int64_t g(std::size_t i, std::size_t j) const { return g_[i * n_ + j]; }
  std::int64_t pair(const Vector& u, const Vector& v) const;
  Vector apply(const Vector& v) const;  // G v

 private:
  std::size_t n_ = 0;
  IntMatrix gram_;
  std::vector<std::int64_t> g_;
};

// Every v with max|v_i| <= height and B(v, v) = -2, in lexicographic order.
// The first n-1 coordinates are scanned; the last is solved from the
// quadratic exactly.
std::vector<Vector> cartan_roots(const QuadLattice& L, std::int64_t height);

// r_v(x) = x + B(x, v) v, i.e. I + v (G v)^T. Throws Error(kNotCartanRoot)
// when B(v, v) != -2.
IntMatrix cartan_involution(const QuadLattice& L, const Vector& v);

struct Component {
  std::vector<std::size_t> vertices;  // ascending indices into MinDistGraph::vertices
  std::size_t edges = 0;
  // (B(v,v), B(v,w), B(w,w)) over the component's edges -> count.
  std::map<std::array<std::int64_t, 3>, std::size_t> edge_gram_census;
};

struct MinDistGraph {
  std::int64_t height = 0;
  std::vector<Vector> vertices;
  // Pairs i < j with B(v_i, v_j) = -3, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Ordered by smallest member.
  std::vector<Component> components;
};

// Throws CapExceeded when the root count exceeds max_vertices.
MinDistGraph min_distance_graph(const QuadLattice& L, std::int64_t height, std::size_t max_vertices = 20'000);

struct Fingerprint {
  std::vector<std::size_t> degree_sequence;  // descending
  std::size_t diameter = 0;
  // Multiset of B(v, w) over unordered pairs of distinct vertices.
  std::map<std::int64_t, std::size_t> pairings;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint component_fingerprint(const QuadLattice& L, const MinDistGraph& g, std::size_t component_id);

}  // namespace thinlab::hyperbolic
