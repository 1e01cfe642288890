#include "thinlab/hyperbolic/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "thinlab/error.hpp"
#include "thinlab/exact/form_space.hpp"

namespace thinlab::hyperbolic {
namespace {

__extension__ typedef __int128 i128;

// floor(sqrt(x)) for x >= 0, exact.
i128 isqrt(i128 x) {
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

QuadLattice::QuadLattice(const IntMatrix& gram) : n_(gram.dim()), gram_(gram), g_(n_ * n_) {
  if (n_ < 2) throw Error(ErrorCode::kInvalidArgument, "quadratic lattice: dimension must be >= 2");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& e = gram(i, j);
      if (e != gram(j, i)) throw Error(ErrorCode::kInvalidArgument, "quadratic lattice: Gram matrix is not symmetric");
      if (abs(e) > kMaxGramEntry) throw Error(ErrorCode::kInvalidArgument, "quadratic lattice: Gram entry exceeds 2^20");
      g_[i * n_ + j] = e.get_si();
    }
  }
  const exact::Signature sig = exact::signature(exact::RatMatrix(gram));
  if (sig.zero != 0 || sig.negative != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadratic lattice: signature " + sig.to_string() + " is not (n-1, 1) nondegenerate");
  }
}

std::int64_t QuadLattice::pair(const Vector& u, const Vector& v) const {
  if (u.size() != n_ || v.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "quadratic lattice: vector size");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += g_[i * n_ + j] * v[j];
    acc += u[i] * row;
  }
  return acc;
}

Vector QuadLattice::apply(const Vector& v) const {
  Vector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += g_[i * n_ + j] * v[j];
  return out;
}

std::vector<Vector> cartan_roots(const QuadLattice& L, std::int64_t height) {
  if (height < 1) throw Error(ErrorCode::kInvalidArgument, "cartan_roots: height must be >= 1");
  if (height > QuadLattice::kMaxHeight) throw Error(ErrorCode::kInvalidArgument, "cartan_roots: height exceeds 2^15");
  const std::size_t n = L.dim();
  const std::size_t last = n - 1;
  const i128 a = L.g(last, last);
  std::vector<Vector> roots;
  Vector v(n, -height);
  v[last] = 0;
  for (;;) {
    // B(v, v) = a x^2 + 2 s x + c with x the last coordinate.
    i128 s = 0, c = 0;
    for (std::size_t i = 0; i < last; ++i) {
      s += static_cast<i128>(L.g(i, last)) * v[i];
      for (std::size_t j = 0; j < last; ++j) c += static_cast<i128>(v[i]) * L.g(i, j) * v[j];
    }
    c += 2;  // a x^2 + 2 s x + c = 0
    auto accept = [&](i128 x) {
      if (x < -height || x > height) return;
      if (a * x * x + 2 * s * x + c != 0) return;
      v[last] = static_cast<std::int64_t>(x);
      roots.push_back(v);
    };
    if (a == 0) {
      if (s != 0 && c % (2 * s) == 0) accept(-c / (2 * s));
    } else {
      const i128 disc = s * s - a * c;  // quarter discriminant
      if (disc >= 0) {
        const i128 r = isqrt(disc);
        if (r * r == disc) {
          if ((-s + r) % a == 0) accept((-s + r) / a);
          if (r != 0 && (-s - r) % a == 0) accept((-s - r) / a);
        }
      }
    }
    std::size_t k = last;
    while (k > 0 && v[k - 1] == height) v[--k] = -height;
    if (k == 0) break;
    ++v[k - 1];
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

IntMatrix cartan_involution(const QuadLattice& L, const Vector& v) {
  if (L.pair(v, v) != -2) throw Error(ErrorCode::kNotCartanRoot, "cartan_involution: B(v, v) != -2");
  const std::size_t n = L.dim();
  const Vector gv = L.apply(v);
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) += exact::Integer(static_cast<long>(v[i])) * static_cast<long>(gv[j]);
  return r;
}

MinDistGraph min_distance_graph(const QuadLattice& L, std::int64_t height, std::size_t max_vertices) {
  MinDistGraph g;
  g.height = height;
  g.vertices = cartan_roots(L, height);
  if (g.vertices.size() > max_vertices) throw CapExceeded("min-distance graph vertices", max_vertices);
  const std::size_t nv = g.vertices.size();
  const std::size_t n = L.dim();
  std::vector<Vector> gv(nv);
  for (std::size_t i = 0; i < nv; ++i) gv[i] = L.apply(g.vertices[i]);

  UnionFind uf(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      std::int64_t b = 0;
      for (std::size_t k = 0; k < n; ++k) b += g.vertices[j][k] * gv[i][k];
      if (b == -3) {
        g.edges.emplace_back(i, j);
        uf.unite(i, j);
      }
    }
  }
  std::vector<std::size_t> slot(nv, nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const std::size_t root = uf.find(i);
    if (slot[root] == nv) {
      slot[root] = g.components.size();
      g.components.emplace_back();
    }
    g.components[slot[root]].vertices.push_back(i);
  }
  for (const auto& [i, j] : g.edges) {
    Component& c = g.components[slot[uf.find(i)]];
    ++c.edges;
    ++c.edge_gram_census[{L.pair(g.vertices[i], g.vertices[i]), L.pair(g.vertices[i], g.vertices[j]),
                          L.pair(g.vertices[j], g.vertices[j])}];
  }
  return g;
}

Fingerprint component_fingerprint(const QuadLattice& L, const MinDistGraph& g, std::size_t component_id) {
  if (component_id >= g.components.size()) throw Error(ErrorCode::kInvalidArgument, "component_fingerprint: no such component");
  const auto& members = g.components[component_id].vertices;
  const std::size_t m = members.size();
  std::vector<std::vector<std::size_t>> adj(m);
  Fingerprint fp;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::int64_t value = L.pair(g.vertices[members[a]], g.vertices[members[b]]);
      ++fp.pairings[value];
      if (value == -3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  for (const auto& nbrs : adj) fp.degree_sequence.push_back(nbrs.size());
  std::sort(fp.degree_sequence.rbegin(), fp.degree_sequence.rend());
  std::vector<std::size_t> dist(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::fill(dist.begin(), dist.end(), m);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      fp.diameter = std::max(fp.diameter, dist[x]);
      for (std::size_t y : adj[x])
        if (dist[y] == m) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
  }
  return fp;
}

}  // namespace thinlab::hyperbolic
