#pragma once

// Independent reference implementations used only by the tests. None of
// them call into the library under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Mat = std::vector<std::int64_t>;  // row-major n x n

inline Mat mul_mod(const Mat& a, const Mat& b, std::size_t n, std::int64_t q) {
  Mat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % q;
  return c;
}

inline Mat reduce(const std::vector<std::vector<long>>& rows, std::int64_t q) {
  Mat m;
  for (const auto& r : rows)
    for (long x : r) m.push_back(((x % q) + q) % q);
  return m;
}

inline Mat identity(std::size_t n, std::int64_t q) {
  Mat m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1 % q;
  return m;
}

// The inverse of an invertible matrix over Z/q is its last power before I.
inline Mat inverse_mod(const Mat& a, std::size_t n, std::int64_t q) {
  const Mat id = identity(n, q);
  Mat prev = id, cur = a;
  while (cur != id) {
    prev = cur;
    cur = mul_mod(cur, a, n, q);
  }
  return prev;
}

struct CayleyGraph {
  std::vector<Mat> vertices;
  std::vector<std::vector<std::size_t>> out;  // out[v][s] = index of s * v
};

inline bool g_is_involution(const std::vector<std::vector<long>>& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += g[i][k] * g[k][j];
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

// Breadth-first closure of <gens> mod q, with edges x -> s x for s in
// gens and their inverses.
inline CayleyGraph cayley_graph(const std::vector<std::vector<std::vector<long>>>& gens, std::int64_t q) {
  const std::size_t n = gens.front().size();
  std::vector<Mat> s;
  for (const auto& g : gens) {
    const Mat m = reduce(g, q);
    const Mat inv = inverse_mod(m, n, q);
    // Symmetric set of distinct integer generators; an involution counts once.
    s.push_back(m);
    if (inv != m || !g_is_involution(g)) s.push_back(inv);
  }
  CayleyGraph g;
  std::map<Mat, std::size_t> index;
  g.vertices.push_back(identity(n, q));
  index[g.vertices[0]] = 0;
  for (std::size_t head = 0; head < g.vertices.size(); ++head) {
    std::vector<std::size_t> row;
    for (const auto& x : s) {
      Mat y = mul_mod(x, g.vertices[head], n, q);
      auto [it, fresh] = index.emplace(y, g.vertices.size());
      if (fresh) g.vertices.push_back(std::move(y));
      row.push_back(it->second);
    }
    g.out.push_back(std::move(row));
  }
  return g;
}

// Eigenvalues, ascending, of (1/|S|) sum_s P_s.
inline Eigen::VectorXd normalized_spectrum(const CayleyGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertices.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const double w = 1.0 / static_cast<double>(g.out.front().size());
  for (Eigen::Index v = 0; v < n; ++v)
    for (auto u : g.out[static_cast<std::size_t>(v)]) a(static_cast<Eigen::Index>(u), v) += w;
  a = 0.5 * (a + a.transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t q) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      ps.push_back(p);
      while (q % p == 0) q /= p;
    }
  if (q > 1) ps.push_back(q);
  return ps;
}

// |SL_2(Z/q)| = q^3 prod_{p | q} (1 - p^-2).
inline std::int64_t sl2_order(std::int64_t q) {
  std::int64_t order = q * q * q;
  for (auto p : prime_divisors(q)) order = order / (p * p) * (p * p - 1);
  return order;
}

// Normal form in Z/k * Z for a word over letters 0 = a, 1 = a^-1, 2 = c,
// 3 = c^-1. Returns the reduced syllables (generator, exponent).
inline std::vector<std::pair<int, long>> free_product_normal_form(const std::vector<std::size_t>& word, long k) {
  std::vector<std::pair<int, long>> syl;
  for (auto l : word) {
    const int gen = l < 2 ? 0 : 1;
    const long e = (l % 2 == 0) ? 1 : -1;
    if (!syl.empty() && syl.back().first == gen) {
      syl.back().second += e;
    } else {
      syl.emplace_back(gen, e);
    }
    if (syl.back().first == 0) syl.back().second = ((syl.back().second % k) + k) % k;
    if (syl.back().second == 0) syl.pop_back();
  }
  return syl;
}

// Denominators of [0; a_1, ..., a_k] with every a_i in 1..A, up to Q, by
// forward generation of continuants.
inline std::vector<bool> bounded_cf_denominators(std::uint64_t A, std::uint64_t Q) {
  std::vector<bool> hit(Q + 1, false);
  // q_k = a_k q_{k-1} + q_{k-2}; start from q_{-1} = 0, q_0 = 1.
  std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t q_prev, std::uint64_t q_cur) {
    for (std::uint64_t a = 1; a <= A; ++a) {
      const std::uint64_t q_next = a * q_cur + q_prev;
      if (q_next > Q) break;
      hit[q_next] = true;
      grow(q_cur, q_next);
    }
  };
  grow(0, 1);
  return hit;
}

using Quad = std::array<std::int64_t, 4>;

// Depth-first over unordered quadruples (stored sorted), swapping the last
// position first. Returns the set of curvatures seen.
inline std::set<std::int64_t> apollonian_curvatures(const Quad& root, std::int64_t bound, std::size_t* visited = nullptr) {
  std::set<Quad> seen;
  std::set<std::int64_t> curv;
  std::vector<Quad> stack;
  auto key = [](Quad x) {
    std::sort(x.begin(), x.end());
    return x;
  };
  stack.push_back(root);
  seen.insert(key(root));
  while (!stack.empty()) {
    const Quad x = stack.back();
    stack.pop_back();
    for (auto c : x) curv.insert(c);
    for (int i = 3; i >= 0; --i) {
      Quad y = x;
      std::int64_t others = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) others += x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = 2 * others - x[static_cast<std::size_t>(i)];
      if (y[static_cast<std::size_t>(i)] > bound) continue;
      if (seen.insert(key(y)).second) stack.push_back(y);
    }
  }
  if (visited) *visited = seen.size();
  return curv;
}

// Every integer vector with max|v_i| <= h and v^T G v = value.
inline std::vector<std::vector<std::int64_t>> brute_force_norm(const std::vector<std::vector<std::int64_t>>& g,
                                                               std::int64_t h, std::int64_t value) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(n, -h);
  while (true) {
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * g[i][j] * v[j];
    if (q == value) out.push_back(v);
    std::size_t k = 0;
    while (k < n && v[k] == h) v[k++] = -h;
    if (k == n) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
