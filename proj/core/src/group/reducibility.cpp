#include "thinlab/group/reducibility.hpp"

#include <algorithm>

#include "thinlab/error.hpp"
#include "thinlab/exact/cyclotomic.hpp"
#include "thinlab/group/words.hpp"
#include "thinlab/parallel.hpp"

namespace thinlab::group {
namespace {

using exact::Integer;
using ModPoly = std::vector<std::uint64_t>;  // lowest degree first

constexpr std::uint32_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

// a mod m, m monic.
ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead) {
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(c), m, p);
}

ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
  ModPoly result{1};
  while (e) {
    if (e & 1) result = mul_mod(result, base, m, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, m, p);
  }
  return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic.
    const std::uint64_t inv = inverse_mod(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<IntPoly> verified_factor(const IntPoly& f, const IntPoly& candidate) {
  if (candidate.degree() < 1 || candidate.degree() >= f.degree()) return std::nullopt;
  if (!exact_quotient(f, candidate)) return std::nullopt;
  return candidate;
}

std::optional<IntPoly> rational_root_factor(const IntPoly& f) {
  const Integer c0 = f[0];
  if (c0 == 0) return verified_factor(f, IntPoly{0, 1});
  const Integer mag = abs(c0);
  if (mag > 1'000'000) return std::nullopt;
  const unsigned long m = mag.get_ui();
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    for (unsigned long r : {d, m / d}) {
      for (long sign : {1L, -1L}) {
        const Integer root = Integer(static_cast<long>(r)) * sign;
        if (f.eval(root) == 0) return verified_factor(f, IntPoly({Integer(-root), Integer(1)}));
      }
    }
  }
  return std::nullopt;
}

std::optional<IntPoly> cyclotomic_divisor(const IntPoly& f) {
  const auto deg = static_cast<std::uint64_t>(f.degree());
  for (std::uint64_t d = 1; d <= 2 * deg * deg + 2; ++d) {
    if (exact::euler_phi(d) >= deg) continue;
    IntPoly phi = exact::cyclotomic_poly(d);
    if (divide_by_monic(f, phi).remainder.is_zero()) return phi;
  }
  return std::nullopt;
}

bool is_palindromic(const IntPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  for (std::size_t i = 0; i <= n; ++i)
    if (f[i] != f[n - i]) return false;
  return true;
}

// g with f(t) = t^k g(t + 1/t) for palindromic f of degree 2k.
IntPoly trace_polynomial(const IntPoly& f) {
  const auto k = static_cast<std::size_t>(f.degree() / 2);
  // P_j(s) = t^j + t^-j as a polynomial in s = t + 1/t.
  IntPoly p_prev{2};
  IntPoly p_cur{0, 1};
  IntPoly g{};
  g = g + IntPoly({f[k]});
  for (std::size_t j = 1; j <= k; ++j) {
    g = g + IntPoly({f[k + j]}) * p_cur;
    IntPoly p_next = IntPoly{0, 1} * p_cur - p_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
  }
  return g;
}

// t^j h(t + 1/t) for h of degree j.
IntPoly lift_from_trace(const IntPoly& h) {
  const auto j = static_cast<std::size_t>(h.degree());
  IntPoly out{};
  const IntPoly t_sq_plus_one{1, 0, 1};
  for (std::size_t i = 0; i <= j; ++i) {
    out = out + IntPoly::monomial(h[i], j - i) * pow(t_sq_plus_one, static_cast<unsigned>(i));
  }
  return out;
}

std::optional<IntPoly> certified_factor(const IntPoly& f);

std::optional<IntPoly> quadratic_factor(const IntPoly& f) {
  const Integer b = f[1];
  const Integer c = f[0];
  const Integer disc = b * b - 4 * c;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  const Integer s = sqrt(disc);
  const Integer twice_root = -b + s;
  return verified_factor(f, IntPoly({Integer(-(twice_root / 2)), Integer(1)}));
}

std::optional<IntPoly> certified_factor(const IntPoly& f) {
  if (f.degree() < 2) return std::nullopt;
  if (f.degree() == 2) return quadratic_factor(f);
  const IntPoly g = gcd(f, f.derivative());
  if (g.degree() >= 1) {
    if (auto h = verified_factor(f, g)) return h;
  }
  if (auto h = rational_root_factor(f)) return h;
  if (auto h = cyclotomic_divisor(f)) return h;
  if (f.degree() % 2 == 0 && is_palindromic(f)) {
    const IntPoly trace = trace_polynomial(f);
    if (auto h = certified_factor(trace)) {
      if (auto lifted = verified_factor(f, lift_from_trace(*h))) return lifted;
    }
  }
  return std::nullopt;
}

}  // namespace

bool irreducible_mod_p(const IntPoly& monic, std::uint32_t p) {
  if (!monic.is_monic()) throw Error(ErrorCode::kNotMonic, "irreducible_mod_p: polynomial not monic");
  const auto n = static_cast<std::uint64_t>(monic.degree());
  if (n == 0) return false;
  if (n == 1) return true;
  ModPoly f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), monic.coefficients()[i].get_mpz_t(), p);
    f[i] = r.get_ui();
  }
  const ModPoly x{0, 1};
  // frob[i] = x^(p^i) mod f
  std::vector<ModPoly> frob{poly_mod(x, f, p)};
  for (std::uint64_t i = 1; i <= n; ++i) frob.push_back(pow_mod(frob.back(), p, f, p));
  if (frob[n] != poly_mod(x, f, p)) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    ModPoly h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    const ModPoly g = gcd_mod(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

ReducibilityVerdict classify_reducibility(const IntPoly& monic) {
  if (!monic.is_monic()) throw Error(ErrorCode::kNotMonic, "classify_reducibility: polynomial not monic");
  if (monic.degree() < 1) throw Error(ErrorCode::kInvalidArgument, "classify_reducibility: constant polynomial");
  ReducibilityVerdict v;
  if (monic.degree() == 1) {
    v.verdict = Reducibility::kIrreducible;
    return v;
  }
  for (std::uint32_t p : kPrimes) {
    if (irreducible_mod_p(monic, p)) {
      v.verdict = Reducibility::kIrreducible;
      v.witness_prime = p;
      return v;
    }
  }
  if (auto factor = certified_factor(monic)) {
    v.verdict = Reducibility::kReducible;
    v.factor = std::move(factor);
    return v;
  }
  // A monic quadratic with non-square discriminant has no rational root.
  if (monic.degree() == 2) v.verdict = Reducibility::kIrreducible;
  return v;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t length, std::size_t trial) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(length)) ^ static_cast<std::uint64_t>(trial));
}

ReducibilityReport walk_charpoly_stats(const GenSet& s, std::span<const std::size_t> lengths, std::size_t trials,
                                       std::uint64_t seed, std::size_t threads) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "walk_charpoly_stats: trials must be >= 1");
  ReducibilityReport report;
  report.seed = seed;
  for (std::size_t length : lengths) {
    std::vector<Reducibility> verdicts(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
      const Word w = random_walk_word(s, length, trial_seed(seed, length, t));
      verdicts[t] = classify_reducibility(exact::charpoly(w.matrix)).verdict;
    });
    ReducibilityRow row;
    row.length = length;
    row.trials = trials;
    for (auto v : verdicts) {
      if (v == Reducibility::kIrreducible) ++row.irreducible;
      else if (v == Reducibility::kReducible) ++row.reducible;
      else ++row.undetermined;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace thinlab::group
