#include "thinlab/expander/closure.hpp"

#include <bit>
#include <unordered_map>

#include "thinlab/error.hpp"
#include "thinlab/exact/form_space.hpp"

namespace thinlab::expander {
namespace {

struct PackedKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL ^ (k.hi + 0x632be59bd9b4e019ULL);
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

class Packer {
 public:
  Packer(std::size_t entries, std::uint64_t q)
      : entries_(entries), bits_(static_cast<unsigned>(std::bit_width(q - 1))) {
    if (entries_ * bits_ > 128) {
      throw Error(ErrorCode::kInvalidArgument,
                  "congruence closure: residues do not fit a 128-bit key (n^2 * log2(q) > 128)");
    }
  }

  PackedKey pack(const std::uint32_t* r) const {
    PackedKey k;
    unsigned pos = 0;
    for (std::size_t i = 0; i < entries_; ++i, pos += bits_) {
      const std::uint64_t v = r[i];
      if (pos < 64) {
        k.lo |= v << pos;
        if (pos + bits_ > 64) k.hi |= v >> (64 - pos);
      } else {
        k.hi |= v << (pos - 64);
      }
    }
    return k;
  }

 private:
  std::size_t entries_;
  unsigned bits_;
};

bool targets_sl(const GenSet& s) {
  for (const auto& g : s.gens())
    if (g.determinant() != 1) return false;
  if (s.dim() <= 2) return true;
  return exact::fixed_form_space(s.gens()).dim() == 0;
}

}  // namespace

std::string_view to_string(Onto onto) noexcept {
  switch (onto) {
    case Onto::kYes: return "yes";
    case Onto::kNo: return "no";
    case Onto::kUnknown: return "unknown";
  }
  return "unknown";
}

Closure congruence_closure(const GenSet& s, std::uint64_t q, const ClosureOptions& options) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "closure_mod: q must be >= 2");
  if (!options.allow_non_squarefree && !is_squarefree(q)) {
    throw Error(ErrorCode::kInvalidArgument,
                "closure_mod: q = " + std::to_string(q) + " is not squarefree (pass allow_non_squarefree)");
  }
  const std::size_t n = s.dim();
  const std::size_t nn = n * n;
  const std::size_t deg = s.size();
  std::vector<ModMatrix> gens;
  gens.reserve(deg);
  for (const auto& g : s.gens()) gens.push_back(reduce_mod(g, q));

  Closure c;
  c.degree = deg;
  c.result.q = q;
  c.result.n = n;

  const Packer packer(nn, q);
  std::unordered_map<PackedKey, std::uint32_t, PackedKeyHash> index;
  const ModMatrix id = ModMatrix::identity(n, q);
  c.vertices.assign(id.entries().begin(), id.entries().end());
  index.emplace(packer.pack(c.vertices.data()), 0);

  std::vector<std::uint32_t> y(nn);
  for (std::size_t v = 0; v < c.vertices.size() / nn; ++v) {
    for (std::size_t si = 0; si < deg; ++si) {
      const auto ge = gens[si].entries();
      const std::uint32_t* x = c.vertices.data() + v * nn;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t{ge[i * n + k]} * x[k * n + j] % q;
          y[i * n + j] = static_cast<std::uint32_t>(acc % q);
        }
      const PackedKey key = packer.pack(y.data());
      auto it = index.find(key);
      std::uint32_t target;
      if (it != index.end()) {
        target = it->second;
      } else {
        const std::size_t count = c.vertices.size() / nn;
        if (count >= options.max_elements) {
          c.result.overflow = true;
          c.result.order = count;
          c.result.onto = Onto::kUnknown;
          return c;
        }
        target = static_cast<std::uint32_t>(count);
        index.emplace(key, target);
        c.vertices.insert(c.vertices.end(), y.begin(), y.end());
      }
      c.neighbors.push_back(target);
    }
  }
  c.result.order = c.vertices.size() / nn;

  if (targets_sl(s)) {
    c.result.target_order = sl_order(n, q);
    const Integer order(static_cast<unsigned long>(c.result.order));
    if (!mpz_divisible_p(c.result.target_order->get_mpz_t(), order.get_mpz_t())) {
      throw Error(ErrorCode::kInvalidArgument, "closure_mod: subgroup order does not divide |SL_n(Z/q)|");
    }
    c.result.index = Integer(*c.result.target_order / order);
    c.result.onto = *c.result.index == 1 ? Onto::kYes : Onto::kNo;
  }
  return c;
}

ClosureResult closure_mod(const GenSet& s, std::uint64_t q, const ClosureOptions& options) {
  return congruence_closure(s, q, options).result;
}

}  // namespace thinlab::expander
