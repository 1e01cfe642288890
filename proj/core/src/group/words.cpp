#include "thinlab/group/words.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_set>

#include "thinlab/error.hpp"

namespace thinlab::group {
namespace {

// max(|B|, |B^-1|) in the max-entry norm.
Integer two_sided_norm(const IntMatrix& b) {
  Integer norm = b.max_abs_entry();
  const auto inv = b.inverse();
  if (inv) norm = std::max(norm, inv->max_abs_entry());
  return norm;
}

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream, so
// the letter sequence depends only on the mt19937_64 output.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return static_cast<std::size_t>(x % b);
  }
}

}  // namespace

std::string Word::to_string(const GenSet& s) const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += s.labels()[letters[i]];
  }
  return out;
}

IntMatrix evaluate(const GenSet& s, std::span<const std::size_t> letters) {
  IntMatrix m = IntMatrix::identity(s.dim());
  for (std::size_t l : letters) m = m * s[l];
  return m;
}

BallReport ball_enumerate(const GenSet& s, std::size_t radius, const BallOptions& options) {
  BallReport report;
  report.radius = radius;
  report.norm_bound = options.norm_bound;

  std::unordered_set<IntMatrix, exact::IntMatrixHash> seen;
  std::vector<IntMatrix> frontier{IntMatrix::identity(s.dim())};
  seen.insert(frontier.front());
  std::size_t reported = 0;
  auto admit = [&](const IntMatrix& m) {
    if (options.norm_bound && two_sided_norm(m) > *options.norm_bound) return;
    report.elements.push_back(m);
    ++reported;
  };
  admit(frontier.front());
  report.counts.push_back(reported);

  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : s.gens()) {
        IntMatrix y = x * g;
        if (seen.contains(y)) continue;
        if (seen.size() >= options.max_elements) throw CapExceeded("ball elements", options.max_elements);
        seen.insert(y);
        admit(y);
        next.push_back(std::move(y));
      }
    }
    report.counts.push_back(reported);
    if (next.empty()) report.closed = true;
    frontier = std::move(next);
  }
  return report;
}

Word random_walk_word(const GenSet& s, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Word w;
  w.letters.reserve(length);
  w.matrix = IntMatrix::identity(s.dim());
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t l = uniform_index(rng, s.size());
    w.letters.push_back(l);
    w.matrix = w.matrix * s[l];
  }
  return w;
}

std::vector<Word> relation_search(const GenSet& s, std::size_t max_len, const RelationOptions& options) {
  if (max_len == 0) throw Error(ErrorCode::kInvalidArgument, "relation_search: max_len must be >= 1");
  std::vector<Word> relations;
  std::size_t visited = 0;

  std::vector<std::size_t> letters;
  std::vector<IntMatrix> prefixes{IntMatrix::identity(s.dim())};
  // Depth-first over freely reduced words; `choice[d]` is the next letter to try at depth d.
  std::vector<std::size_t> choice{0};
  while (!choice.empty()) {
    const std::size_t depth = choice.size() - 1;
    std::size_t& c = choice.back();
    if (depth == max_len || c == s.size()) {
      choice.pop_back();
      if (!letters.empty()) {
        letters.pop_back();
        prefixes.pop_back();
      }
      continue;
    }
    const std::size_t l = c++;
    if (!letters.empty() && s.inverse_of(letters.back()) == l) continue;
    if (++visited > options.max_words) throw CapExceeded("relation words", options.max_words);
    IntMatrix m = prefixes.back() * s[l];
    letters.push_back(l);
    if (m.is_identity()) relations.push_back({letters, m});
    prefixes.push_back(std::move(m));
    choice.push_back(0);
  }
  std::sort(relations.begin(), relations.end(), [](const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  });
  return relations;
}

}  // namespace thinlab::group
