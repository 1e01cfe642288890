#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinlab/group/gen_set.hpp"

namespace thinlab::group {

using exact::Integer;

struct Word {
  std::vector<std::size_t> letters;
  IntMatrix matrix;

  std::string to_string(const GenSet& s) const;
};

// Product of the indexed generators, left to right.
IntMatrix evaluate(const GenSet& s, std::span<const std::size_t> letters);

struct BallOptions {
  // Keep only elements B with max(|B|, |B^-1|) <= bound in the max-entry norm.
  std::optional<Integer> norm_bound;
  std::size_t max_elements = 10'000'000;
};

struct BallReport {
  std::size_t radius = 0;
  std::optional<Integer> norm_bound;
  // Distinct elements (after the norm filter) in order of first discovery.
  std::vector<IntMatrix> elements;
  // counts[r] = number of reported elements of word length <= r.
  std::vector<std::size_t> counts;
  // True when some sphere came out empty, i.e. the whole group was reached.
  bool closed = false;
};

// Breadth-first enumeration of all products of at most `radius` generators.
// Throws CapExceeded when the number of distinct elements passes the cap.
BallReport ball_enumerate(const GenSet& s, std::size_t radius, const BallOptions& options = {});

// Uniform i.i.d. letters from a mt19937_64 stream seeded with `seed`.
Word random_walk_word(const GenSet& s, std::size_t length, std::uint64_t seed);

struct RelationOptions {
  std::size_t max_words = 10'000'000;
};

// Every freely reduced word of length 1..max_len that evaluates to the
// identity, sorted by (length, letters). An empty result certifies only that
// no relation of length <= max_len exists.
std::vector<Word> relation_search(const GenSet& s, std::size_t max_len, const RelationOptions& options = {});

}  // namespace thinlab::group
