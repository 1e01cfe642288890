#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "thinlab/error.hpp"
#include "thinlab/exact/poly.hpp"
#include "thinlab/group/gen_set.hpp"
#include "thinlab/group/reducibility.hpp"
#include "thinlab/group/words.hpp"

using namespace thinlab;
using namespace thinlab::group;
using exact::IntMatrix;

namespace {

const IntMatrix kA{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
const IntMatrix kC{{1, 0, 0, 5}, {0, 1, 0, -5}, {0, 0, 1, 5}, {0, 0, 0, 1}};

}  // namespace

TEST(GenSet, SymmetrizesAndRejectsSingular) {
  const GenSet s = sl2_standard();
  EXPECT_EQ(s.size(), 4u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE((s[i] * s[s.inverse_of(i)]).is_identity());
  EXPECT_THROW(GenSet({IntMatrix{{2, 0}, {0, 1}}}), Error);
  EXPECT_THROW(GenSet({IntMatrix::identity(2), IntMatrix::identity(3)}), Error);
}

TEST(Ball, RadiusZeroIsIdentity) {
  const auto ball = ball_enumerate(sl2_standard(), 0);
  ASSERT_EQ(ball.elements.size(), 1u);
  EXPECT_TRUE(ball.elements[0].is_identity());
}

TEST(Ball, ParabolicPowers) {
  const GenSet s({IntMatrix{{1, 1}, {0, 1}}});
  const auto ball = ball_enumerate(s, 3);
  std::set<long> powers;
  for (const auto& m : ball.elements) {
    EXPECT_EQ(m(0, 0), 1);
    EXPECT_EQ(m(1, 0), 0);
    powers.insert(m(0, 1).get_si());
  }
  EXPECT_EQ(powers, (std::set<long>{-3, -2, -1, 0, 1, 2, 3}));
  EXPECT_FALSE(ball.closed);
}

TEST(Ball, CapIsAnError) {
  BallOptions o;
  o.max_elements = 50;
  EXPECT_THROW(ball_enumerate(sl2_standard(), 20, o), CapExceeded);
}

TEST(Ball, FiniteGroupCloses) {
  // Quarter turns about z and x: the rotation group of the cube.
  const GenSet s({IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}, IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}});
  const auto ball = ball_enumerate(s, 20);
  EXPECT_TRUE(ball.closed);
  EXPECT_EQ(ball.elements.size(), 24u);
}

TEST(Walk, DeterministicAndEvaluates) {
  const GenSet s = sl2_standard();
  const Word w0 = random_walk_word(s, 0, 3);
  EXPECT_TRUE(w0.matrix.is_identity());
  const Word a = random_walk_word(s, 100, 7);
  const Word b = random_walk_word(s, 100, 7);
  EXPECT_EQ(a.letters, b.letters);
  EXPECT_EQ(a.matrix, b.matrix);
  EXPECT_EQ(a.matrix, evaluate(s, a.letters));
  EXPECT_EQ(a.letters.size(), 100u);
  std::set<std::size_t> used(a.letters.begin(), a.letters.end());
  EXPECT_EQ(used.size(), s.size());
  EXPECT_NE(random_walk_word(s, 100, 8).letters, a.letters);
}

TEST(Relations, OrderFiveCompanion) {
  const GenSet s({kA}, {"A"});
  const auto rel = relation_search(s, 6);
  ASSERT_FALSE(rel.empty());
  EXPECT_EQ(rel.front().letters.size(), 5u);
  EXPECT_TRUE(power(kA, 5).is_identity());
}

TEST(Relations, ParabolicHasNone) {
  const GenSet s({IntMatrix{{1, 1}, {0, 1}}});
  EXPECT_TRUE(relation_search(s, 12).empty());
}

TEST(Relations, MatchFreeProductNormalForm) {
  const GenSet s({kA, kC}, {"A", "C"});
  ASSERT_EQ(s.size(), 4u);
  // Letter order in the set: A, A^-1, C, C^-1.
  const auto rel = relation_search(s, 7);
  std::set<std::vector<std::size_t>> found;
  for (const auto& w : rel) {
    EXPECT_TRUE(w.matrix.is_identity());
    EXPECT_TRUE(oracle::free_product_normal_form(w.letters, 5).empty()) << w.to_string(s);
    found.insert(w.letters);
  }
  // Every freely reduced word trivial in Z/5 * Z must be reported.
  std::size_t expected = 0;
  std::vector<std::size_t> word;
  std::function<void()> dfs = [&] {
    if (!word.empty() && oracle::free_product_normal_form(word, 5).empty()) {
      ++expected;
      EXPECT_TRUE(found.contains(word));
    }
    if (word.size() == 7) return;
    for (std::size_t l = 0; l < 4; ++l) {
      if (!word.empty() && (word.back() ^ 1u) == l) continue;
      word.push_back(l);
      dfs();
      word.pop_back();
    }
  };
  dfs();
  EXPECT_EQ(found.size(), expected);
}

TEST(Reducibility, Sl2HyperbolicTraceIrreducible) {
  const GenSet s = sl2_standard();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Word w = random_walk_word(s, 12, seed);
    const exact::Integer tr = w.matrix.trace();
    if (abs(tr) < 3) continue;
    // A rational root of t^2 - tr t + 1 would be +-1.
    EXPECT_EQ(classify_reducibility(exact::charpoly(w.matrix)).verdict, Reducibility::kIrreducible);
  }
}

TEST(Reducibility, IdentityIsReducible) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto v = classify_reducibility(exact::charpoly(IntMatrix::identity(n)));
    EXPECT_EQ(v.verdict, Reducibility::kReducible);
  }
}

TEST(Reducibility, KnownPolynomials) {
  EXPECT_EQ(classify_reducibility(exact::IntPoly({1, 1, 1, 1, 1})).verdict, Reducibility::kIrreducible);
  EXPECT_EQ(classify_reducibility(exact::IntPoly({-2, 0, 0, 0, 1})).verdict, Reducibility::kIrreducible);
  // (t^2 + 1)(t^2 + t + 1) has no linear factor but is reducible.
  const auto v = classify_reducibility(exact::IntPoly({1, 0, 1}) * exact::IntPoly({1, 1, 1}));
  EXPECT_EQ(v.verdict, Reducibility::kReducible);
  // t^2 + 1 stays irreducible mod 3 and splits mod 5.
  EXPECT_TRUE(irreducible_mod_p(exact::IntPoly({1, 0, 1}), 3));
  EXPECT_FALSE(irreducible_mod_p(exact::IntPoly({1, 0, 1}), 5));
}

TEST(Reducibility, WalkStatsAreSeeded) {
  const GenSet s({kA, kA * kC}, {"A", "AC"});
  const std::vector<std::size_t> lengths{4, 8};
  const auto a = walk_charpoly_stats(s, lengths, 20, 11);
  const auto b = walk_charpoly_stats(s, lengths, 20, 11, 2);
  ASSERT_EQ(a.rows.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a.rows[i].irreducible, b.rows[i].irreducible);
    EXPECT_EQ(a.rows[i].reducible, b.rows[i].reducible);
    EXPECT_EQ(a.rows[i].irreducible + a.rows[i].reducible + a.rows[i].undetermined, 20u);
  }
}
