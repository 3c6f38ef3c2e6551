#include <gtest/gtest.h>

#include "avoidgray/classify.hpp"
#include "avoidgray/matcher.hpp"
#include "avoidgray/oracle.hpp"
#include "support.hpp"

using namespace avoidgray;
using avoidgray::testing::all_factors;
using avoidgray::testing::all_words;
using avoidgray::testing::factor;
using avoidgray::testing::longest_suffix_prefix;

TEST(Border, Fixture) {
  const BorderArray b = make_border(Word::parse("01001010"));
  EXPECT_EQ(b.values, (std::vector<std::int32_t>{-1, 0, 0, 1, 1, 2, 3, 2, 3}));
}

TEST(Border, SingleSymbolAndRuns) {
  EXPECT_EQ(make_border(Word::parse("2")).values, (std::vector<std::int32_t>{-1, 0}));
  EXPECT_EQ(make_border(Word::parse("0000")).values, (std::vector<std::int32_t>{-1, 0, 1, 2, 3}));
  EXPECT_THROW((void)make_border(Word{}), InputError);
}

TEST(Transitions, Fixture) {
  const TransitionTable m = build_transition_table(factor("012011", 4));
  const std::vector<std::vector<MatchState>> expected = {
      {1, 0, 0, 0}, {1, 2, 0, 0}, {1, 0, 3, 0}, {4, 0, 0, 0}, {1, 5, 0, 0}, {1, 6, 3, 0}};
  ASSERT_EQ(m.factor_length(), 6u);
  ASSERT_EQ(m.alphabet_size(), 4u);
  for (MatchState i = 0; i < 6; ++i) {
    const auto row = m.row(i);
    EXPECT_EQ(std::vector<MatchState>(row.begin(), row.end()), expected[i]) << "row " << i;
  }
}

TEST(Transitions, RejectsForeignBorder) {
  const ForbiddenFactor f = factor("0101", 2);
  EXPECT_THROW((void)make_array(f, make_border(Word::parse("0110"))), InputError);
  EXPECT_THROW((void)make_array(f, make_border(Word::parse("01"))), InputError);
}

// M(i, j) equals the definition: longest suffix of f_1..f_i j that is a prefix of f.
TEST(Transitions, MatchesDefinitionExhaustively) {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::size_t l = 1; l <= 5; ++l) {
      if (q == 4 && l == 5) continue;
      for (const ForbiddenFactor& f : all_factors(q, l)) {
        const TransitionTable m = build_transition_table(f);
        for (MatchState i = 0; i < l; ++i) {
          for (Symbol j = 0; j < q; ++j) {
            Word text = f.word().prefix(i);
            text.push_back(j);
            ASSERT_EQ(m(i, j), longest_suffix_prefix(text, f.word())) << f.word().str() << " i=" << i << " j=" << j;
          }
        }
      }
    }
  }
}

// The automaton reaches l exactly on words containing f.
TEST(Transitions, RunDetectsOccurrence) {
  for (std::uint32_t q = 2; q <= 3; ++q) {
    for (std::size_t l = 1; l <= 3; ++l) {
      for (const ForbiddenFactor& f : all_factors(q, l)) {
        const TransitionTable m = build_transition_table(f);
        for (const Word& w : all_words(q, 6)) {
          const bool hit = m.run(w.symbols()) == l;
          ASSERT_EQ(hit, oracle::contains_factor(w.symbols(), f.word().symbols()))
              << f.word().str() << " in " << w.str();
        }
      }
    }
  }
}
