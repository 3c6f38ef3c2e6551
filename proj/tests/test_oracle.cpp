#include <gtest/gtest.h>

#include "avoidgray/oracle.hpp"
#include "support.hpp"

using namespace avoidgray;
using avoidgray::testing::factor;
using avoidgray::testing::words;

TEST(Oracle, ContainsFactor) {
  EXPECT_TRUE(oracle::contains_factor(Word::parse("0011").symbols(), Word::parse("01").symbols()));
  EXPECT_FALSE(oracle::contains_factor(Word::parse("1100").symbols(), Word::parse("01").symbols()));
  EXPECT_FALSE(oracle::contains_factor(Word::parse("0").symbols(), Word::parse("00").symbols()));
}

TEST(Oracle, BruteForceListIsSortedAndFiltered) {
  const auto list = oracle::brute_force_list(factor("11", 2), Alphabet(2), 3, OrderKind::rgc);
  EXPECT_EQ(list, words({"000", "001", "010", "101", "100"}));
  EXPECT_EQ(oracle::brute_force_list(std::nullopt, Alphabet(3), 2, OrderKind::dual_rgc),
            words({"00", "01", "02", "10", "11", "12", "22", "21", "20"}));
}

TEST(Oracle, BudgetAndAlphabetChecks) {
  EXPECT_THROW((void)oracle::brute_force_list(std::nullopt, Alphabet(10), 7, OrderKind::rgc, 1000), ResourceError);
  EXPECT_THROW((void)oracle::brute_force_list(factor("01", 3), Alphabet(4), 3, OrderKind::rgc), InputError);
}

TEST(Oracle, VerifyMeasuresPairs) {
  const auto list = words({"000", "001", "011", "111"});
  const auto report = oracle::verify(list, Alphabet(2), {});
  EXPECT_EQ(report.word_count, 4u);
  EXPECT_EQ(report.max_hamming, 1u);
  EXPECT_EQ(report.max_span, 0u);
  EXPECT_TRUE(report.certifies(1, 1));

  const auto jumpy = words({"0300000", "1313131"});
  const auto r2 = oracle::verify(jumpy, Alphabet(4), {});
  EXPECT_EQ(r2.max_hamming, 6u);
  EXPECT_EQ(r2.max_span, 6u);
  ASSERT_TRUE(r2.worst_hamming.has_value());
  EXPECT_EQ(r2.worst_hamming->index, 0u);
  EXPECT_FALSE(r2.certifies(3, 3));
}

TEST(Oracle, VerifyCountsViolations) {
  const auto list = words({"000", "011", "001", "001"});
  oracle::VerifyOptions options{factor("11", 2), OrderKind::rgc, std::nullopt};
  const auto report = oracle::verify(list, Alphabet(2), options);
  EXPECT_EQ(report.avoidance_violations, 1u);
  EXPECT_GE(report.order_violations, 2u);
  EXPECT_GT(report.violations(), 0u);

  // A leftmost change by 2 breaks the +-1 law.
  const auto step = oracle::verify(words({"00", "20"}), Alphabet(3), {std::nullopt, std::nullopt, true});
  EXPECT_EQ(step.leftmost_step_violations, 1u);
}

TEST(Oracle, VerifyRejectsBadInput) {
  EXPECT_THROW((void)oracle::verify(std::vector<Word>{}, Alphabet(2), {}), InputError);
  EXPECT_THROW((void)oracle::verify(words({"00", "001"}), Alphabet(2), {}), InputError);
}

TEST(Oracle, CounterexampleSearch) {
  const auto n = oracle::smallest_counterexample_n(factor("130", 4), OrderKind::rgc, 3);
  ASSERT_TRUE(n.has_value());
  EXPECT_LE(*n, 7u);
  EXPECT_FALSE(oracle::smallest_counterexample_n(factor("0121", 4), OrderKind::rgc, 2, 8).has_value());
}

TEST(Oracle, ExtremeWordsAndFreeWords) {
  EXPECT_EQ(oracle::extreme_word(Word{}, factor("11", 2), 4, oracle::End::first, OrderKind::rgc),
            Word::parse("0000"));
  EXPECT_EQ(oracle::extreme_word(Word{}, factor("11", 2), 4, oracle::End::last, OrderKind::rgc),
            Word::parse("1000"));
  EXPECT_EQ(oracle::factor_free_words(factor("11", 2), 3), words({"000", "001", "010", "100", "101"}));
}

TEST(Oracle, Surrogate) {
  EXPECT_TRUE(oracle::zero_periodicity_surrogate(factor("120", 4)));
  EXPECT_FALSE(oracle::zero_periodicity_surrogate(factor("130", 4)));
  EXPECT_FALSE(oracle::zero_periodicity_surrogate(factor("223", 4)));
}
