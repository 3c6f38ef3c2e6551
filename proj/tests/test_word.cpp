#include <gtest/gtest.h>

#include <algorithm>

#include "avoidgray/word.hpp"
#include "support.hpp"

using namespace avoidgray;
using avoidgray::testing::all_words;

TEST(Alphabet, RejectsOutOfRange) {
  EXPECT_THROW((void)Alphabet(0), InputError);
  EXPECT_THROW((void)Alphabet(1), InputError);
  EXPECT_THROW((void)Alphabet(kMaxAlphabet + 1), InputError);
  EXPECT_NO_THROW((void)Alphabet(kMaxAlphabet));
  const Alphabet q(5);
  EXPECT_EQ(q.max_symbol(), 4u);
  EXPECT_FALSE(q.is_even());
  EXPECT_TRUE(q.contains(4));
  EXPECT_FALSE(q.contains(5));
}

TEST(Word, ParsesPackedAndSeparated) {
  EXPECT_EQ(Word::parse("0121"), (Word{0, 1, 2, 1}));
  EXPECT_EQ(Word::parse("0,1,12"), (Word{0, 1, 12}));
  EXPECT_EQ(Word::parse(""), Word{});
  EXPECT_THROW(Word::parse("01a"), InputError);
  EXPECT_THROW(Word::parse("1,,2"), InputError);
  EXPECT_THROW(Word::parse("1,-2"), InputError);
}

TEST(Word, FormatsRoundTrip) {
  const Word w{3, 0, 11};
  EXPECT_EQ(w.str(WordFormat::separated), "3,0,11");
  EXPECT_THROW((void)w.str(WordFormat::packed), InputError);
  EXPECT_EQ(Word::parse(w.str(WordFormat::separated)), w);
  EXPECT_EQ(Word::parse("2301").str(), "2301");
}

TEST(Word, PrefixRepeatConcat) {
  const Word w = Word::parse("12345");
  EXPECT_EQ(w.prefix(2), Word::parse("12"));
  EXPECT_EQ(w.prefix(9), w);
  EXPECT_EQ(Word::repeat(0, 3), Word::parse("000"));
  EXPECT_EQ(Word::parse("12") + Word::parse("3"), Word::parse("123"));
}

TEST(Word, CheckWordRejectsLargeSymbol) {
  EXPECT_NO_THROW(check_word(Word::parse("0123"), Alphabet(4)));
  EXPECT_THROW(check_word(Word::parse("0124"), Alphabet(4)), InputError);
}

TEST(Parity, EvenAndOddAlphabets) {
  // Sum 1 is odd; adding the single non-zero symbol makes the odd-q parity even.
  EXPECT_EQ(parity(Word::parse("0100"), Alphabet(4)), Parity::odd);
  EXPECT_EQ(parity(Word::parse("0100"), Alphabet(3)), Parity::even);
  EXPECT_EQ(parity(Word::parse("0120"), Alphabet(3)), Parity::odd);
  EXPECT_EQ(parity(Word::parse("2"), Alphabet(3)), Parity::odd);
  EXPECT_EQ(parity(Word{}, Alphabet(3)), Parity::even);
}

TEST(Order, SmallExamples) {
  // Prefix 1 has odd sum: the comparison at position 2 is reversed.
  EXPECT_EQ(cmp_rgc(Word::parse("12"), Word::parse("10")), std::strong_ordering::less);
  EXPECT_EQ(cmp_rgc(Word::parse("22"), Word::parse("20")), std::strong_ordering::greater);
  // Under the dual rule prefix 2 is odd (sum 2 plus one non-zero).
  EXPECT_EQ(cmp_dual_rgc(Word::parse("22"), Word::parse("20")), std::strong_ordering::less);
  EXPECT_EQ(cmp_dual_rgc(Word::parse("01"), Word::parse("01")), std::strong_ordering::equal);
  EXPECT_THROW((void)cmp_rgc(Word::parse("1"), Word::parse("10")), InputError);
}

TEST(Distance, HammingAndSpan) {
  EXPECT_EQ(hamming(Word::parse("0300000"), Word::parse("1313131")), 6u);
  EXPECT_EQ(diff_span(Word::parse("0300000"), Word::parse("1313131")), 6u);
  EXPECT_EQ(diff_span(Word::parse("0010"), Word::parse("0012")), 0u);
  EXPECT_THROW((void)diff_span(Word::parse("01"), Word::parse("01")), SpanError);
  EXPECT_THROW((void)hamming(Word::parse("01"), Word::parse("0")), InputError);
}

TEST(Maps, ReverseAndComplement) {
  EXPECT_EQ(reverse(Word::parse("0011")), Word::parse("1100"));
  EXPECT_EQ(complement(Word::parse("0010"), Alphabet(2)), Word::parse("1101"));
  EXPECT_THROW((void)complement(Word::parse("0010"), Alphabet(3)), InputError);
}

class OrderProperty : public ::testing::TestWithParam<std::pair<std::uint32_t, std::size_t>> {};

// Sorting by the comparator and checking every pair against the positions
// shows both orders are strict total orders.
TEST_P(OrderProperty, ComparatorsAreStrictTotalOrders) {
  const auto [q, n] = GetParam();
  for (OrderKind order : {OrderKind::rgc, OrderKind::dual_rgc}) {
    std::vector<Word> list = all_words(q, n);
    std::sort(list.begin(), list.end(), [&](const Word& a, const Word& b) { return compare(order, a, b) < 0; });
    for (std::size_t i = 0; i < list.size(); ++i) {
      ASSERT_EQ(compare(order, list[i], list[i]), std::strong_ordering::equal);
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ASSERT_EQ(compare(order, list[i], list[j]), std::strong_ordering::less) << to_string(order);
        ASSERT_EQ(compare(order, list[j], list[i]), std::strong_ordering::greater);
      }
    }
  }
}

// The reflected order lists A_q^n as a Gray code with single +-1 steps.
class EvenAlphabet : public OrderProperty {};

TEST_P(EvenAlphabet, ReflectedOrderIsOneGray) {
  const auto [q, n] = GetParam();
  std::vector<Word> list = all_words(q, n);
  std::sort(list.begin(), list.end(), [](const Word& a, const Word& b) { return cmp_rgc(a, b) < 0; });
  for (std::size_t i = 1; i < list.size(); ++i) {
    ASSERT_EQ(hamming(list[i - 1], list[i]), 1u);
    const auto pos = static_cast<std::size_t>(
        std::mismatch(list[i - 1].begin(), list[i - 1].end(), list[i].begin()).first - list[i - 1].begin());
    const auto a = static_cast<int>(list[i - 1][pos]);
    const auto b = static_cast<int>(list[i][pos]);
    ASSERT_EQ(std::abs(a - b), 1);
  }
}

// The dual order lists A_q^n, odd q, with the leftmost change +-1 and at most one
// more change immediately to its right, between 0 and q-1.
class OddAlphabet : public OrderProperty {};

TEST_P(OddAlphabet, DualOrderIsTwoAdjacent) {
  const auto [q, n] = GetParam();
  std::vector<Word> list = all_words(q, n);
  std::sort(list.begin(), list.end(), [](const Word& a, const Word& b) { return cmp_dual_rgc(a, b) < 0; });
  for (std::size_t i = 1; i < list.size(); ++i) {
    const Word& s = list[i - 1];
    const Word& t = list[i];
    ASSERT_LE(hamming(s, t), 2u);
    ASSERT_LE(diff_span(s, t), 1u);
    const auto pos = static_cast<std::size_t>(std::mismatch(s.begin(), s.end(), t.begin()).first - s.begin());
    ASSERT_EQ(std::abs(static_cast<int>(s[pos]) - static_cast<int>(t[pos])), 1);
    if (hamming(s, t) == 2) {
      const Symbol lo = std::min(s[pos + 1], t[pos + 1]);
      const Symbol hi = std::max(s[pos + 1], t[pos + 1]);
      ASSERT_EQ(lo, 0u);
      ASSERT_EQ(hi, q - 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGrid, OrderProperty,
                         ::testing::Values(std::pair{2u, 5ul}, std::pair{3u, 4ul}, std::pair{3u, 5ul},
                                           std::pair{4u, 4ul}, std::pair{4u, 5ul}, std::pair{5u, 4ul}));
INSTANTIATE_TEST_SUITE_P(SmallGrid, EvenAlphabet,
                         ::testing::Values(std::pair{2u, 8ul}, std::pair{4u, 5ul}, std::pair{6u, 4ul}));
INSTANTIATE_TEST_SUITE_P(SmallGrid, OddAlphabet,
                         ::testing::Values(std::pair{3u, 6ul}, std::pair{5u, 5ul}, std::pair{7u, 4ul}));

TEST(Involution, ReverseAndComplementTwice) {
  for (const Word& w : all_words(2, 6)) {
    EXPECT_EQ(reverse(reverse(w)), w);
    EXPECT_EQ(complement(complement(w, Alphabet(2)), Alphabet(2)), w);
  }
}
