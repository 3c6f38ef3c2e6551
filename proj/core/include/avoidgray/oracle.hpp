#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "avoidgray/classify.hpp"
#include "avoidgray/word.hpp"

namespace avoidgray::oracle {

// Ground truth built without the automaton or the traversal: words are
// enumerated exhaustively, filtered by plain substring search and ordered by
// a comparison sort over the word-level comparators.

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Plain substring search.
[[nodiscard]] bool contains_factor(std::span<const Symbol> w, std::span<const Symbol> f);

/// All of A_q^n (avoiding f when given), sorted by `order`.
/// Throws ResourceError when q^n exceeds the budget.
[[nodiscard]] std::vector<Word> brute_force_list(const std::optional<ForbiddenFactor>& f, Alphabet q,
                                                 std::size_t n, OrderKind order,
                                                 std::uint64_t budget = kDefaultBudget);

/// An adjacent pair of a list, 0-based index of the first word.
struct PairWitness {
  std::size_t index;
  Word first;
  Word second;
};

struct GrayReport {
  std::uint64_t word_count = 0;
  std::size_t max_hamming = 0;
  std::size_t max_span = 0;
  std::optional<PairWitness> worst_hamming;
  std::optional<PairWitness> worst_span;
  std::uint64_t leftmost_step_violations = 0;  ///< leftmost change not +-1 (checked when required)
  std::uint64_t avoidance_violations = 0;      ///< words containing f
  std::uint64_t order_violations = 0;          ///< adjacent pairs not strictly increasing
  std::uint64_t length_violations = 0;         ///< words whose length differs from the first

  [[nodiscard]] std::uint64_t violations() const noexcept {
    return leftmost_step_violations + avoidance_violations + order_violations + length_violations;
  }
  /// Zero violations and every adjacent pair within (d, e).
  [[nodiscard]] bool certifies(std::size_t d, std::size_t e) const noexcept {
    return violations() == 0 && max_hamming <= d && max_span <= e;
  }
};

struct VerifyOptions {
  std::optional<ForbiddenFactor> factor;  ///< avoidance checked when present
  std::optional<OrderKind> order;         ///< strict increase checked when present
  /// Check that the leftmost differing symbol moves by +-1. Defaults to: an order is
  /// given and f ends in 0 or q-1.
  std::optional<bool> leftmost_step;
};

/// Streaming form of verify(): feed words one at a time.
class GrayChecker {
 public:
  GrayChecker(Alphabet q, VerifyOptions options);

  void add(const Word& w);
  [[nodiscard]] const GrayReport& report() const noexcept { return report_; }

 private:
  Alphabet q_;
  VerifyOptions options_;
  bool check_step_;
  std::optional<Word> previous_;
  GrayReport report_;
};

/// Scans adjacent pairs for Hamming distance and span maxima, and checks avoidance,
/// order and the +-1 law as configured. Throws InputError on an empty or ragged list.
[[nodiscard]] GrayReport verify(std::span<const Word> list, Alphabet q, const VerifyOptions& options);

/// Smallest n <= cap such that the natural-order traversal in `order` has an adjacent pair
/// at Hamming distance above d.
[[nodiscard]] std::optional<std::size_t> smallest_counterexample_n(const ForbiddenFactor& f,
                                                                   OrderKind order, std::size_t d,
                                                                   std::size_t cap = 12);

enum class End { first, last };

/// First or last word of p|A_q^n(f) in `order`, by greedy extension with plain suffix checks.
[[nodiscard]] Word extreme_word(const Word& prefix, const ForbiddenFactor& f, std::size_t n, End which,
                                OrderKind order);

/// Finite-horizon surrogate for zero periodicity: for every factor-free prefix p with
/// |p| <= max_prefix, the first and last words of p|A_q^N(f), N = |p| + 3l + 6, under the
/// reflected order (even q) or dual order (odd q) end in l + 2 zeros.
[[nodiscard]] bool zero_periodicity_surrogate(const ForbiddenFactor& f, std::size_t max_prefix = 6);

/// Factor-free words of length exactly k, in lexicographic order.
[[nodiscard]] std::vector<Word> factor_free_words(const ForbiddenFactor& f, std::size_t k);

}  // namespace avoidgray::oracle
