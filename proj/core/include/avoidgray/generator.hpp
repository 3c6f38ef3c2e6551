#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "avoidgray/classify.hpp"
#include "avoidgray/matcher.hpp"
#include "avoidgray/word.hpp"

namespace avoidgray {

using BigCount = boost::multiprecision::cpp_int;

/// Symbolwise or positional maps applied to every emitted word.
enum class WordMap { phi_end_zero, phi_end_max, reverse, complement };

[[nodiscard]] std::string_view to_string(WordMap map) noexcept;

/// Throws InputError when the map does not apply to q (complement needs q = 2,
/// phi_end_max needs q >= 3).
void check_word_map(WordMap map, Alphabet q);

[[nodiscard]] Word apply(WordMap map, Word w, Alphabet q);

/// Elementwise image of a list, order preserved.
[[nodiscard]] std::vector<Word> apply_word_map(std::vector<Word> words, WordMap map, Alphabet q);

struct PlanOptions {
  std::optional<OrderKind> order;     ///< overrides the traversal order; voids guarantees if it differs
  std::optional<Strategy> strategy;   ///< forces a strategy instead of the automatic choice
};

/// Everything needed to emit A_q^n(f) in a chosen Gray order: which factor the
/// traversal avoids, in which order, and how its words are mapped back.
struct GenerationPlan {
  Alphabet alphabet;
  std::optional<ForbiddenFactor> factor;            ///< nullopt: no restriction
  std::optional<ForbiddenFactor> effective_factor;  ///< the factor the traversal avoids
  std::vector<WordMap> post_map;                    ///< applied left to right to each traversal word
  OrderKind order_used;
  ParityRule parity_rule;
  GrayVerdict verdict;  ///< bounds of the emitted list
  bool staircase = false;  ///< traversal replaced by the closed-form list of effective_factor (01 or 10)

  [[nodiscard]] Strategy strategy() const noexcept { return verdict.strategy; }
};

/// Order in which the natural listing of A_q^n(f) is taken: reflected order for even q
/// and for 0^l, dual order otherwise.
[[nodiscard]] OrderKind natural_order_for(const ForbiddenFactor& f);

/// Automatic plan:
///   - binary 01 / 10: closed-form staircase
///   - binary 0^{l-1}1 / 1^{l-1}0, l >= 3: rebuilt from the list for 01^{l-1}
///   - factors whose natural order is not a Gray code: phi-conjugated
///   - everything else: direct traversal in the natural order
/// Throws InputError when a forced strategy does not apply to f.
[[nodiscard]] GenerationPlan plan(const ForbiddenFactor& f, const PlanOptions& options = {});

/// Plan for the unrestricted set A_q^n.
[[nodiscard]] GenerationPlan plan_unrestricted(Alphabet q, const PlanOptions& options = {});

/// Resumable enumeration of A_q^n(f) following a plan. The underlying traversal
/// keeps one frame per depth (automaton state, direction bit, symbols tried) and
/// visits prefixes in exactly the order of the recursive formulation.
///
/// Single consumer; distinct streams may run concurrently.
class WordStream {
 public:
  WordStream(const GenerationPlan& plan, std::size_t n);

  /// Advances to the next word; false once the list is exhausted.
  bool next();

  /// Word produced by the last successful next().
  [[nodiscard]] const Word& current() const noexcept { return mapped_ ? output_ : buffer_; }

  [[nodiscard]] std::size_t length() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t emitted() const noexcept { return emitted_; }

  /// Calls of the recursive formulation so far (the root plus one per extended prefix).
  /// The staircase strategy counts one node per word.
  [[nodiscard]] std::uint64_t nodes_visited() const noexcept { return nodes_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(WordStream* stream) : stream_(stream) { advance(); }
    reference operator*() const { return stream_->current(); }
    pointer operator->() const { return &stream_->current(); }
    iterator& operator++() { advance(); return *this; }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.stream_ == nullptr; }

   private:
    void advance() {
      if (stream_ != nullptr && !stream_->next()) stream_ = nullptr;
    }
    WordStream* stream_ = nullptr;
  };

  /// Single-pass range over the remaining words.
  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  struct Frame {
    MatchState state;
    std::uint32_t dir;
    std::uint32_t tried;
  };

  bool next_traversal();
  bool next_staircase();

  Alphabet q_;
  std::size_t n_;
  std::shared_ptr<const TransitionTable> table_;  // null: nothing is forbidden
  ParityRule rule_;
  std::vector<WordMap> post_map_;
  bool mapped_;
  bool staircase_;
  bool staircase_rising_ = false;  // 0^{n-i}1^i for 10, 1^i0^{n-i} for 01

  std::vector<Frame> frames_;
  Word buffer_;
  Word output_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t emitted_ = 0;
  std::uint64_t nodes_ = 0;
};

[[nodiscard]] WordStream generate(const GenerationPlan& plan, std::size_t n);

/// Materializes the stream. Throws ResourceError if it would exceed `budget` words.
[[nodiscard]] std::vector<Word> generate_all(const GenerationPlan& plan, std::size_t n,
                                             std::uint64_t budget = 10'000'000);

enum class Extreme { first, last };

/// First or last word, in the given order, of length n having prefix p and avoiding f.
/// Built by greedy extension: at each position take the order-extreme symbol the
/// automaton allows. Throws InputError if p contains f, uses a bad symbol, or |p| > n.
[[nodiscard]] Word extreme_word(const Word& prefix, const ForbiddenFactor& f, std::size_t n,
                                Extreme which, OrderKind order);

/// |A_q^n(f)| by a transfer DP over the automaton states 0..l-1.
[[nodiscard]] BigCount count_avoiding(const ForbiddenFactor& f, std::size_t n);

/// Exact number of nodes the plan's traversal visits for length n
/// (sum over k <= n of the number of factor-free length-k prefixes).
[[nodiscard]] BigCount count_traversal_nodes(const GenerationPlan& plan, std::size_t n);

/// Number of words the plan emits for length n.
[[nodiscard]] BigCount count_words(const GenerationPlan& plan, std::size_t n);

}  // namespace avoidgray
