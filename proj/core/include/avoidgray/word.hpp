#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoidgray/errors.hpp"

namespace avoidgray {

using Symbol = std::uint32_t;

/// Largest supported alphabet; keeps the l*q transition table practical.
inline constexpr std::uint32_t kMaxAlphabet = 1u << 16;

/// The alphabet {0, 1, ..., q-1}, q >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t q);

  [[nodiscard]] std::uint32_t size() const noexcept { return q_; }
  [[nodiscard]] Symbol max_symbol() const noexcept { return q_ - 1; }
  [[nodiscard]] bool is_even() const noexcept { return q_ % 2 == 0; }
  [[nodiscard]] bool contains(Symbol s) const noexcept { return s < q_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t q_;
};

/// Text layouts for a word: contiguous digits (q <= 10) or comma separated.
enum class WordFormat { packed, separated };

/// A finite word. Storage is 0-indexed; positions reported to users are 1-indexed.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  /// Parses "0121" (packed digits) or "0,1,12" (comma separated). Empty text is the empty word.
  static Word parse(std::string_view text);

  /// n copies of s.
  static Word repeat(Symbol s, std::size_t n) { return Word(std::vector<Symbol>(n, s)); }

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  [[nodiscard]] Symbol back() const { return symbols_.back(); }

  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  void resize(std::size_t n, Symbol fill = 0) { symbols_.resize(n, fill); }
  void append(const Word& other) { symbols_.insert(symbols_.end(), other.begin(), other.end()); }

  /// Length-k prefix (k clamped to size()).
  [[nodiscard]] Word prefix(std::size_t k) const;

  /// Packed output requires every symbol < 10.
  [[nodiscard]] std::string str(WordFormat format = WordFormat::packed) const;

  /// Lexicographic comparison; only used for canonical set comparisons, never as an enumeration order.
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Word concatenation.
Word operator+(Word lhs, const Word& rhs);

/// Throws InputError if some symbol of w is not below q.
void check_word(const Word& w, Alphabet q);

enum class Parity { even, odd };

/// How the direction bit of a prefix is computed.
///   sum_only:          parity of the symbol sum (drives the reflected Gray code order)
///   sum_plus_nonzeros: parity of the symbol sum plus the count of non-zero symbols (dual order)
enum class ParityRule { sum_only, sum_plus_nonzeros };

/// The two Gray orders on A_q^n.
enum class OrderKind { rgc, dual_rgc };

[[nodiscard]] constexpr ParityRule parity_rule(OrderKind order) noexcept {
  return order == OrderKind::rgc ? ParityRule::sum_only : ParityRule::sum_plus_nonzeros;
}

/// Reflected order for even q, dual order for odd q.
[[nodiscard]] inline OrderKind natural_order(Alphabet q) noexcept {
  return q.is_even() ? OrderKind::rgc : OrderKind::dual_rgc;
}

[[nodiscard]] std::string_view to_string(OrderKind order) noexcept;
[[nodiscard]] std::string_view to_string(Parity parity) noexcept;

/// Parity of a word under an explicit rule.
[[nodiscard]] Parity parity(std::span<const Symbol> w, ParityRule rule) noexcept;

/// Word parity: symbol sum for even q, symbol sum plus non-zero count for odd q.
[[nodiscard]] Parity parity(const Word& w, Alphabet q);

/// Reflected Gray code order. Throws InputError on length mismatch.
[[nodiscard]] std::strong_ordering cmp_rgc(const Word& s, const Word& t);

/// Dual reflected Gray code order. Throws InputError on length mismatch.
[[nodiscard]] std::strong_ordering cmp_dual_rgc(const Word& s, const Word& t);

[[nodiscard]] std::strong_ordering compare(OrderKind order, const Word& s, const Word& t);

/// Number of differing positions.
[[nodiscard]] std::size_t hamming(const Word& s, const Word& t);

/// Rightmost minus leftmost differing position. Throws SpanError when s == t.
[[nodiscard]] std::size_t diff_span(const Word& s, const Word& t);

[[nodiscard]] Word reverse(Word w);

/// Binary complement; throws InputError unless q == 2.
[[nodiscard]] Word complement(Word w, Alphabet q);

}  // namespace avoidgray
