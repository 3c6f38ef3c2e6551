#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "avoidgray/word.hpp"

namespace avoidgray {

class ForbiddenFactor;

/// KMP border array of a factor f of length l: entries b[0..l], b[0] = -1, and
/// b[i] is the length of the longest proper border of f_1..f_i.
struct BorderArray {
  std::vector<std::int32_t> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::int32_t operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const BorderArray&, const BorderArray&) = default;
};

/// Throws InputError on an empty factor.
[[nodiscard]] BorderArray make_border(const Word& factor);

/// Matcher state: length of the longest suffix of the input read so far that is a prefix of f.
using MatchState = std::uint32_t;

/// The l x q automaton table M. M(i, j) is the length of the longest suffix of
/// f_1..f_i j that is a prefix of f; reaching l means f has just occurred.
class TransitionTable {
 public:
  [[nodiscard]] std::size_t factor_length() const noexcept { return length_; }
  [[nodiscard]] std::uint32_t alphabet_size() const noexcept { return q_; }

  [[nodiscard]] MatchState operator()(MatchState i, Symbol j) const noexcept {
    return cells_[static_cast<std::size_t>(i) * q_ + j];
  }
  [[nodiscard]] std::span<const MatchState> row(MatchState i) const noexcept {
    return {cells_.data() + static_cast<std::size_t>(i) * q_, q_};
  }

  /// Runs the automaton over w from state 0; returns the last state, or
  /// factor_length() as soon as f occurs.
  [[nodiscard]] MatchState run(std::span<const Symbol> w) const;

  friend TransitionTable make_array(const ForbiddenFactor&, const BorderArray&);

 private:
  TransitionTable(std::size_t length, std::uint32_t q)
      : length_(length), q_(q), cells_(length * q, 0) {}

  std::size_t length_;
  std::uint32_t q_;
  std::vector<MatchState> cells_;  // row-major, length_ x q_
};

/// Builds M from f and its border array in O(l*q). Throws InputError if b does
/// not belong to f or a factor symbol is not below q.
[[nodiscard]] TransitionTable make_array(const ForbiddenFactor& factor, const BorderArray& border);

/// make_array(f, make_border(f)).
[[nodiscard]] TransitionTable build_transition_table(const ForbiddenFactor& factor);

}  // namespace avoidgray
