#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "avoidgray/word.hpp"

namespace avoidgray {

/// A nonempty word over A_q whose occurrences are forbidden.
class ForbiddenFactor {
 public:
  /// Throws InputError if the word is empty or uses a symbol >= q.
  ForbiddenFactor(Word word, Alphabet q);

  [[nodiscard]] const Word& word() const noexcept { return word_; }
  [[nodiscard]] Alphabet alphabet() const noexcept { return q_; }
  [[nodiscard]] std::size_t length() const noexcept { return word_.size(); }
  /// Length of the maximal all-0 suffix.
  [[nodiscard]] std::size_t zero_suffix_len() const noexcept { return zero_suffix_len_; }
  [[nodiscard]] Symbol last_symbol() const noexcept { return word_.back(); }
  [[nodiscard]] bool ends_in_zero() const noexcept { return last_symbol() == 0; }
  [[nodiscard]] bool ends_in_max() const noexcept { return last_symbol() == q_.max_symbol(); }
  [[nodiscard]] bool is_zero_run() const noexcept { return zero_suffix_len_ == word_.size(); }

  friend bool operator==(const ForbiddenFactor&, const ForbiddenFactor&) = default;

 private:
  Word word_;
  Alphabet q_;
  std::size_t zero_suffix_len_;
};

/// Result of a family-membership test; `m` is the smallest witnessing period parameter.
struct Membership {
  bool member = false;
  std::optional<std::size_t> m;

  explicit operator bool() const noexcept { return member; }
};

/// f = b0 with b a suffix of the left-infinite word (1 (q-1) 0^m)^(-inf), some m >= 0.
[[nodiscard]] Membership in_U(const ForbiddenFactor& f);

/// f = b0 with b a suffix of (1 0^m)^(-inf), some m >= 0. Alphabet independent.
[[nodiscard]] Membership in_V(const ForbiddenFactor& f);

/// f = (q-2)^j (q-1), j >= 0. Always false for q = 2.
[[nodiscard]] bool in_W(const ForbiddenFactor& f);

[[nodiscard]] bool induces_zero_periodicity(const ForbiddenFactor& f);

/// Non-zero ultimate periods reachable by extreme words (empty iff zero periodic):
/// {1(q-1)0^m} for even q and f in U_q, {10^m} for odd q and f in V, {(q-2)} for f in W_q.
[[nodiscard]] std::vector<Word> nonzero_period_profile(const ForbiddenFactor& f);

enum class Family {
  mid_symbol,       ///< ends in neither 0 nor q-1
  end_zero,         ///< ends in 0, zero periodic (outside U_q for even q, outside V for odd q)
  end_max,          ///< ends in q-1, q >= 3, outside W_q
  end_max_q2,       ///< q = 2, ends in 1
  zero_run,         ///< 0^l
  max_then_zeros,   ///< (q-1)0^l, l >= 1, even q
  in_u,             ///< U_q minus the two special forms, even q
  in_v,             ///< V minus 0^l, odd q
  in_w,             ///< W_q, q >= 3
};

[[nodiscard]] std::string_view to_string(Family family) noexcept;

struct Classification {
  Family family;
  std::optional<std::size_t> family_param;  ///< m of U_q / V when a member
  bool induces_zero_periodicity;
  std::vector<Word> nonzero_periods;
};

[[nodiscard]] Classification classify(const ForbiddenFactor& f);

/// How the emitted list is obtained from a plain traversal.
enum class Strategy {
  direct,              ///< the traversal itself
  phi_conjugate,       ///< phi applied to the list for phi(f)
  reverse_complement,  ///< binary 0^{l-1}1 / 1^{l-1}0 rebuilt from the list for 01^{l-1}
  staircase,           ///< binary 01 / 10, emitted in closed form
};

[[nodiscard]] std::string_view to_string(Strategy strategy) noexcept;

/// What is known about the natural-order listing of A_q^n(f).
enum class GrayClaim { gray, not_gray, unproven };

[[nodiscard]] std::string_view to_string(GrayClaim claim) noexcept;

/// Order and strategy to use for f, and the (d, e) bounds of the list that strategy emits:
/// adjacent words differ in at most d positions whose span is at most e.
struct GrayVerdict {
  OrderKind order;        ///< order of the traversal that produces the list
  GrayClaim natural;      ///< Graycodeness of A_q^n(f) under its natural order
  std::optional<std::size_t> d;
  std::optional<std::size_t> e;
  Strategy strategy;

  /// True when the emitted list carries (d, e) guarantees.
  [[nodiscard]] bool is_gray() const noexcept { return d.has_value() && e.has_value(); }
};

/// Verdict for f; not-Gray factors are routed through phi and report phi(f)'s bounds.
[[nodiscard]] GrayVerdict gray_verdict(const ForbiddenFactor& f);

/// Verdict for the unrestricted set A_q^n.
[[nodiscard]] GrayVerdict unrestricted_verdict(Alphabet q);

enum class PhiMode {
  end_zero,  ///< swaps 0 and 1
  end_max,   ///< swaps q-2 and q-1, q >= 3
};

/// Mode matching the last symbol of f. Throws InputError if f ends in neither 0 nor q-1,
/// or ends in q-1 with q = 2.
[[nodiscard]] PhiMode phi_mode_for(const ForbiddenFactor& f);

/// Symbolwise involution. Throws InputError for end_max with q = 2.
[[nodiscard]] Symbol phi(Symbol s, Alphabet q, PhiMode mode);
[[nodiscard]] Word phi(Word w, Alphabet q, PhiMode mode);

/// Eventually periodic word prefix . period^inf.
struct TailForm {
  Word prefix;
  Word period;  ///< nonempty

  /// First n symbols.
  [[nodiscard]] Word expand(std::size_t n) const;
  /// True if w equals the first |w| symbols of this infinite word.
  [[nodiscard]] bool is_prefix_of_expansion(std::span<const Symbol> w) const;
};

/// For a zero-periodic f, the forms r 0^inf that can follow a prefix p in the first or last
/// word of p|A_q^inf(f). Empty when f does not induce zero periodicity.
[[nodiscard]] std::vector<TailForm> zero_tail_templates(const ForbiddenFactor& f);

}  // namespace avoidgray
