#include "avoidgray/word.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace avoidgray {

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw InputError("alphabet size must be in [2, " + std::to_string(kMaxAlphabet) + "], got " +
                     std::to_string(q));
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  if (text.find(',') == std::string_view::npos) {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InputError("invalid symbol '" + std::string(1, c) + "' in packed word");
      }
      out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, comma - pos);
    Symbol value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InputError("invalid symbol '" + std::string(field) + "' in separated word");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(out));
}

Word Word::prefix(std::size_t k) const {
  k = std::min(k, size());
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string Word::str(WordFormat format) const {
  std::string out;
  if (format == WordFormat::packed) {
    out.reserve(size());
    for (Symbol s : symbols_) {
      if (s >= 10) throw InputError("packed format needs symbols below 10");
      out.push_back(static_cast<char>('0' + s));
    }
    return out;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

void check_word(const Word& w, Alphabet q) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!q.contains(w[i])) {
      throw InputError("symbol " + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                       " is not below q=" + std::to_string(q.size()));
    }
  }
}

std::string_view to_string(OrderKind order) noexcept {
  return order == OrderKind::rgc ? "rgc" : "dual";
}

std::string_view to_string(Parity parity) noexcept {
  return parity == Parity::even ? "even" : "odd";
}

Parity parity(std::span<const Symbol> w, ParityRule rule) noexcept {
  unsigned bit = 0;
  for (Symbol s : w) {
    bit ^= s & 1u;
    if (rule == ParityRule::sum_plus_nonzeros && s != 0) bit ^= 1u;
  }
  return bit == 0 ? Parity::even : Parity::odd;
}

Parity parity(const Word& w, Alphabet q) {
  check_word(w, q);
  return parity(w.symbols(), q.is_even() ? ParityRule::sum_only : ParityRule::sum_plus_nonzeros);
}

namespace {

void require_same_length(const Word& s, const Word& t) {
  if (s.size() != t.size()) {
    throw InputError("word lengths differ: " + std::to_string(s.size()) + " vs " +
                     std::to_string(t.size()));
  }
}

// Shared body of both orders: the comparison at the leftmost difference is
// reversed when the prefix before it has odd parity under `rule`.
std::strong_ordering reflected_compare(const Word& s, const Word& t, ParityRule rule) {
  require_same_length(s, t);
  unsigned bit = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != t[k]) {
      const auto natural = s[k] <=> t[k];
      return bit == 0 ? natural : 0 <=> natural;
    }
    bit ^= s[k] & 1u;
    if (rule == ParityRule::sum_plus_nonzeros && s[k] != 0) bit ^= 1u;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering cmp_rgc(const Word& s, const Word& t) {
  return reflected_compare(s, t, ParityRule::sum_only);
}

std::strong_ordering cmp_dual_rgc(const Word& s, const Word& t) {
  return reflected_compare(s, t, ParityRule::sum_plus_nonzeros);
}

std::strong_ordering compare(OrderKind order, const Word& s, const Word& t) {
  return reflected_compare(s, t, parity_rule(order));
}

std::size_t hamming(const Word& s, const Word& t) {
  require_same_length(s, t);
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) count += s[i] != t[i];
  return count;
}

std::size_t diff_span(const Word& s, const Word& t) {
  require_same_length(s, t);
  const auto [left, _] = std::mismatch(s.begin(), s.end(), t.begin());
  if (left == s.end()) throw SpanError("diff_span of identical words is undefined");
  std::size_t right = s.size() - 1;
  while (s[right] == t[right]) --right;
  return right - static_cast<std::size_t>(left - s.begin());
}

Word reverse(Word w) {
  std::vector<Symbol> symbols(w.begin(), w.end());
  std::reverse(symbols.begin(), symbols.end());
  return Word(std::move(symbols));
}

Word complement(Word w, Alphabet q) {
  if (q.size() != 2) throw InputError("complement is defined for the binary alphabet only");
  check_word(w, q);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= 1u;
  return w;
}

}  // namespace avoidgray
