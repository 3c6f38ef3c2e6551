#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "avoidgray/classify.hpp"
#include "avoidgray/generator.hpp"
#include "avoidgray/word.hpp"

namespace avoidgray {

// Readable failure messages.
inline void PrintTo(const Word& w, std::ostream* os) { *os << '"' << w.str(WordFormat::separated) << '"'; }

}  // namespace avoidgray

namespace avoidgray::testing {

// Every word of length n over q symbols, lexicographic.
inline std::vector<Word> all_words(std::uint32_t q, std::size_t n) {
  std::vector<Word> out;
  Word w = Word::repeat(0, n);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

// Factors of length l over q symbols, lexicographic.
inline std::vector<ForbiddenFactor> all_factors(std::uint32_t q, std::size_t l) {
  std::vector<ForbiddenFactor> out;
  for (Word& w : all_words(q, l)) out.emplace_back(std::move(w), Alphabet(q));
  return out;
}

inline ForbiddenFactor factor(const std::string& text, std::uint32_t q) {
  return ForbiddenFactor(Word::parse(text), Alphabet(q));
}

inline std::vector<Word> words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(Word::parse(t));
  return out;
}

inline std::vector<Word> collect(const GenerationPlan& p, std::size_t n) {
  std::vector<Word> out;
  WordStream stream(p, n);
  for (const Word& w : stream) out.push_back(w);
  return out;
}

inline std::vector<Word> sorted(std::vector<Word> list) {
  std::sort(list.begin(), list.end());
  return list;
}

// Longest suffix of text that is a prefix of f, straight from the definition.
inline std::size_t longest_suffix_prefix(const Word& text, const Word& f) {
  for (std::size_t k = std::min(text.size(), f.size()); k > 0; --k) {
    if (std::equal(text.end() - static_cast<std::ptrdiff_t>(k), text.end(), f.begin())) return k;
  }
  return 0;
}

}  // namespace avoidgray::testing
