#include "avoidgray/matcher.hpp"

#include <string>

#include "avoidgray/classify.hpp"

namespace avoidgray {

BorderArray make_border(const Word& factor) {
  const std::size_t len = factor.size();
  if (len == 0) throw InputError("forbidden factor must be nonempty");

  // Positions of f are 1-indexed below, as in the usual KMP formulation.
  auto f = [&](std::size_t pos) { return factor[pos - 1]; };
  BorderArray b{std::vector<std::int32_t>(len + 1, 0)};
  b.values[0] = -1;
  std::int32_t i = 0;
  for (std::size_t j = 1; j + 1 <= len; ++j) {
    b.values[j] = i;
    while (i >= 0 && f(j + 1) != f(static_cast<std::size_t>(i) + 1)) i = b.values[static_cast<std::size_t>(i)];
    ++i;
  }
  b.values[len] = i;
  return b;
}

MatchState TransitionTable::run(std::span<const Symbol> w) const {
  MatchState state = 0;
  for (Symbol s : w) {
    state = (*this)(state, s);
    if (state == length_) return state;
  }
  return state;
}

TransitionTable make_array(const ForbiddenFactor& factor, const BorderArray& border) {
  const Word& f = factor.word();
  const std::size_t len = f.size();
  const std::uint32_t q = factor.alphabet().size();
  check_word(f, factor.alphabet());
  if (border.size() != len + 1 || border != make_border(f)) {
    throw InputError("border array does not belong to factor " + f.str(WordFormat::separated));
  }

  TransitionTable table(len, q);
  for (Symbol j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      MatchState value = 0;
      if (f[i] == j) {
        value = static_cast<MatchState>(i + 1);
      } else if (i > 0) {
        value = table.cells_[static_cast<std::size_t>(border[i]) * q + j];
      }
      table.cells_[i * q + j] = value;
    }
  }
  return table;
}

TransitionTable build_transition_table(const ForbiddenFactor& factor) {
  return make_array(factor, make_border(factor.word()));
}

}  // namespace avoidgray
