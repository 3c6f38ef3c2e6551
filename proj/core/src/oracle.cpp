#include "avoidgray/oracle.hpp"

#include <algorithm>
#include <string>

#include "avoidgray/generator.hpp"

namespace avoidgray::oracle {

namespace {

bool ends_with(std::span<const Symbol> w, std::span<const Symbol> f) {
  return w.size() >= f.size() && std::equal(f.begin(), f.end(), w.end() - static_cast<std::ptrdiff_t>(f.size()));
}

// Odometer increment over A_q^n; false after the last word.
bool increment(Word& w, std::uint32_t q) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] + 1 < q) {
      ++w[i];
      return true;
    }
    w[i] = 0;
  }
  return false;
}

}  // namespace

bool contains_factor(std::span<const Symbol> w, std::span<const Symbol> f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::vector<Word> brute_force_list(const std::optional<ForbiddenFactor>& f, Alphabet q, std::size_t n,
                                   OrderKind order, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / q.size()) {
      throw ResourceError("q^n exceeds the brute-force budget of " + std::to_string(budget));
    }
    total *= q.size();
  }
  if (f && f->alphabet() != q) throw InputError("factor alphabet differs from q");

  std::vector<Word> words;
  Word w = Word::repeat(0, n);
  do {
    if (!f || !contains_factor(w.symbols(), f->word().symbols())) words.push_back(w);
  } while (increment(w, q.size()));

  std::sort(words.begin(), words.end(),
            [order](const Word& a, const Word& b) { return compare(order, a, b) < 0; });
  return words;
}

GrayChecker::GrayChecker(Alphabet q, VerifyOptions options)
    : q_(q), options_(std::move(options)), check_step_(false) {
  if (options_.leftmost_step) {
    check_step_ = *options_.leftmost_step;
  } else {
    check_step_ = options_.order && options_.factor &&
                  (options_.factor->ends_in_zero() || options_.factor->ends_in_max());
  }
}

void GrayChecker::add(const Word& w) {
  ++report_.word_count;
  if (options_.factor && contains_factor(w.symbols(), options_.factor->word().symbols())) {
    ++report_.avoidance_violations;
  }
  if (previous_) {
    const Word& prev = *previous_;
    if (prev.size() != w.size()) {
      ++report_.length_violations;
      previous_ = w;
      return;
    }
    const std::size_t index = report_.word_count - 2;
    const std::size_t h = hamming(prev, w);
    if (h == 0) {
      ++report_.order_violations;  // repeated word
    } else {
      const std::size_t span = diff_span(prev, w);
      if (h > report_.max_hamming) {
        report_.worst_hamming = PairWitness{index, prev, w};
        report_.max_hamming = h;
      }
      if (span > report_.max_span || !report_.worst_span) {
        report_.worst_span = PairWitness{index, prev, w};
        report_.max_span = span;
      }
      if (options_.order && compare(*options_.order, prev, w) >= 0) ++report_.order_violations;
      if (check_step_) {
        const auto k = static_cast<std::size_t>(
            std::mismatch(prev.begin(), prev.end(), w.begin()).first - prev.begin());
        const Symbol a = prev[k];
        const Symbol b = w[k];
        if (a + 1 != b && b + 1 != a) ++report_.leftmost_step_violations;
      }
    }
  }
  previous_ = w;
}

GrayReport verify(std::span<const Word> list, Alphabet q, const VerifyOptions& options) {
  if (list.empty()) throw InputError("cannot verify an empty list");
  for (const Word& w : list) {
    if (w.size() != list.front().size()) throw InputError("list has words of different lengths");
    check_word(w, q);
  }
  GrayChecker checker(q, options);
  for (const Word& w : list) checker.add(w);
  return checker.report();
}

std::optional<std::size_t> smallest_counterexample_n(const ForbiddenFactor& f, OrderKind order,
                                                     std::size_t d, std::size_t cap) {
  const GenerationPlan natural = plan(f, PlanOptions{order, Strategy::direct});
  for (std::size_t n = 1; n <= cap; ++n) {
    WordStream stream(natural, n);
    std::optional<Word> previous;
    while (stream.next()) {
      if (previous && hamming(*previous, stream.current()) > d) return n;
      previous = stream.current();
    }
  }
  return std::nullopt;
}

Word extreme_word(const Word& prefix, const ForbiddenFactor& f, std::size_t n, End which,
                  OrderKind order) {
  if (contains_factor(prefix.symbols(), f.word().symbols())) {
    throw InputError("prefix contains the forbidden factor");
  }
  const ParityRule rule = parity_rule(order);
  const std::uint32_t q = f.alphabet().size();
  Word out = prefix;
  while (out.size() < n) {
    const bool even = parity(out.symbols(), rule) == Parity::even;
    const bool ascending = (which == End::first) == even;
    bool extended = false;
    for (std::uint32_t t = 0; t < q && !extended; ++t) {
      out.push_back(ascending ? t : q - 1 - t);
      if (ends_with(out.symbols(), f.word().symbols())) {
        out.pop_back();
      } else {
        extended = true;
      }
    }
    if (!extended) throw InputError("prefix cannot be extended");  // impossible for q >= 2
  }
  return out;
}

std::vector<Word> factor_free_words(const ForbiddenFactor& f, std::size_t k) {
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len < k; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Symbol s = 0; s < f.alphabet().size(); ++s) {
        Word x = w;
        x.push_back(s);
        if (!ends_with(x.symbols(), f.word().symbols())) next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  return level;
}

bool zero_periodicity_surrogate(const ForbiddenFactor& f, std::size_t max_prefix) {
  const OrderKind order = natural_order(f.alphabet());
  const std::size_t len = f.length();
  const std::size_t tail = len + 2;
  for (std::size_t k = 0; k <= max_prefix; ++k) {
    for (const Word& p : factor_free_words(f, k)) {
      const std::size_t horizon = k + 3 * len + 6;
      for (End which : {End::first, End::last}) {
        const Word w = extreme_word(p, f, horizon, which, order);
        if (!std::all_of(w.end() - static_cast<std::ptrdiff_t>(tail), w.end(), [](Symbol s) { return s == 0; })) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace avoidgray::oracle
