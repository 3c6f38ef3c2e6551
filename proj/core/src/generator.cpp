#include "avoidgray/generator.hpp"

#include <algorithm>
#include <string>

namespace avoidgray {

namespace {

bool is_binary_chain(const ForbiddenFactor& f, Symbol head) {
  // head^{l-1} (1-head), l >= 2
  if (f.alphabet().size() != 2 || f.length() < 2) return false;
  const Word& w = f.word();
  return std::all_of(w.begin(), w.end() - 1, [&](Symbol s) { return s == head; }) &&
         w.back() == (head ^ 1u);
}

bool is_zeros_then_one(const ForbiddenFactor& f) { return is_binary_chain(f, 0); }
bool is_ones_then_zero(const ForbiddenFactor& f) { return is_binary_chain(f, 1); }

WordMap phi_map(PhiMode mode) {
  return mode == PhiMode::end_zero ? WordMap::phi_end_zero : WordMap::phi_end_max;
}

// Bounds survive only when the traversal runs in the order they were proven for.
GrayVerdict with_order(GrayVerdict v, OrderKind order) {
  if (order != v.order) {
    v.order = order;
    v.d.reset();
    v.e.reset();
  }
  return v;
}

GenerationPlan make_plan(const ForbiddenFactor& f, ForbiddenFactor effective,
                         std::vector<WordMap> post_map, GrayVerdict verdict) {
  return GenerationPlan{f.alphabet(),       f,
                        std::move(effective), std::move(post_map),
                        verdict.order,      parity_rule(verdict.order),
                        verdict};
}

GenerationPlan direct_plan(const ForbiddenFactor& f, const PlanOptions& options) {
  GrayVerdict v = gray_verdict(f);
  if (v.strategy != Strategy::direct) {
    v = GrayVerdict{natural_order_for(f), v.natural, std::nullopt, std::nullopt, Strategy::direct};
  }
  v = with_order(v, options.order.value_or(v.order));
  return make_plan(f, f, {}, v);
}

GenerationPlan staircase_plan(const ForbiddenFactor& f) {
  GrayVerdict v = gray_verdict(f);
  v = GrayVerdict{OrderKind::rgc, v.natural, 1, 1, Strategy::staircase};
  GenerationPlan p = make_plan(f, f, {}, v);
  p.staircase = true;
  return p;
}

GenerationPlan reverse_complement_plan(const ForbiddenFactor& f, const PlanOptions& options) {
  const bool zeros_then_one = is_zeros_then_one(f);
  if (!zeros_then_one && !is_ones_then_zero(f)) {
    throw InputError("revcomp applies only to binary factors 0^{l-1}1 and 1^{l-1}0");
  }
  if (f.length() == 2) return staircase_plan(f);

  // A(1^{l-1}0) = reverse(A(01^{l-1})); A(0^{l-1}1) = complement of that.
  Word base_word = Word::repeat(1, f.length());
  base_word[0] = 0;
  const ForbiddenFactor base(base_word, f.alphabet());
  const GenerationPlan inner = direct_plan(base, PlanOptions{options.order, Strategy::direct});

  std::vector<WordMap> post{WordMap::reverse};
  if (zeros_then_one) post.push_back(WordMap::complement);
  const GrayVerdict v{inner.verdict.order, gray_verdict(f).natural, inner.verdict.d,
                      inner.verdict.e, Strategy::reverse_complement};
  return make_plan(f, base, std::move(post), v);
}

GenerationPlan auto_inner_plan(const ForbiddenFactor& f, const PlanOptions& options);

GenerationPlan phi_plan(const ForbiddenFactor& f, const PlanOptions& options) {
  const PhiMode mode = phi_mode_for(f);
  const ForbiddenFactor image(phi(f.word(), f.alphabet(), mode), f.alphabet());
  GenerationPlan inner = auto_inner_plan(image, PlanOptions{options.order, std::nullopt});

  std::vector<WordMap> post = inner.post_map;
  post.push_back(phi_map(mode));
  const GrayVerdict v{inner.verdict.order, gray_verdict(f).natural, inner.verdict.d,
                      inner.verdict.e, Strategy::phi_conjugate};
  GenerationPlan p = make_plan(f, *inner.effective_factor, std::move(post), v);
  p.order_used = inner.order_used;
  p.parity_rule = inner.parity_rule;
  p.staircase = inner.staircase;
  return p;
}

GenerationPlan auto_inner_plan(const ForbiddenFactor& f, const PlanOptions& options) {
  if (!options.order) {
    if (f.alphabet().size() == 2 && f.length() == 2 && (is_zeros_then_one(f) || is_ones_then_zero(f))) {
      return staircase_plan(f);
    }
    if (f.length() >= 3 && (is_zeros_then_one(f) || is_ones_then_zero(f))) {
      return reverse_complement_plan(f, options);
    }
  }
  if (gray_verdict(f).strategy == Strategy::phi_conjugate) return phi_plan(f, options);
  return direct_plan(f, options);
}

}  // namespace

std::string_view to_string(WordMap map) noexcept {
  switch (map) {
    case WordMap::phi_end_zero: return "phi0";
    case WordMap::phi_end_max: return "phimax";
    case WordMap::reverse: return "reverse";
    case WordMap::complement: return "complement";
  }
  return "?";
}

void check_word_map(WordMap map, Alphabet q) {
  if (map == WordMap::complement && q.size() != 2) {
    throw InputError("complement needs q = 2");
  }
  if (map == WordMap::phi_end_max && q.size() < 3) {
    throw InputError("phi for factors ending in q-1 needs q >= 3");
  }
}

Word apply(WordMap map, Word w, Alphabet q) {
  switch (map) {
    case WordMap::phi_end_zero: return phi(std::move(w), q, PhiMode::end_zero);
    case WordMap::phi_end_max: return phi(std::move(w), q, PhiMode::end_max);
    case WordMap::reverse: return reverse(std::move(w));
    case WordMap::complement: return complement(std::move(w), q);
  }
  return w;
}

std::vector<Word> apply_word_map(std::vector<Word> words, WordMap map, Alphabet q) {
  check_word_map(map, q);
  for (Word& w : words) w = apply(map, std::move(w), q);
  return words;
}

OrderKind natural_order_for(const ForbiddenFactor& f) {
  return f.is_zero_run() ? OrderKind::rgc : natural_order(f.alphabet());
}

GenerationPlan plan(const ForbiddenFactor& f, const PlanOptions& options) {
  if (!options.strategy) {
    // A bare order override is an experiment on the plain traversal.
    if (options.order) return direct_plan(f, options);
    return auto_inner_plan(f, options);
  }
  switch (*options.strategy) {
    case Strategy::direct: return direct_plan(f, options);
    case Strategy::phi_conjugate: return phi_plan(f, options);
    case Strategy::reverse_complement: return reverse_complement_plan(f, options);
    case Strategy::staircase:
      if (f.length() != 2 || !(is_zeros_then_one(f) || is_ones_then_zero(f))) {
        throw InputError("staircase applies only to the binary factors 01 and 10");
      }
      return staircase_plan(f);
  }
  return auto_inner_plan(f, options);
}

GenerationPlan plan_unrestricted(Alphabet q, const PlanOptions& options) {
  if (options.strategy && *options.strategy != Strategy::direct) {
    throw InputError("only the direct strategy applies without a forbidden factor");
  }
  const GrayVerdict base = unrestricted_verdict(q);
  const GrayVerdict v = with_order(base, options.order.value_or(base.order));
  return GenerationPlan{q, std::nullopt, std::nullopt, {}, v.order, parity_rule(v.order), v};
}

WordStream::WordStream(const GenerationPlan& plan, std::size_t n)
    : q_(plan.alphabet),
      n_(n),
      rule_(plan.parity_rule),
      post_map_(plan.post_map),
      mapped_(!plan.post_map.empty()),
      staircase_(plan.staircase),
      frames_(n + 1),
      buffer_(Word::repeat(0, n)) {
  for (WordMap map : post_map_) check_word_map(map, q_);
  if (plan.effective_factor && !staircase_) {
    table_ = std::make_shared<const TransitionTable>(build_transition_table(*plan.effective_factor));
  }
  if (staircase_) staircase_rising_ = plan.effective_factor->word() == Word{1, 0};
}

bool WordStream::next() {
  const bool ok = staircase_ ? next_staircase() : next_traversal();
  if (!ok) return false;
  ++emitted_;
  if (mapped_) {
    output_ = buffer_;
    for (WordMap map : post_map_) output_ = apply(map, std::move(output_), q_);
  }
  return true;
}

bool WordStream::next_staircase() {
  // emitted_ words so far; the i-th word has i ones.
  if (emitted_ > n_) return false;
  const std::size_t ones = emitted_;
  if (ones > 0) {
    const std::size_t pos = staircase_rising_ ? n_ - ones : ones - 1;
    buffer_[pos] = 1;
  }
  ++nodes_;
  return true;
}

bool WordStream::next_traversal() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    frames_[0] = Frame{0, 0, 0};
    depth_ = 0;
    nodes_ = 1;
    if (n_ == 0) {
      done_ = true;
      return true;
    }
  }

  const std::uint32_t q = q_.size();
  const MatchState forbidden = table_ ? static_cast<MatchState>(table_->factor_length()) : 0;
  const bool dual = rule_ == ParityRule::sum_plus_nonzeros;
  std::size_t d = depth_;
  for (;;) {
    Frame& frame = frames_[d];
    bool descended = false;
    while (frame.tried < q) {
      const Symbol j = frame.dir == 0 ? frame.tried : q - 1 - frame.tried;
      ++frame.tried;
      const MatchState h = table_ ? (*table_)(frame.state, j) : 0;
      if (table_ && h == forbidden) continue;
      buffer_[d] = j;
      ++nodes_;
      std::uint32_t child_dir = (frame.dir + j) & 1u;
      if (dual && j != 0) child_dir ^= 1u;
      if (d + 1 == n_) {
        depth_ = d;
        return true;
      }
      frames_[d + 1] = Frame{h, child_dir, 0};
      ++d;
      descended = true;
      break;
    }
    if (descended) continue;
    if (d == 0) {
      done_ = true;
      return false;
    }
    --d;
  }
}

WordStream generate(const GenerationPlan& plan, std::size_t n) { return WordStream(plan, n); }

std::vector<Word> generate_all(const GenerationPlan& plan, std::size_t n, std::uint64_t budget) {
  const BigCount total = count_words(plan, n);
  if (total > budget) {
    throw ResourceError("stream of " + total.str() + " words exceeds budget " + std::to_string(budget));
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  WordStream stream(plan, n);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

Word extreme_word(const Word& prefix, const ForbiddenFactor& f, std::size_t n, Extreme which,
                  OrderKind order) {
  check_word(prefix, f.alphabet());
  if (prefix.size() > n) throw InputError("prefix is longer than the requested word");
  const TransitionTable table = build_transition_table(f);
  const MatchState forbidden = static_cast<MatchState>(f.length());
  MatchState state = table.run(prefix.symbols());
  if (state == forbidden) throw InputError("prefix contains the forbidden factor");

  const ParityRule rule = parity_rule(order);
  const std::uint32_t q = f.alphabet().size();
  unsigned dir = parity(prefix.symbols(), rule) == Parity::even ? 0 : 1;
  Word out = prefix;
  while (out.size() < n) {
    // Smallest symbol first when looking for the first word under an even prefix.
    const bool ascending = (which == Extreme::first) == (dir == 0);
    for (std::uint32_t t = 0; t < q; ++t) {
      const Symbol j = ascending ? t : q - 1 - t;
      const MatchState h = table(state, j);
      if (h == forbidden) continue;
      out.push_back(j);
      state = h;
      dir ^= j & 1u;
      if (rule == ParityRule::sum_plus_nonzeros && j != 0) dir ^= 1u;
      break;
    }
  }
  return out;
}

namespace {

std::vector<BigCount> prefix_counts(const ForbiddenFactor& f, std::size_t n) {
  const TransitionTable table = build_transition_table(f);
  const std::size_t len = f.length();
  const std::uint32_t q = f.alphabet().size();
  std::vector<BigCount> counts{1};
  std::vector<BigCount> cur(len, 0);
  std::vector<BigCount> nxt(len, 0);
  cur[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t s = 0; s < len; ++s) {
      if (cur[s] == 0) continue;
      for (Symbol j = 0; j < q; ++j) {
        const MatchState h = table(static_cast<MatchState>(s), j);
        if (h != len) nxt[h] += cur[s];
      }
    }
    std::swap(cur, nxt);
    BigCount total = 0;
    for (const BigCount& c : cur) total += c;
    counts.push_back(total);
  }
  return counts;
}

}  // namespace

BigCount count_avoiding(const ForbiddenFactor& f, std::size_t n) { return prefix_counts(f, n).back(); }

BigCount count_words(const GenerationPlan& plan, std::size_t n) {
  if (plan.staircase) return BigCount(n + 1);
  if (!plan.effective_factor) return boost::multiprecision::pow(BigCount(plan.alphabet.size()), static_cast<unsigned>(n));
  return count_avoiding(*plan.effective_factor, n);
}

BigCount count_traversal_nodes(const GenerationPlan& plan, std::size_t n) {
  if (plan.staircase) return BigCount(n + 1);
  BigCount total = 0;
  if (!plan.effective_factor) {
    BigCount level = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      total += level;
      level *= plan.alphabet.size();
    }
    return total;
  }
  for (const BigCount& c : prefix_counts(*plan.effective_factor, n)) total += c;
  return total;
}

}  // namespace avoidgray
