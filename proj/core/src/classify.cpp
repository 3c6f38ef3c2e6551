#include "avoidgray/classify.hpp"

#include <algorithm>

namespace avoidgray {

namespace {

std::size_t count_zero_suffix(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[w.size() - 1 - n] == 0) ++n;
  return n;
}

// True if w[0 .. w.size()-2] (f without its last symbol) is a suffix of period^(-inf).
bool body_is_periodic_suffix(const Word& f, const Word& period) {
  const std::size_t body = f.size() - 1;
  const std::size_t p = period.size();
  for (std::size_t k = 0; k < body; ++k) {
    // k-th symbol from the right of the body against the k-th from the right of the period cycle.
    if (f[body - 1 - k] != period[p - 1 - (k % p)]) return false;
  }
  return true;
}

// f = b0 with b a suffix of (head 0^m)^(-inf). Every m >= l-1 yields the same body 0^{l-1},
// so m ranges over [0, l-1].
Membership periodic_family(const ForbiddenFactor& f, const Word& head) {
  if (!f.ends_in_zero()) return {};
  for (std::size_t m = 0; m < f.length(); ++m) {
    Word period = head;
    period.resize(head.size() + m, 0);
    if (body_is_periodic_suffix(f.word(), period)) return {true, m};
  }
  return {};
}

GrayVerdict gray(OrderKind order, std::size_t d, std::size_t e) {
  return {order, GrayClaim::gray, d, e, Strategy::direct};
}

}  // namespace

ForbiddenFactor::ForbiddenFactor(Word word, Alphabet q)
    : word_(std::move(word)), q_(q), zero_suffix_len_(0) {
  if (word_.empty()) throw InputError("forbidden factor must be nonempty");
  check_word(word_, q_);
  zero_suffix_len_ = count_zero_suffix(word_);
}

Membership in_U(const ForbiddenFactor& f) {
  return periodic_family(f, Word{1, f.alphabet().max_symbol()});
}

Membership in_V(const ForbiddenFactor& f) { return periodic_family(f, Word{1}); }

bool in_W(const ForbiddenFactor& f) {
  const Alphabet q = f.alphabet();
  if (q.size() < 3 || !f.ends_in_max()) return false;
  const Word& w = f.word();
  return std::all_of(w.begin(), w.end() - 1, [&](Symbol s) { return s == q.size() - 2; });
}

bool induces_zero_periodicity(const ForbiddenFactor& f) {
  const Alphabet q = f.alphabet();
  if (!f.ends_in_zero() && !f.ends_in_max()) return true;
  if (q.size() == 2) return !in_U(f);
  if (q.is_even()) return !in_U(f) && !in_W(f);
  return !in_V(f) && !in_W(f);
}

std::vector<Word> nonzero_period_profile(const ForbiddenFactor& f) {
  const Alphabet q = f.alphabet();
  if (in_W(f)) return {Word{q.size() - 2}};
  if (q.is_even()) {
    if (const auto u = in_U(f)) {
      Word period{1, q.max_symbol()};
      period.resize(2 + *u.m, 0);
      return {period};
    }
    return {};
  }
  if (const auto v = in_V(f)) {
    Word period{1};
    period.resize(1 + *v.m, 0);
    return {period};
  }
  return {};
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::mid_symbol: return "mid-symbol";
    case Family::end_zero: return "end-zero";
    case Family::end_max: return "end-max";
    case Family::end_max_q2: return "end-max-binary";
    case Family::zero_run: return "zero-run";
    case Family::max_then_zeros: return "max-then-zeros";
    case Family::in_u: return "U";
    case Family::in_v: return "V";
    case Family::in_w: return "W";
  }
  return "?";
}

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::direct: return "direct";
    case Strategy::phi_conjugate: return "phi";
    case Strategy::reverse_complement: return "revcomp";
    case Strategy::staircase: return "staircase";
  }
  return "?";
}

std::string_view to_string(GrayClaim claim) noexcept {
  switch (claim) {
    case GrayClaim::gray: return "gray";
    case GrayClaim::not_gray: return "not-gray";
    case GrayClaim::unproven: return "unproven";
  }
  return "?";
}

Classification classify(const ForbiddenFactor& f) {
  const Alphabet q = f.alphabet();
  Classification c{Family::mid_symbol, std::nullopt, induces_zero_periodicity(f),
                   nonzero_period_profile(f)};

  const Membership u = in_U(f);
  const Membership v = in_V(f);
  if (q.is_even() && u) c.family_param = u.m;
  if (!q.is_even() && v) c.family_param = v.m;

  if (!f.ends_in_zero() && !f.ends_in_max()) {
    c.family = Family::mid_symbol;
  } else if (f.is_zero_run()) {
    c.family = Family::zero_run;
  } else if (q.is_even() && f.length() >= 2 && f.word()[0] == q.max_symbol() &&
             f.zero_suffix_len() == f.length() - 1) {
    c.family = Family::max_then_zeros;
  } else if (f.ends_in_zero()) {
    if (q.is_even()) {
      c.family = u ? Family::in_u : Family::end_zero;
    } else {
      c.family = v ? Family::in_v : Family::end_zero;
    }
  } else if (q.size() == 2) {
    c.family = Family::end_max_q2;
  } else {
    c.family = in_W(f) ? Family::in_w : Family::end_max;
  }
  return c;
}

GrayVerdict gray_verdict(const ForbiddenFactor& f) {
  const Alphabet q = f.alphabet();
  const OrderKind natural = natural_order(q);
  switch (classify(f).family) {
    case Family::mid_symbol:
      return gray(natural, 2, 1);
    case Family::zero_run:
    case Family::max_then_zeros:
      return gray(OrderKind::rgc, 1, 1);
    case Family::end_zero:
      return q.is_even() ? gray(OrderKind::rgc, 3, f.zero_suffix_len() + 2)
                         : gray(OrderKind::dual_rgc, 3, f.zero_suffix_len() + 1);
    case Family::end_max:
    case Family::end_max_q2:
      return gray(natural, 3, 2);
    case Family::in_u:
    case Family::in_v:
    case Family::in_w: {
      // phi(f) ends in a symbol other than 0 and q-1 (or in 1 when q = 2), so it is zero periodic.
      const ForbiddenFactor image(phi(f.word(), q, phi_mode_for(f)), q);
      const GrayVerdict inner = gray_verdict(image);
      // Single-symbol members of W_q are outside the non-Gray characterization.
      const GrayClaim claim = f.length() >= 2 ? GrayClaim::not_gray : GrayClaim::unproven;
      return {inner.order, claim, inner.d, inner.e, Strategy::phi_conjugate};
    }
  }
  return gray(natural, 3, 2);
}

GrayVerdict unrestricted_verdict(Alphabet q) {
  return q.is_even() ? gray(OrderKind::rgc, 1, 1) : gray(OrderKind::dual_rgc, 2, 1);
}

PhiMode phi_mode_for(const ForbiddenFactor& f) {
  if (f.ends_in_zero()) return PhiMode::end_zero;
  if (f.ends_in_max() && f.alphabet().size() >= 3) return PhiMode::end_max;
  throw InputError("phi is defined for factors ending in 0, or in q-1 with q >= 3");
}

Symbol phi(Symbol s, Alphabet q, PhiMode mode) {
  if (mode == PhiMode::end_zero) {
    return s <= 1 ? s ^ 1u : s;
  }
  if (q.size() < 3) throw InputError("phi for factors ending in q-1 needs q >= 3");
  const Symbol hi = q.max_symbol();
  if (s == hi) return hi - 1;
  if (s == hi - 1) return hi;
  return s;
}

Word phi(Word w, Alphabet q, PhiMode mode) {
  check_word(w, q);
  if (mode == PhiMode::end_max && q.size() < 3) {
    throw InputError("phi for factors ending in q-1 needs q >= 3");
  }
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = phi(w[i], q, mode);
  return w;
}

Word TailForm::expand(std::size_t n) const {
  Word out = prefix.prefix(n);
  for (std::size_t i = 0; out.size() < n; ++i) out.push_back(period[i % period.size()]);
  return out;
}

bool TailForm::is_prefix_of_expansion(std::span<const Symbol> w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol expected =
        i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
    if (w[i] != expected) return false;
  }
  return true;
}

std::vector<TailForm> zero_tail_templates(const ForbiddenFactor& f) {
  if (!induces_zero_periodicity(f)) return {};
  const Alphabet q = f.alphabet();
  const Symbol hi = q.max_symbol();
  const Word zero{0};
  std::vector<TailForm> out{{Word{}, zero}, {Word{hi}, zero}};

  const Family family = classify(f).family;
  if (family == Family::end_zero) {
    const std::size_t run = f.zero_suffix_len();
    // 0^i 1 (q-1) for even q, 0^i 1 for odd q; then (q-1) 0^{run-1} followed by the same head.
    Word head{1};
    if (q.is_even()) head.push_back(hi);
    for (std::size_t i = 0; i < run; ++i) out.push_back({Word::repeat(0, i) + head, zero});
    out.push_back({Word{hi} + Word::repeat(0, run - 1) + head, zero});
  } else if (family == Family::end_max || family == Family::end_max_q2) {
    out.push_back({Word{hi - 1, hi}, zero});
  }
  return out;
}

}  // namespace avoidgray
