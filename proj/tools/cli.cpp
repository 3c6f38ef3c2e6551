#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "avoidgray/classify.hpp"
#include "avoidgray/generator.hpp"
#include "avoidgray/matcher.hpp"
#include "avoidgray/oracle.hpp"

namespace avoidgray::cli {

namespace {

struct CliConfig {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::string factor;
  std::string order = "auto";
  std::string strategy = "auto";
  std::string format = "auto";
  std::optional<std::uint64_t> budget;
  bool dump_automaton = false;
  std::size_t n_min = 4;
  std::size_t n_max = 18;
  std::size_t n_step = 2;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t effective_budget(const CliConfig& config) {
  if (config.budget) return *config.budget;
  if (const char* env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string(kBudgetEnv) + " is not a number: " + env);
    }
  }
  return kDefaultBudget;
}

WordFormat word_format(const CliConfig& config) {
  if (config.format == "separated") return WordFormat::separated;
  if (config.format == "packed") {
    if (config.q > 10) throw InputError("packed format needs q <= 10; use --format separated");
    return WordFormat::packed;
  }
  return config.q <= 10 ? WordFormat::packed : WordFormat::separated;
}

std::optional<ForbiddenFactor> parse_factor(const CliConfig& config, Alphabet q) {
  if (config.factor.empty()) return std::nullopt;
  return ForbiddenFactor(Word::parse(config.factor), q);
}

PlanOptions plan_options(const CliConfig& config) {
  PlanOptions options;
  if (config.order == "rgc") options.order = OrderKind::rgc;
  if (config.order == "dual") options.order = OrderKind::dual_rgc;
  if (config.strategy == "direct") options.strategy = Strategy::direct;
  if (config.strategy == "phi") options.strategy = Strategy::phi_conjugate;
  if (config.strategy == "revcomp") options.strategy = Strategy::reverse_complement;
  return options;
}

GenerationPlan make_plan(const CliConfig& config) {
  const Alphabet q(config.q);
  const auto factor = parse_factor(config, q);
  const PlanOptions options = plan_options(config);
  return factor ? plan(*factor, options) : plan_unrestricted(q, options);
}

std::string bound(const std::optional<std::size_t>& value) {
  return value ? std::to_string(*value) : "-";
}

std::string verdict_line(const GenerationPlan& p) {
  std::ostringstream line;
  line << "order=" << to_string(p.order_used) << " strategy=" << to_string(p.strategy())
       << " gray=" << (p.verdict.is_gray() ? "yes" : "no") << " d=" << bound(p.verdict.d)
       << " e=" << bound(p.verdict.e) << " natural=" << to_string(p.verdict.natural);
  return line.str();
}

std::string factor_text(const GenerationPlan& p, WordFormat format) {
  return p.factor ? p.factor->word().str(format) : "-";
}

void check_budget(const BigCount& words, std::uint64_t budget) {
  if (words > budget) {
    throw BudgetExceeded(words.str() + " words exceed the budget of " + std::to_string(budget));
  }
}

int cmd_generate(const CliConfig& config, std::ostream& out) {
  const GenerationPlan p = make_plan(config);
  const WordFormat format = word_format(config);
  check_budget(count_words(p, config.n), effective_budget(config));

  out << "# q=" << config.q << " n=" << config.n << " factor=" << factor_text(p, format) << '\n';
  out << "# " << verdict_line(p) << '\n';
  WordStream stream(p, config.n);
  while (stream.next()) out << stream.current().str(format) << '\n';
  return kOk;
}

std::string join(const std::vector<Word>& words, WordFormat format) {
  std::string s;
  for (const Word& w : words) {
    if (!s.empty()) s += ' ';
    s += w.str(format);
  }
  return s.empty() ? "-" : s;
}

std::string membership(const Membership& m) {
  return m.member ? "yes (m=" + std::to_string(*m.m) + ")" : "no";
}

int cmd_classify(const CliConfig& config, std::ostream& out) {
  const Alphabet q(config.q);
  const auto factor = parse_factor(config, q);
  if (!factor) throw InputError("classify needs --factor");
  const ForbiddenFactor& f = *factor;
  const WordFormat format = word_format(config);
  const Classification c = classify(f);
  const GenerationPlan p = plan(f, plan_options(config));

  out << "q: " << q.size() << '\n';
  out << "factor: " << f.word().str(format) << '\n';
  out << "length: " << f.length() << '\n';
  out << "zero_suffix_len: " << f.zero_suffix_len() << '\n';
  out << "family: " << to_string(c.family) << '\n';
  out << "family_param: " << bound(c.family_param) << '\n';
  out << "in_U: " << (q.is_even() ? membership(in_U(f)) : "n/a (odd q)") << '\n';
  out << "in_V: " << membership(in_V(f)) << '\n';
  out << "in_W: " << (in_W(f) ? "yes" : "no") << '\n';
  out << "induces_zero_periodicity: " << (c.induces_zero_periodicity ? "yes" : "no") << '\n';
  out << "nonzero_periods: " << join(c.nonzero_periods, format) << '\n';
  out << "natural_order: " << to_string(natural_order_for(f)) << '\n';
  out << "natural_gray: " << to_string(p.verdict.natural) << '\n';
  out << "verdict: " << verdict_line(p) << '\n';
  out << "effective_factor: " << p.effective_factor->word().str(format) << '\n';
  std::string maps;
  for (WordMap m : p.post_map) maps += (maps.empty() ? "" : " ") + std::string(to_string(m));
  out << "post_map: " << (maps.empty() ? "-" : maps) << '\n';

  if (config.dump_automaton) {
    const BorderArray b = make_border(f.word());
    const TransitionTable table = make_array(f, b);
    out << "# border b[0.." << f.length() << "]\n";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "\n# transitions M[i][j], one row per state i, columns j = 0.." << q.max_symbol() << '\n';
    for (MatchState i = 0; i < f.length(); ++i) {
      const auto row = table.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  const GenerationPlan p = make_plan(config);
  const WordFormat format = word_format(config);
  const std::uint64_t budget = effective_budget(config);
  check_budget(count_words(p, config.n), budget);

  oracle::VerifyOptions options;
  options.factor = p.factor;
  const bool natural_listing = p.strategy() == Strategy::direct;
  if (natural_listing) options.order = p.order_used;
  oracle::GrayChecker checker(p.alphabet, options);
  std::vector<Word> emitted;
  WordStream stream(p, config.n);
  while (stream.next()) {
    checker.add(stream.current());
    emitted.push_back(stream.current());
  }
  const oracle::GrayReport& report = checker.report();

  // Independent comparison against the brute-force list when it fits the budget.
  std::string oracle_status = "skipped";
  bool oracle_ok = true;
  try {
    std::vector<Word> truth = oracle::brute_force_list(p.factor, p.alphabet, config.n, p.order_used, budget);
    if (!natural_listing) {
      std::sort(truth.begin(), truth.end());
      std::sort(emitted.begin(), emitted.end());
    }
    oracle_ok = truth == emitted;
    oracle_status = oracle_ok ? "match" : "mismatch";
  } catch (const ResourceError&) {
  }

  const bool bounds_ok = !p.verdict.is_gray() || report.certifies(*p.verdict.d, *p.verdict.e);
  const bool ok = report.violations() == 0 && bounds_ok && oracle_ok;

  out << "# q=" << config.q << " n=" << config.n << " factor=" << factor_text(p, format) << '\n';
  out << "# " << verdict_line(p) << '\n';
  out << "words: " << report.word_count << '\n';
  out << "max_hamming: " << report.max_hamming << '\n';
  out << "max_span: " << report.max_span << '\n';
  if (report.worst_hamming) {
    const auto& w = *report.worst_hamming;
    out << "worst_hamming_pair: " << w.index << ' ' << w.first.str(format) << ' ' << w.second.str(format) << '\n';
  }
  if (report.worst_span) {
    const auto& w = *report.worst_span;
    out << "worst_span_pair: " << w.index << ' ' << w.first.str(format) << ' ' << w.second.str(format) << '\n';
  }
  out << "leftmost_step_violations: " << report.leftmost_step_violations << '\n';
  out << "avoidance_violations: " << report.avoidance_violations << '\n';
  out << "order_violations: " << report.order_violations << '\n';
  out << "claimed_d: " << bound(p.verdict.d) << '\n';
  out << "claimed_e: " << bound(p.verdict.e) << '\n';
  out << "oracle: " << oracle_status << '\n';
  out << "status: " << (ok ? "ok" : "violation") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_count(const CliConfig& config, std::ostream& out) {
  const GenerationPlan p = make_plan(config);
  const BigCount total = count_words(p, config.n);
  out << total << '\n';
  if (total <= effective_budget(config)) {
    WordStream stream(p, config.n);
    while (stream.next()) {
    }
    out << "# stream: " << stream.emitted() << '\n';
  } else {
    out << "# stream: skipped (over budget)\n";
  }
  return kOk;
}

int cmd_bench(const CliConfig& config, std::ostream& out) {
  const GenerationPlan p = make_plan(config);
  const std::uint64_t budget = effective_budget(config);
  if (config.n_step == 0 || config.n_min > config.n_max) throw InputError("empty n grid");

  out << "# q=" << config.q << " factor=" << factor_text(p, word_format(config)) << '\n';
  out << "# " << verdict_line(p) << '\n';
  out << "# n words nodes nodes_per_word seconds source\n";
  out << std::fixed;
  for (std::size_t n = config.n_min; n <= config.n_max; n += config.n_step) {
    const BigCount words = count_words(p, n);
    if (words <= budget) {
      const auto start = std::chrono::steady_clock::now();
      WordStream stream(p, n);
      while (stream.next()) {
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      const double ratio = static_cast<double>(stream.nodes_visited()) / static_cast<double>(stream.emitted());
      out << n << ' ' << stream.emitted() << ' ' << stream.nodes_visited() << ' ' << std::setprecision(4)
          << ratio << ' ' << std::setprecision(6) << elapsed.count() << " measured\n";
    } else {
      const BigCount nodes = count_traversal_nodes(p, n);
      const double ratio = nodes.convert_to<double>() / words.convert_to<double>();
      out << n << ' ' << words << ' ' << nodes << ' ' << std::setprecision(4) << ratio << " - counted\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray-code listings of q-ary words avoiding a forbidden factor"};
  app.require_subcommand(1);
  CliConfig config;

  const auto add_common = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--q", config.q, "alphabet size (symbols 0..q-1)")->required()->check(CLI::Range(2u, kMaxAlphabet));
    auto* n = sub->add_option("--n", config.n, "word length");
    if (needs_n) n->required();
    sub->add_option("--factor", config.factor, "forbidden factor: packed digits (0121) or comma separated (0,1,12)");
    sub->add_option("--order", config.order, "traversal order override")->check(CLI::IsMember({"auto", "rgc", "dual"}));
    sub->add_option("--strategy", config.strategy, "generation strategy")
        ->check(CLI::IsMember({"auto", "direct", "phi", "revcomp"}));
    sub->add_option("--format", config.format, "word layout")->check(CLI::IsMember({"auto", "packed", "separated"}));
    sub->add_option("--budget", config.budget, std::string("word budget (default ") + std::to_string(kDefaultBudget) +
                                                   ", env " + kBudgetEnv + ")");
  };

  auto* generate_cmd = app.add_subcommand("generate", "list A_q^n(f) in Gray order, one word per line");
  add_common(generate_cmd, true);
  auto* classify_cmd = app.add_subcommand("classify", "report family, periodicity and Gray verdict of a factor");
  add_common(classify_cmd, false);
  classify_cmd->add_flag("--dump-automaton", config.dump_automaton, "print the border array and transition table");
  auto* verify_cmd = app.add_subcommand("verify", "check the emitted list against its claimed bounds and the oracle");
  add_common(verify_cmd, true);
  auto* count_cmd = app.add_subcommand("count", "print |A_q^n(f)|");
  add_common(count_cmd, true);
  auto* bench_cmd = app.add_subcommand("bench", "traversal nodes per emitted word over a grid of n");
  add_common(bench_cmd, false);
  bench_cmd->add_option("--n-min", config.n_min, "smallest n");
  bench_cmd->add_option("--n-max", config.n_max, "largest n");
  bench_cmd->add_option("--n-step", config.n_step, "n increment");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(config, out);
    if (classify_cmd->parsed()) return cmd_classify(config, out);
    if (verify_cmd->parsed()) return cmd_verify(config, out);
    if (count_cmd->parsed()) return cmd_count(config, out);
    if (bench_cmd->parsed()) return cmd_bench(config, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace avoidgray::cli
