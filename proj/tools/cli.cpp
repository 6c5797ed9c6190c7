#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "grouptest/adversary.hpp"
#include "grouptest/distance.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/experiment.hpp"
#include "grouptest/number_theory.hpp"
#include "grouptest/table_io.hpp"

namespace grouptest::cli {

namespace {

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), 'x', ',');
  std::stringstream ss(normalized);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("bad integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::uint64_t parse_u64(const std::string& text) {
  const auto list = parse_list(text);
  if (list.size() != 1) throw InputError("expected one integer, got '" + text + "'");
  return list.front();
}

// Strips an optional "name:" prefix, e.g. "seed:7" -> "7".
std::string after_prefix(const std::string& text, const std::string& prefix) {
  return text.rfind(prefix + ":", 0) == 0 ? text.substr(prefix.size() + 1) : text;
}

bool pairwise_coprime(const std::vector<std::uint64_t>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (std::gcd(moduli[i], moduli[j]) != 1) return false;
    }
  }
  return true;
}

// "cyclic:M", "product:M1,M2,..." or a path to a magma v1 file.
struct ParsedBase {
  std::string family;
  Backing backing;
  std::optional<Truth> cyclic;
};

ParsedBase parse_base(const std::string& text) {
  if (text.rfind("cyclic:", 0) == 0) {
    const std::uint64_t m = parse_u64(text.substr(7));
    if (m == 0) throw InputError("cyclic order must be positive");
    return {text, AbelianGroupSpec(m == 1 ? std::vector<std::uint64_t>{}
                                          : std::vector<std::uint64_t>{m}),
            Truth::kYes};
  }
  if (text.rfind("product:", 0) == 0) {
    auto moduli = parse_list(text.substr(8));
    const bool cyclic = pairwise_coprime(moduli);
    std::string name = "product:";
    for (std::size_t i = 0; i < moduli.size(); ++i) name += (i ? "x" : "") + std::to_string(moduli[i]);
    return {name, AbelianGroupSpec(std::move(moduli)), cyclic ? Truth::kYes : Truth::kNo};
  }
  return {"table", load_table(text), std::nullopt};
}

MagmaTable materialize(const Backing& backing) {
  if (const auto* t = std::get_if<MagmaTable>(&backing)) return *t;
  return build_product(std::get<AbelianGroupSpec>(backing));
}

void emit_table(const MagmaTable& t, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_table(out, t);
  } else {
    save_table(path, t);
  }
}

void write_transcripts(const std::string& path, const std::vector<std::string>& transcripts) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write transcript file " + path);
  for (std::size_t t = 0; t < transcripts.size(); ++t) {
    os << "# trial " << t << '\n' << transcripts[t];
  }
}

struct OracleFlags {
  bool arbitrary = false;
  InvalidLabelPolicy policy() const {
    return arbitrary ? InvalidLabelPolicy::kFixedOutput : InvalidLabelPolicy::kStrict;
  }
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
  auto* strict = cmd->add_flag("--strict", "Reject O2 queries on unissued labels (default)");
  auto* arbitrary = cmd->add_flag("--arbitrary-oracle", flags.arbitrary,
                                  "Answer O2 queries on unissued labels with the zero string");
  strict->excludes(arbitrary);
}

struct TesterFlags {
  std::string input;
  std::string family;
  std::string epsilon = "1/23";
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t q = 0;
  bool lazy = false;
  bool memoize = false;
  bool timing = false;
  std::optional<std::uint64_t> d1, d2, d3;
  std::string transcript;
  OracleFlags oracle;
};

TesterRunOptions run_options(const TesterFlags& f, std::uint64_t trials) {
  TesterRunOptions opts;
  opts.config.epsilon = Rational::parse(f.epsilon);
  opts.config.d1 = f.d1;
  opts.config.d2 = f.d2;
  opts.config.d3 = f.d3;
  opts.config.memoize_powers = f.memoize;
  opts.trials = trials;
  opts.seed = f.seed;
  opts.jobs = f.jobs;
  opts.timing = f.timing;
  opts.record_transcript = !f.transcript.empty();
  return opts;
}

std::uint64_t run_and_print(const TesterTarget& target, const TesterRunOptions& opts,
                            std::ostream& out, std::vector<std::string>* transcripts) {
  std::uint64_t passes = 0;
  for (auto& trial : run_tester_trials(target, opts)) {
    write_csv_row(out, trial.row);
    passes += trial.verdict.decision == Decision::kPass;
    if (transcripts) transcripts->push_back(std::move(trial.transcript));
  }
  return passes;
}

int cmd_test_cyclic(const TesterFlags& f, std::ostream& out) {
  if (f.input.empty() == f.family.empty()) {
    throw InputError("test-cyclic needs exactly one of a table file or --family");
  }
  ParsedBase base = f.family.empty() ? parse_base(f.input) : parse_base(f.family);
  if (!f.family.empty() && f.family.rfind("cyclic:", 0) != 0 &&
      f.family.rfind("product:", 0) != 0) {
    throw InputError("--family must be cyclic:M or product:M1,M2,...");
  }
  TesterTarget target{base.family, std::move(base.backing), f.q,
                      f.lazy ? LabelingMode::kLazy : LabelingMode::kEager, f.oracle.policy(),
                      base.cyclic};
  const auto opts = run_options(f, f.trials);
  std::vector<std::string> transcripts;
  write_csv_header(out);
  const std::uint64_t passes =
      run_and_print(target, opts, out, f.transcript.empty() ? nullptr : &transcripts);
  out << "# summary trials=" << f.trials << " pass=" << passes << " pass_rate=" << std::fixed
      << std::setprecision(4) << static_cast<double>(passes) / static_cast<double>(f.trials)
      << '\n';
  out.unsetf(std::ios::fixed);
  if (!f.transcript.empty()) write_transcripts(f.transcript, transcripts);
  return kOk;
}

int cmd_distance(const std::string& path, std::ostream& out) {
  const MagmaTable t = load_table(path);
  const auto d = min_hamming_to_cyclic(t);
  const double n2 = static_cast<double>(t.size() * t.size());
  out << "min_hamming_to_cyclic=" << d.value << " delta=" << static_cast<double>(d.value) / n2
      << '\n';
  return kOk;
}

struct DistinguishFlags {
  std::string family = "cyclic-vs-square";
  std::uint64_t q = 10000;
  std::uint64_t k = 2;
  std::uint64_t p = 2;
  std::string strategy = "order-probe";
  std::uint64_t budget = 110;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string transcript;
  OracleFlags oracle;
};

Distinguisher make_strategy(const std::string& name, std::uint64_t budget) {
  if (name == "order-probe") return order_probe_distinguisher(budget);
  if (name == "constant-yes") return constant_distinguisher(Truth::kYes);
  if (name == "constant-no") return constant_distinguisher(Truth::kNo);
  if (name == "random") return random_guess_distinguisher();
  throw InputError("unknown strategy '" + name + "'");
}

Family make_family(const DistinguishFlags& f) {
  if (f.family == "cyclic-vs-square") return CyclicVsSquare{f.q};
  if (f.family == "generator-count") return GeneratorCount{f.k, f.p};
  throw InputError("unknown family '" + f.family + "'");
}

void print_summary(const DistinguisherReport& r, std::ostream& out) {
  std::ostringstream line;
  line << std::fixed << std::setprecision(4) << "# summary trials=" << r.trials
       << " successes=" << r.successes << " rate=" << r.success_rate << " ci_low=" << r.ci_low
       << " ci_high=" << r.ci_high << " mean_o1=" << r.mean_o1 << " mean_o2=" << r.mean_o2;
  out << line.str() << '\n';
}

std::uint64_t family_bound(const Family& family) {
  if (const auto* c = std::get_if<CyclicVsSquare>(&family)) return c->q;
  const auto& g = std::get<GeneratorCount>(family);
  return generator_count_spec(g.k, g.p, Truth::kYes).order();
}

int cmd_distinguish(const DistinguishFlags& f, std::ostream& out) {
  const Family family = make_family(f);
  const Distinguisher strategy = make_strategy(f.strategy, f.budget);
  SampleOptions opts{f.oracle.policy(), !f.transcript.empty()};
  const auto report = evaluate(strategy, family, f.trials, f.seed, f.jobs, opts);
  const std::uint64_t q = family_bound(family);
  write_csv_header(out);
  std::vector<std::string> transcripts;
  for (const auto& rec : report.records) {
    write_csv_row(out, distinguisher_row(family, rec, q));
    transcripts.push_back(rec.transcript);
  }
  print_summary(report, out);
  if (!f.transcript.empty()) write_transcripts(f.transcript, transcripts);
  return kOk;
}

struct ExperimentFlags {
  std::string preset;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string epsilon = "1/23";
  bool timing = false;
};

int cmd_experiment(const ExperimentFlags& f, std::ostream& out) {
  TesterFlags tf;
  tf.epsilon = f.epsilon;
  tf.seed = f.seed;
  tf.jobs = f.jobs;
  tf.timing = f.timing;

  if (f.preset == "completeness" || f.preset == "soundness" || f.preset == "query-scaling") {
    std::vector<TesterTarget> targets;
    std::uint64_t trials = f.trials.value_or(200);
    if (f.preset == "completeness") {
      for (std::uint64_t m : {12, 36, 101, 1024, 2310}) {
        targets.push_back({"cyclic:" + std::to_string(m), AbelianGroupSpec({m}), 0,
                           LabelingMode::kEager, InvalidLabelPolicy::kStrict, Truth::kYes});
      }
    } else if (f.preset == "soundness") {
      for (std::uint64_t p : {3, 5, 7}) {
        const std::string name = "product:" + std::to_string(p) + "x" + std::to_string(p);
        targets.push_back({name, build_product(AbelianGroupSpec({p, p})), 0,
                           LabelingMode::kEager, InvalidLabelPolicy::kStrict, Truth::kNo});
      }
    } else {
      trials = f.trials.value_or(20);
      for (std::uint64_t m = 16; m <= (1u << 20); m *= 4) {
        targets.push_back({"cyclic:" + std::to_string(m), AbelianGroupSpec({m}), 0,
                           LabelingMode::kLazy, InvalidLabelPolicy::kStrict, Truth::kYes});
      }
    }
    write_csv_header(out);
    for (const auto& target : targets) {
      run_and_print(target, run_options(tf, trials), out, nullptr);
    }
    return kOk;
  }

  if (f.preset == "distinguisher") {
    const std::uint64_t trials = f.trials.value_or(500);
    write_csv_header(out);
    for (std::uint64_t q : {100, 1000, 10000, 100000}) {
      const std::uint64_t certain = isqrt(q) + 1;
      for (std::uint64_t budget : {std::uint64_t{3}, certain}) {
        const Family family = CyclicVsSquare{q};
        const auto report =
            evaluate(order_probe_distinguisher(budget), family, trials, f.seed, f.jobs);
        for (const auto& rec : report.records) {
          ExperimentRow row = distinguisher_row(family, rec, q);
          row.family += ":budget=" + std::to_string(budget);
          write_csv_row(out, row);
        }
      }
    }
    return kOk;
  }
  throw InputError("unknown preset '" + f.preset +
                   "' (expected completeness, soundness, query-scaling or distinguisher)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Black-box group property testing: cyclic-group tester, distances, adversaries"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a magma v1 table");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("-o,--out", gen_out, "Output path (default: standard output)");
  std::uint64_t gen_m = 0;
  auto* gen_cyclic = gen->add_subcommand("cyclic", "Z_m addition table");
  gen_cyclic->add_option("m", gen_m)->required();
  std::vector<std::string> gen_moduli;
  auto* gen_product = gen->add_subcommand("product", "Z_m1 x ... x Z_mr, last factor fastest");
  gen_product->add_option("moduli", gen_moduli)->required();
  std::string gen_base, gen_count, gen_seed;
  auto* gen_perturbed =
      gen->add_subcommand("perturbed", "Base table with COUNT cells changed (seeded)");
  gen_perturbed->add_option("base", gen_base, "cyclic:M, product:M1,M2,... or a table file")
      ->required();
  gen_perturbed->add_option("count", gen_count)->required();
  gen_perturbed->add_option("seed", gen_seed, "seed:S or S")->required();
  for (auto* sub : {gen_cyclic, gen_product, gen_perturbed}) sub->fallthrough();

  // test-cyclic
  TesterFlags tf;
  auto* test = app.add_subcommand("test-cyclic", "Run the cyclic-group tester, CSV per trial");
  test->add_option("table", tf.input, "magma v1 table file");
  test->add_option("--family", tf.family, "cyclic:M or product:M1,M2,... instead of a file");
  test->add_option("--epsilon", tf.epsilon, "Distance parameter in (0,1], e.g. 1/23");
  test->add_option("--trials", tf.trials)->check(CLI::PositiveNumber);
  test->add_option("--seed", tf.seed);
  test->add_option("--jobs", tf.jobs)->check(CLI::PositiveNumber);
  test->add_option("--q", tf.q, "Bound q for the binary structure (default: group order)");
  test->add_flag("--lazy", tf.lazy, "Label elements on first exposure");
  test->add_flag("--memoize", tf.memoize, "Cache power-map values per gamma");
  test->add_flag("--timing", tf.timing, "Fill elapsed_ms (makes output non-reproducible)");
  test->add_option("--d1", tf.d1);
  test->add_option("--d2", tf.d2);
  test->add_option("--d3", tf.d3);
  test->add_option("--transcript", tf.transcript, "Write oracle transcripts to this file");
  add_oracle_flags(test, tf.oracle);

  // distance
  std::string distance_path;
  auto* distance = app.add_subcommand("distance", "Exact Hamming distance to the cyclic class");
  distance->add_option("table", distance_path)->required();

  // distinguish
  DistinguishFlags df;
  auto* distinguish = app.add_subcommand("distinguish", "Score a distinguisher on an instance family");
  distinguish->add_option("--family", df.family, "cyclic-vs-square or generator-count");
  distinguish->add_option("--q", df.q);
  distinguish->add_option("--k", df.k);
  distinguish->add_option("--p", df.p);
  distinguish->add_option("--strategy", df.strategy, "order-probe, constant-yes, constant-no, random");
  distinguish->add_option("--budget", df.budget);
  distinguish->add_option("--trials", df.trials)->check(CLI::PositiveNumber);
  distinguish->add_option("--seed", df.seed);
  distinguish->add_option("--jobs", df.jobs)->check(CLI::PositiveNumber);
  distinguish->add_option("--transcript", df.transcript);
  add_oracle_flags(distinguish, df.oracle);

  // experiment
  ExperimentFlags ef;
  auto* experiment = app.add_subcommand("experiment", "Preset sweeps emitting CSV");
  experiment->add_option("preset", ef.preset, "completeness, soundness, query-scaling, distinguisher")
      ->required();
  experiment->add_option("--trials", ef.trials);
  experiment->add_option("--seed", ef.seed);
  experiment->add_option("--jobs", ef.jobs)->check(CLI::PositiveNumber);
  experiment->add_option("--epsilon", ef.epsilon);
  experiment->add_flag("--timing", ef.timing);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (gen_cyclic->parsed()) {
      emit_table(build_cyclic(gen_m), gen_out, out);
    } else if (gen_product->parsed()) {
      std::vector<std::uint64_t> moduli;
      for (const auto& m : gen_moduli) {
        for (auto v : parse_list(m)) moduli.push_back(v);
      }
      emit_table(build_product(AbelianGroupSpec(moduli)), gen_out, out);
    } else if (gen_perturbed->parsed()) {
      const MagmaTable base = materialize(parse_base(gen_base).backing);
      const std::uint64_t count = parse_u64(after_prefix(gen_count, "count"));
      const std::uint64_t seed = parse_u64(after_prefix(gen_seed, "seed"));
      emit_table(perturb(base, count, seed), gen_out, out);
    } else if (test->parsed()) {
      return cmd_test_cyclic(tf, out);
    } else if (distance->parsed()) {
      return cmd_distance(distance_path, out);
    } else if (distinguish->parsed()) {
      return cmd_distinguish(df, out);
    } else if (experiment->parsed()) {
      return cmd_experiment(ef, out);
    }
    return kOk;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapabilityCap;
  } catch (const EmptyPoolError& e) {
    err << "error: " << e.what() << '\n';
    return kEmptyPool;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace grouptest::cli
