#include "grouptest/experiment.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "grouptest/errors.hpp"
#include "grouptest/number_theory.hpp"
#include "grouptest/parallel.hpp"

namespace grouptest {

void write_csv_header(std::ostream& os) {
  os << kCsvVersionLine << '\n'
     << "family,q,m,epsilon,trial,seed,verdict,o1_queries,o2_queries,elapsed_ms,truth\n";
}

void write_csv_row(std::ostream& os, const ExperimentRow& row) {
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << row.elapsed_ms;
  os << row.family << ',' << row.q << ',' << row.m << ',' << row.epsilon << ',' << row.trial << ','
     << row.seed << ',' << row.verdict << ',' << row.o1_queries << ',' << row.o2_queries << ','
     << ms.str() << ',' << row.truth << '\n';
}

std::vector<TesterTrial> run_tester_trials(const TesterTarget& target,
                                           const TesterRunOptions& options) {
  if (options.trials == 0) throw InputError("trials must be at least 1");
  const std::uint64_t m = backing_order(target.backing);
  const std::uint64_t q = target.q == 0 ? m : target.q;
  const Factorization f = factorize(m);
  // Validates epsilon and overrides once, before any worker starts.
  derive_reps(m, f, options.config);

  std::vector<TesterTrial> out(options.trials);
  parallel_for(options.trials, options.jobs, [&](std::uint64_t t) {
    const auto begin = std::chrono::steady_clock::now();
    const std::uint64_t seed = options.seed + t;

    StructureOptions so;
    so.mode = target.mode;
    so.policy = target.policy;
    so.seed = seed;
    so.record_transcript = options.record_transcript;
    BinaryStructure oracle(target.backing, q, so);

    TesterConfig config = options.config;
    config.seed = mix_seed(seed);
    TesterTrial& trial = out[t];
    trial.verdict = cyclic_test(oracle, m, f, config);
    if (options.record_transcript) {
      std::ostringstream os;
      oracle.write_transcript(os);
      trial.transcript = os.str();
    }

    ExperimentRow& row = trial.row;
    row.family = target.family;
    row.q = q;
    row.m = m;
    row.epsilon = options.config.epsilon.str();
    row.trial = t;
    row.seed = seed;
    row.verdict = to_string(trial.verdict.decision);
    row.o1_queries = trial.verdict.stats.o1_count;
    row.o2_queries = trial.verdict.stats.o2_count;
    if (target.cyclic) row.truth = to_string(*target.cyclic);
    if (options.timing) {
      row.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin)
              .count();
    }
  });
  return out;
}

ExperimentRow distinguisher_row(const Family& family, const TrialRecord& record,
                                std::uint64_t q) {
  ExperimentRow row;
  row.family = family_name(family);
  row.q = q;
  row.trial = record.trial;
  row.seed = record.seed;
  row.verdict = to_string(record.guess);
  row.o1_queries = record.stats.o1_count;
  row.o2_queries = record.stats.o2_count;
  row.truth = to_string(record.truth);
  return row;
}

}  // namespace grouptest
