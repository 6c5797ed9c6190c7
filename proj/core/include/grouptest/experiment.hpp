#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grouptest/adversary.hpp"
#include "grouptest/cyclic_test.hpp"
#include "grouptest/oracle.hpp"

namespace grouptest {

// One CSV row. `verdict` holds PASS/FAIL for tester runs and the YES/NO
// guess for distinguisher runs; `truth` is empty when unknown.
struct ExperimentRow {
  std::string family;
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::string epsilon;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string verdict;
  std::uint64_t o1_queries = 0;
  std::uint64_t o2_queries = 0;
  double elapsed_ms = 0.0;
  std::string truth;
};

inline constexpr const char* kCsvVersionLine = "# grouptest-csv v1";

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ExperimentRow& row);

// A magma under test: either an explicit table or an abelian group given by
// its moduli, exposed through a binary structure with bound q (0 = order).
struct TesterTarget {
  std::string family;
  Backing backing;
  std::uint64_t q = 0;
  LabelingMode mode = LabelingMode::kEager;
  InvalidLabelPolicy policy = InvalidLabelPolicy::kStrict;
  std::optional<Truth> cyclic;  // ground truth when known
};

struct TesterRunOptions {
  TesterConfig config;  // config.seed is ignored; seeds come from `seed`
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;  // elapsed_ms stays 0 unless set
  bool record_transcript = false;
};

struct TesterTrial {
  ExperimentRow row;
  Verdict verdict;
  std::string transcript;
};

// Trial t uses seed s = seed + t: the oracle's labeling is seeded with s and
// the tester with mix_seed(s). Results are independent of jobs.
std::vector<TesterTrial> run_tester_trials(const TesterTarget& target,
                                           const TesterRunOptions& options);

ExperimentRow distinguisher_row(const Family& family, const TrialRecord& record,
                                std::uint64_t q);

}  // namespace grouptest
