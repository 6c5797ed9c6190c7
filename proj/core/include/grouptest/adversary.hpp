#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "grouptest/oracle.hpp"

namespace grouptest {

// All primes p with lo <= p <= hi (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Primes in [ceil(q'/2), q'] with q' = floor(sqrt(q)).
struct PrimePool {
  std::uint64_t q = 0;
  std::uint64_t q_prime = 0;
  std::vector<std::uint64_t> primes;
};
PrimePool make_prime_pool(std::uint64_t q);

enum class Truth { kYes, kNo };
const char* to_string(Truth t);

// Secret parameters of a drawn instance.
struct HiddenParams {
  std::uint64_t p = 0;
  std::uint64_t k = 0;  // generator-count family only
  std::uint64_t r = 0;  // generator-count family only
  AbelianGroupSpec spec;
};

// An oracle handle plus the ground truth that produced it. Algorithms only
// ever see oracle(); the scorer reads truth() and hidden().
class InstanceSample {
 public:
  InstanceSample(std::unique_ptr<BinaryStructure> handle, Truth truth, HiddenParams hidden);

  Oracle& oracle() { return *handle_; }
  BinaryStructure& structure() { return *handle_; }
  Truth truth() const { return truth_; }
  const HiddenParams& hidden() const { return hidden_; }

 private:
  std::unique_ptr<BinaryStructure> handle_;
  Truth truth_;
  HiddenParams hidden_;
};

struct SampleOptions {
  InvalidLabelPolicy policy = InvalidLabelPolicy::kStrict;
  bool record_transcript = false;
};

// YES: Z_{p^2}; NO: Z_p x Z_p; p uniform from make_prime_pool(q); lazy
// labeling with bound q. Throws EmptyPoolError when the pool is empty.
InstanceSample sample_cyclic_vs_square(std::uint64_t q, Truth truth, std::uint64_t seed,
                                       SampleOptions opts = {});

// Moduli of the generator-count family:
//   k = 2r-2: YES Z_{p^2}^r x Z_p^{r-2},   NO Z_{p^2}^{r-1} x Z_p^r
//   k = 2r-1: YES Z_{p^2}^r x Z_p^{r-1},   NO Z_{p^2}^{r-1} x Z_p^{r+1}
// Throws InputError for k < 2, p not prime, or an order above 2^63.
AbelianGroupSpec generator_count_spec(std::uint64_t k, std::uint64_t p, Truth truth);

// Lazy structure over generator_count_spec with q equal to its order.
InstanceSample sample_generator_count(std::uint64_t k, std::uint64_t p, Truth truth,
                                      std::uint64_t seed, SampleOptions opts = {});

struct CyclicVsSquare {
  std::uint64_t q;
};
struct GeneratorCount {
  std::uint64_t k;
  std::uint64_t p;
};
using Family = std::variant<CyclicVsSquare, GeneratorCount>;
std::string family_name(const Family& family);

// What a distinguisher may know about the instance besides the oracle. The
// group order is never included for the cyclic-vs-square family.
struct PublicInfo {
  Family family;
  std::uint64_t q = 0;
};

// A distinguisher interacts with the instance only through the oracle. The
// rng is its own source of randomness.
using Distinguisher = std::function<Truth(Oracle&, const PublicInfo&, std::mt19937_64&)>;

// Draws x via O1 and walks x, x o x, (x o x) o x, ... for up to `budget`
// labels; answers NO on the first repeated label, YES otherwise.
// budget must be >= 1.
Distinguisher order_probe_distinguisher(std::uint64_t budget);
Distinguisher constant_distinguisher(Truth answer);
Distinguisher random_guess_distinguisher();

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Truth truth = Truth::kYes;
  Truth guess = Truth::kYes;
  QueryStats stats;
  std::string transcript;  // filled when SampleOptions::record_transcript
};

struct DistinguisherReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  double ci_low = 0.0;  // Wilson score interval, 95%
  double ci_high = 0.0;
  double mean_o1 = 0.0;
  double mean_o2 = 0.0;
  std::vector<TrialRecord> records;
};

// Wilson score interval at z = 1.959964.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

// Trial t uses seed + t. Its truth is a fair coin from that seed, its
// instance is drawn from the family, and the distinguisher is scored
// against the hidden truth. With jobs > 1 trials run on worker threads;
// records stay in trial order and results do not depend on jobs.
DistinguisherReport evaluate(const Distinguisher& distinguisher, const Family& family,
                             std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1,
                             SampleOptions opts = {});

// Same scoring, with full access to the sample. Test doubles that read the
// hidden truth go through here.
using SampleScorer = std::function<Truth(InstanceSample&, std::mt19937_64&)>;
DistinguisherReport evaluate_with_sample(const SampleScorer& scorer, const Family& family,
                                         std::uint64_t trials, std::uint64_t seed,
                                         unsigned jobs = 1, SampleOptions opts = {});

}  // namespace grouptest
