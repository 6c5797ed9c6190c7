#include "grouptest/adversary.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_set>

#include "grouptest/errors.hpp"
#include "grouptest/number_theory.hpp"
#include "grouptest/parallel.hpp"

namespace grouptest {

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InputError("primes_in requires lo <= hi");
  if (hi > (std::uint64_t{1} << 32)) throw CapacityError("sieve bound too large");
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

PrimePool make_prime_pool(std::uint64_t q) {
  PrimePool pool;
  pool.q = q;
  pool.q_prime = isqrt(q);
  const std::uint64_t lo = (pool.q_prime + 1) / 2;
  if (pool.q_prime >= 1) pool.primes = primes_in(lo, pool.q_prime);
  return pool;
}

const char* to_string(Truth t) { return t == Truth::kYes ? "YES" : "NO"; }

InstanceSample::InstanceSample(std::unique_ptr<BinaryStructure> handle, Truth truth,
                               HiddenParams hidden)
    : handle_(std::move(handle)), truth_(truth), hidden_(std::move(hidden)) {}

namespace {

StructureOptions lazy_options(std::uint64_t seed, const SampleOptions& opts) {
  StructureOptions s;
  s.mode = LabelingMode::kLazy;
  s.policy = opts.policy;
  s.seed = seed;
  s.record_transcript = opts.record_transcript;
  return s;
}

}  // namespace

InstanceSample sample_cyclic_vs_square(std::uint64_t q, Truth truth, std::uint64_t seed,
                                       SampleOptions opts) {
  const PrimePool pool = make_prime_pool(q);
  if (pool.primes.empty()) {
    throw EmptyPoolError("no primes in [" + std::to_string((pool.q_prime + 1) / 2) + ", " +
                         std::to_string(pool.q_prime) + "] for q = " + std::to_string(q));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.primes.size() - 1);
  const std::uint64_t p = pool.primes[pick(rng)];

  HiddenParams hidden;
  hidden.p = p;
  hidden.spec = truth == Truth::kYes ? AbelianGroupSpec({p * p}) : AbelianGroupSpec({p, p});
  auto handle = std::make_unique<BinaryStructure>(hidden.spec, q, lazy_options(rng(), opts));
  return {std::move(handle), truth, std::move(hidden)};
}

AbelianGroupSpec generator_count_spec(std::uint64_t k, std::uint64_t p, Truth truth) {
  if (k < 2) throw InputError("generator count k must be at least 2");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p > std::numeric_limits<std::uint32_t>::max()) throw InputError("p too large");
  const bool even = k % 2 == 0;
  const std::uint64_t r = even ? (k + 2) / 2 : (k + 1) / 2;
  std::uint64_t squares = 0;
  std::uint64_t primes = 0;
  if (truth == Truth::kYes) {
    squares = r;
    primes = even ? r - 2 : r - 1;
  } else {
    squares = r - 1;
    primes = even ? r : r + 1;
  }
  if (squares + primes > 64) throw InputError("generator count too large");
  std::vector<std::uint64_t> moduli(squares, p * p);
  moduli.insert(moduli.end(), primes, p);
  return AbelianGroupSpec(std::move(moduli));
}

InstanceSample sample_generator_count(std::uint64_t k, std::uint64_t p, Truth truth,
                                      std::uint64_t seed, SampleOptions opts) {
  HiddenParams hidden;
  hidden.spec = generator_count_spec(k, p, truth);
  hidden.p = p;
  hidden.k = k;
  hidden.r = k % 2 == 0 ? (k + 2) / 2 : (k + 1) / 2;
  const std::uint64_t q = hidden.spec.order();
  auto handle = std::make_unique<BinaryStructure>(hidden.spec, q, lazy_options(seed, opts));
  return {std::move(handle), truth, std::move(hidden)};
}

std::string family_name(const Family& family) {
  return std::holds_alternative<CyclicVsSquare>(family) ? "cyclic-vs-square" : "generator-count";
}

Distinguisher order_probe_distinguisher(std::uint64_t budget) {
  if (budget == 0) throw InputError("order probe budget must be at least 1");
  return [budget](Oracle& oracle, const PublicInfo&, std::mt19937_64&) {
    const Label x = oracle.sample();
    std::unordered_set<std::uint64_t> seen{x.bits};
    Label walk = x;
    for (std::uint64_t step = 1; step < budget; ++step) {
      walk = oracle.multiply(walk, x);
      if (!seen.insert(walk.bits).second) return Truth::kNo;
    }
    return Truth::kYes;
  };
}

Distinguisher constant_distinguisher(Truth answer) {
  return [answer](Oracle&, const PublicInfo&, std::mt19937_64&) { return answer; };
}

Distinguisher random_guess_distinguisher() {
  return [](Oracle&, const PublicInfo&, std::mt19937_64& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? Truth::kYes : Truth::kNo;
  };
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

DistinguisherReport evaluate_with_sample(const SampleScorer& scorer, const Family& family,
                                         std::uint64_t trials, std::uint64_t seed, unsigned jobs,
                                         SampleOptions opts) {
  if (trials == 0) throw InputError("trials must be at least 1");
  DistinguisherReport report;
  report.trials = trials;
  report.records.resize(trials);

  parallel_for(trials, jobs, [&](std::uint64_t t) {
    TrialRecord& rec = report.records[t];
    rec.trial = t;
    rec.seed = seed + t;
    std::mt19937_64 rng(rec.seed);
    rec.truth = std::bernoulli_distribution(0.5)(rng) ? Truth::kYes : Truth::kNo;
    const std::uint64_t instance_seed = rng();
    std::mt19937_64 guess_rng(rng());
    InstanceSample sample = std::visit(
        [&](const auto& fam) {
          if constexpr (std::is_same_v<std::decay_t<decltype(fam)>, CyclicVsSquare>) {
            return sample_cyclic_vs_square(fam.q, rec.truth, instance_seed, opts);
          } else {
            return sample_generator_count(fam.k, fam.p, rec.truth, instance_seed, opts);
          }
        },
        family);
    rec.guess = scorer(sample, guess_rng);
    rec.stats = sample.oracle().stats();
    if (opts.record_transcript) {
      std::ostringstream os;
      sample.structure().write_transcript(os);
      rec.transcript = os.str();
    }
  });

  double o1 = 0;
  double o2 = 0;
  for (const auto& rec : report.records) {
    report.successes += rec.guess == rec.truth;
    o1 += static_cast<double>(rec.stats.o1_count);
    o2 += static_cast<double>(rec.stats.o2_count);
  }
  const double n = static_cast<double>(trials);
  report.success_rate = static_cast<double>(report.successes) / n;
  std::tie(report.ci_low, report.ci_high) = wilson_interval(report.successes, trials);
  report.mean_o1 = o1 / n;
  report.mean_o2 = o2 / n;
  return report;
}

DistinguisherReport evaluate(const Distinguisher& distinguisher, const Family& family,
                             std::uint64_t trials, std::uint64_t seed, unsigned jobs,
                             SampleOptions opts) {
  return evaluate_with_sample(
      [&](InstanceSample& sample, std::mt19937_64& rng) {
        PublicInfo info{family, sample.oracle().bound()};
        return distinguisher(sample.oracle(), info, rng);
      },
      family, trials, seed, jobs, opts);
}

}  // namespace grouptest
