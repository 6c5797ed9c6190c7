#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grouptest {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization, primes strictly increasing. Empty for 1.
class Factorization {
 public:
  Factorization() = default;
  // Throws InputError unless the pairs are canonical (increasing primes,
  // positive exponents, product fits in 64 bits).
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  std::size_t distinct_primes() const { return pairs_.size(); }
  std::uint64_t value() const { return value_; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
  std::uint64_t value_ = 1;
};

// Trial division up to sqrt(m); m >= 1.
Factorization factorize(std::uint64_t m);
std::uint64_t euler_phi(const Factorization& f);
bool is_prime(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
unsigned ceil_log2(std::uint64_t n);  // ceil_log2(1) == 0

}  // namespace grouptest
