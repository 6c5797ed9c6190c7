#include "grouptest/number_theory.hpp"

#include <bit>
#include <limits>
#include <string>

#include "grouptest/errors.hpp"

namespace grouptest {

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  std::uint64_t prev = 0;
  for (const auto& [p, e] : pairs_) {
    if (p <= prev || e == 0 || !is_prime(p)) throw InputError("non-canonical factorization");
    prev = p;
    for (unsigned i = 0; i < e; ++i) {
      if (value_ > std::numeric_limits<std::uint64_t>::max() / p) {
        throw InputError("factorization value overflows 64 bits");
      }
      value_ *= p;
    }
  }
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw InputError("factorize requires m >= 1");
  std::vector<PrimePower> pairs;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  if (m > 1) pairs.push_back({m, 1});
  return Factorization(std::move(pairs));
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = f.value();
  for (const auto& pp : f.pairs()) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 62; bit != 0; bit >>= 2) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

unsigned ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(n - 1));
}

}  // namespace grouptest
