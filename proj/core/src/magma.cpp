#include "grouptest/magma.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "grouptest/errors.hpp"

namespace grouptest {

__extension__ typedef unsigned __int128 u128;

MagmaTable::MagmaTable(std::size_t n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw InputError("magma must have at least one element");
  if (n_ > std::numeric_limits<Element>::max() || entries_.size() != n_ * n_) {
    throw InputError("table is not " + std::to_string(n_) + "x" + std::to_string(n_));
  }
  for (Element v : entries_) {
    if (v >= n_) throw InputError("table entry " + std::to_string(v) + " out of range");
  }
}

MagmaTable MagmaTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("table rows must all have length n");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return MagmaTable(n, std::move(entries));
}

Element MagmaTable::at(std::size_t x, std::size_t y) const {
  if (x >= n_ || y >= n_) throw InputError("table index out of range");
  return (*this)(x, y);
}

MagmaTable MagmaTable::with_entry(std::size_t x, std::size_t y, Element value) const {
  std::vector<Element> copy = entries_;
  if (x >= n_ || y >= n_) throw InputError("table index out of range");
  copy[x * n_ + y] = value;
  return MagmaTable(n_, std::move(copy));
}

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (std::uint64_t m : moduli_) {
    if (m < 2) throw InputError("every modulus must be at least 2");
    if (order_ > (std::numeric_limits<std::uint64_t>::max() >> 1) / m) {
      throw InputError("group order exceeds 2^63");
    }
    order_ *= m;
  }
}

std::uint64_t AbelianGroupSpec::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (auto it = moduli_.rbegin(); it != moduli_.rend(); ++it) {
    const std::uint64_t m = *it;
    std::uint64_t s = a % m + b % m;
    if (s >= m) s -= m;
    a /= m;
    b /= m;
    result += s * place;
    place *= m;
  }
  return result;
}

std::uint64_t AbelianGroupSpec::multiple(std::uint64_t d, std::uint64_t a) const {
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (auto it = moduli_.rbegin(); it != moduli_.rend(); ++it) {
    const std::uint64_t m = *it;
    const auto digit = static_cast<std::uint64_t>(
        static_cast<u128>(d % m) * (a % m) % m);
    a /= m;
    result += digit * place;
    place *= m;
  }
  return result;
}

std::vector<std::uint64_t> AbelianGroupSpec::tuple_of(std::uint64_t rank) const {
  std::vector<std::uint64_t> tuple(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    tuple[i] = rank % moduli_[i];
    rank /= moduli_[i];
  }
  return tuple;
}

std::uint64_t AbelianGroupSpec::rank_of(std::span<const std::uint64_t> tuple) const {
  if (tuple.size() != moduli_.size()) throw InputError("tuple length does not match rank");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= moduli_[i]) throw InputError("tuple coordinate out of range");
    rank = rank * moduli_[i] + tuple[i];
  }
  return rank;
}

MagmaTable build_cyclic(std::size_t m) {
  if (m == 0) throw InputError("cyclic group order must be positive");
  std::vector<Element> entries(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) entries[x * m + y] = static_cast<Element>((x + y) % m);
  }
  return MagmaTable(m, std::move(entries));
}

MagmaTable build_product(const AbelianGroupSpec& spec, std::size_t cap) {
  if (spec.order() > cap) {
    throw CapacityError("group order " + std::to_string(spec.order()) +
                        " exceeds the materialization cap " + std::to_string(cap));
  }
  const auto n = static_cast<std::size_t>(spec.order());
  std::vector<Element> entries(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = static_cast<Element>(spec.add(x, y));
  }
  return MagmaTable(n, std::move(entries));
}

std::size_t hamming_distance(const MagmaTable& a, const MagmaTable& b) {
  if (a.size() != b.size()) throw InputError("hamming distance needs tables of equal size");
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::size_t diff = 0;
  for (std::size_t i = 0; i < ea.size(); ++i) diff += ea[i] != eb[i];
  return diff;
}

MagmaTable relabel(const MagmaTable& t, std::span<const Element> sigma) {
  const std::size_t n = t.size();
  if (sigma.size() != n) throw InputError("relabeling has the wrong length");
  std::vector<bool> seen(n, false);
  for (Element s : sigma) {
    if (s >= n || seen[s]) throw InputError("relabeling is not a bijection");
    seen[s] = true;
  }
  std::vector<Element> entries(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[sigma[x] * n + sigma[y]] = sigma[t(x, y)];
  }
  return MagmaTable(n, std::move(entries));
}

bool verify_group(const MagmaTable& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = t(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (t(xy, z) != t(x, t(y, z))) return false;
      }
    }
  }
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) {
      has_inverse = t(x, y) == identity && t(y, x) == identity;
    }
    if (!has_inverse) return false;
  }
  return true;
}

MagmaTable perturb(const MagmaTable& t, std::size_t count, std::uint64_t seed) {
  const std::size_t n = t.size();
  const std::size_t cells = n * n;
  if (count > cells) throw InputError("perturb count exceeds the number of cells");
  if (count > 0 && n == 1) throw InputError("a 1x1 table has no alternative value to write");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Element> entries(t.entries().begin(), t.entries().end());
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, cells - 1);
    std::swap(order[i], order[pick(rng)]);
    const std::size_t cell = order[i];
    std::uniform_int_distribution<Element> value(0, static_cast<Element>(n - 2));
    Element v = value(rng);
    if (v >= entries[cell]) ++v;
    entries[cell] = v;
  }
  return MagmaTable(n, std::move(entries));
}

std::uint64_t count_order_dividing(const AbelianGroupSpec& spec, std::uint64_t d) {
  if (d == 0) throw InputError("d must be positive");
  std::uint64_t count = 1;
  for (std::uint64_t m : spec.moduli()) count *= std::gcd(d, m);
  return count;
}

std::uint64_t count_order_dividing_enumerated(const AbelianGroupSpec& spec, std::uint64_t d,
                                              std::uint64_t cap) {
  if (d == 0) throw InputError("d must be positive");
  if (spec.order() > cap) throw CapacityError("group too large to enumerate");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < spec.order(); ++x) count += spec.multiple(d, x) == 0;
  return count;
}

}  // namespace grouptest
