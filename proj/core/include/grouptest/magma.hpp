#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grouptest {

using Element = std::uint32_t;

// Explicit n x n multiplication table over the ground set {0, ..., n-1}.
// Entries are stored row-major; every entry is < n.
class MagmaTable {
 public:
  // Validates shape and closure; throws InputError otherwise.
  MagmaTable(std::size_t n, std::vector<Element> entries);
  static MagmaTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t size() const { return n_; }
  Element operator()(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
  Element at(std::size_t x, std::size_t y) const;
  std::span<const Element> entries() const { return entries_; }
  std::span<const Element> row(std::size_t x) const { return {entries_.data() + x * n_, n_}; }

  // Copy with one cell replaced.
  MagmaTable with_entry(std::size_t x, std::size_t y, Element value) const;

  friend bool operator==(const MagmaTable&, const MagmaTable&) = default;

 private:
  std::size_t n_;
  std::vector<Element> entries_;
};

// Z_{m_1} x ... x Z_{m_r}. Elements are identified with their mixed-radix
// rank: the tuple (a_1, ..., a_r) has rank sum a_i * prod_{j>i} m_j, so the
// last modulus varies fastest.
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() = default;  // trivial group
  explicit AbelianGroupSpec(std::vector<std::uint64_t> moduli);

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t multiple(std::uint64_t d, std::uint64_t a) const;  // d * a
  std::vector<std::uint64_t> tuple_of(std::uint64_t rank) const;
  std::uint64_t rank_of(std::span<const std::uint64_t> tuple) const;

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

inline constexpr std::size_t kDefaultMaterializeCap = 4096;

MagmaTable build_cyclic(std::size_t m);
// Throws CapacityError when spec.order() > cap.
MagmaTable build_product(const AbelianGroupSpec& spec, std::size_t cap = kDefaultMaterializeCap);

std::size_t hamming_distance(const MagmaTable& a, const MagmaTable& b);

// Image of T under the bijection sigma: result(sigma x, sigma y) = sigma(T(x, y)).
MagmaTable relabel(const MagmaTable& t, std::span<const Element> sigma);

// Naive O(n^3) associativity plus identity and inverse checks.
bool verify_group(const MagmaTable& t);

// Changes exactly `count` distinct cells, each to a uniformly chosen value
// different from the original.
MagmaTable perturb(const MagmaTable& t, std::size_t count, std::uint64_t seed);

// |{x : d x = 0}|, closed form prod gcd(d, m_i).
std::uint64_t count_order_dividing(const AbelianGroupSpec& spec, std::uint64_t d);
// Same quantity by walking every element; requires spec.order() <= cap.
std::uint64_t count_order_dividing_enumerated(const AbelianGroupSpec& spec, std::uint64_t d,
                                              std::uint64_t cap = 1u << 20);

}  // namespace grouptest
