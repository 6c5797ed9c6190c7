#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "grouptest/magma.hpp"

namespace grouptest {

// An L-bit string, stored in the low bits.
struct Label {
  std::uint64_t bits = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// Zero-padded lowercase hex, ceil(L/4) digits (at least one).
std::string to_hex(Label label, unsigned label_bits);

struct QueryStats {
  std::uint64_t o1_count = 0;
  std::uint64_t o2_count = 0;

  std::uint64_t total() const { return o1_count + o2_count; }
  friend bool operator==(const QueryStats&, const QueryStats&) = default;
  friend QueryStats operator-(const QueryStats& a, const QueryStats& b) {
    return {a.o1_count - b.o1_count, a.o2_count - b.o2_count};
  }
};

// The black-box view an algorithm gets of a magma: a bound q, labels of
// ceil(log2 q) bits, a uniform-element oracle O1 and a product oracle O2.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual Label sample() = 0;                      // O1
  virtual Label multiply(Label lhs, Label rhs) = 0;  // O2
  virtual QueryStats stats() const = 0;
  virtual std::uint64_t bound() const = 0;  // q
  virtual unsigned label_bits() const = 0;  // L
};

enum class LabelingMode { kEager, kLazy };
enum class InvalidLabelPolicy { kStrict, kFixedOutput };

using Backing = std::variant<MagmaTable, AbelianGroupSpec>;
std::uint64_t backing_order(const Backing& backing);

struct StructureOptions {
  LabelingMode mode = LabelingMode::kEager;
  InvalidLabelPolicy policy = InvalidLabelPolicy::kStrict;
  std::uint64_t seed = 0;
  // Largest order for which eager labeling is allowed.
  std::uint64_t eager_cap = std::uint64_t{1} << 22;
  bool record_transcript = false;
};

struct TranscriptEntry {
  enum class Kind { kSample, kMultiply };
  Kind kind;
  Label lhs;  // O2 only
  Label rhs;  // O2 only
  Label out;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Integer-keyed map: a flat vector when allowed and the key range is small,
// a hash map otherwise.
class IndexMap {
 public:
  IndexMap(std::uint64_t key_range, bool allow_flat);

  std::optional<std::uint64_t> find(std::uint64_t key) const;
  void insert(std::uint64_t key, std::uint64_t value);
  std::size_t size() const { return size_; }
  void for_each(const std::function<void(std::uint64_t, std::uint64_t)>& fn) const;

 private:
  static constexpr std::uint64_t kAbsent = ~std::uint64_t{0};
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  bool dense_;
  std::vector<std::uint64_t> flat_;
  std::unordered_map<std::uint64_t, std::uint64_t> hashed_;
  std::size_t size_ = 0;
};

// A binary structure (q, O1, O2) over a hidden magma with a hidden random
// injective labeling. Eager mode draws the whole labeling up front; lazy
// mode labels an element the first time it surfaces, drawing uniformly
// from the unused L-bit strings. Not thread-safe; one owner per handle.
class BinaryStructure final : public Oracle {
 public:
  static constexpr int kMaxLabelAttempts = 1000;

  // Throws InputError if q < order or q == 0, CapacityError if eager
  // labeling is requested above opts.eager_cap.
  BinaryStructure(Backing backing, std::uint64_t q, StructureOptions opts = {});

  Label sample() override;
  // Strict policy throws ProtocolError on an unissued label; fixed-output
  // policy answers the all-zero string.
  Label multiply(Label lhs, Label rhs) override;
  QueryStats stats() const override { return stats_; }
  std::uint64_t bound() const override { return q_; }
  unsigned label_bits() const override { return label_bits_; }

  // Hidden side, for scorers and tests. Never hand these to an algorithm
  // under test.
  std::uint64_t order() const { return order_; }
  const Backing& backing() const { return backing_; }
  LabelingMode mode() const { return opts_.mode; }
  std::optional<std::uint64_t> element_of(Label label) const;
  std::optional<Label> label_of(std::uint64_t element) const;
  std::size_t assigned_count() const { return forward_.size(); }
  // True iff forward and reverse maps are mutually inverse bijections onto
  // the assigned set, and every label fits in L bits.
  bool labeling_consistent() const;

  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  // One line per query: "O1 -> <hex>" or "O2 <hex> <hex> -> <hex>".
  void write_transcript(std::ostream& os) const;

 private:
  std::uint64_t product(std::uint64_t a, std::uint64_t b) const;
  Label label_for(std::uint64_t element);
  Label fresh_label();
  void assign_all();

  Backing backing_;
  std::uint64_t order_;
  std::uint64_t q_;
  unsigned label_bits_;
  StructureOptions opts_;
  std::mt19937_64 rng_;
  IndexMap forward_;  // element -> label
  IndexMap reverse_;  // label -> element
  QueryStats stats_;
  std::vector<TranscriptEntry> transcript_;
};

}  // namespace grouptest
