#include "grouptest/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "grouptest/errors.hpp"
#include "grouptest/number_theory.hpp"

namespace grouptest {

namespace {

// 2^bits, saturating at 2^64 - 1 for bits == 64.
std::uint64_t label_space(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

}  // namespace

std::string to_hex(Label label, unsigned label_bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = std::max(1u, (label_bits + 3) / 4);
  std::string out(digits, '0');
  std::uint64_t bits = label.bits;
  for (unsigned i = digits; i-- > 0;) {
    out[i] = kDigits[bits & 0xf];
    bits >>= 4;
  }
  return out;
}

std::uint64_t backing_order(const Backing& backing) {
  return std::visit(
      [](const auto& b) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, MagmaTable>) {
          return b.size();
        } else {
          return b.order();
        }
      },
      backing);
}

IndexMap::IndexMap(std::uint64_t key_range, bool allow_flat)
    : dense_(allow_flat && key_range <= kDenseLimit) {
  if (dense_) flat_.assign(key_range, kAbsent);
}

std::optional<std::uint64_t> IndexMap::find(std::uint64_t key) const {
  if (dense_) {
    if (key >= flat_.size() || flat_[key] == kAbsent) return std::nullopt;
    return flat_[key];
  }
  auto it = hashed_.find(key);
  if (it == hashed_.end()) return std::nullopt;
  return it->second;
}

void IndexMap::insert(std::uint64_t key, std::uint64_t value) {
  if (dense_) {
    size_ += flat_[key] == kAbsent;
    flat_[key] = value;
  } else {
    size_ += hashed_.insert_or_assign(key, value).second;
  }
}

void IndexMap::for_each(const std::function<void(std::uint64_t, std::uint64_t)>& fn) const {
  if (dense_) {
    for (std::uint64_t k = 0; k < flat_.size(); ++k) {
      if (flat_[k] != kAbsent) fn(k, flat_[k]);
    }
  } else {
    for (const auto& [k, v] : hashed_) fn(k, v);
  }
}

BinaryStructure::BinaryStructure(Backing backing, std::uint64_t q, StructureOptions opts)
    : backing_(std::move(backing)),
      order_(backing_order(backing_)),
      q_(q),
      label_bits_(ceil_log2(q)),
      opts_(opts),
      rng_(opts.seed),
      forward_(order_, opts.mode == LabelingMode::kEager),
      reverse_(label_space(label_bits_), opts.mode == LabelingMode::kEager) {
  if (q_ == 0 || q_ < order_) {
    throw InputError("bound q = " + std::to_string(q_) + " is below the group order " +
                     std::to_string(order_));
  }
  if (opts_.mode == LabelingMode::kEager) {
    if (order_ > opts_.eager_cap) {
      throw CapacityError("eager labeling of " + std::to_string(order_) +
                          " elements exceeds the cap " + std::to_string(opts_.eager_cap));
    }
    assign_all();
  }
}

void BinaryStructure::assign_all() {
  const std::uint64_t space = label_space(label_bits_);
  if (space <= (std::uint64_t{1} << 24)) {
    // Partial Fisher-Yates over the whole label space.
    std::vector<std::uint64_t> labels(space);
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
    for (std::uint64_t x = 0; x < order_; ++x) {
      std::uniform_int_distribution<std::uint64_t> pick(x, space - 1);
      std::swap(labels[x], labels[pick(rng_)]);
      forward_.insert(x, labels[x]);
      reverse_.insert(labels[x], x);
    }
  } else {
    for (std::uint64_t x = 0; x < order_; ++x) {
      const Label l = fresh_label();
      forward_.insert(x, l.bits);
      reverse_.insert(l.bits, x);
    }
  }
}

Label BinaryStructure::fresh_label() {
  std::uniform_int_distribution<std::uint64_t> pick(0, label_space(label_bits_) - 1);
  if (label_bits_ == 64) pick = std::uniform_int_distribution<std::uint64_t>();
  for (int attempt = 0; attempt < kMaxLabelAttempts; ++attempt) {
    const std::uint64_t candidate = pick(rng_);
    if (!reverse_.find(candidate)) return Label{candidate};
  }
  throw CapacityError("no unused label found after " + std::to_string(kMaxLabelAttempts) +
                      " attempts");
}

Label BinaryStructure::label_for(std::uint64_t element) {
  if (auto known = forward_.find(element)) return Label{*known};
  const Label l = fresh_label();
  forward_.insert(element, l.bits);
  reverse_.insert(l.bits, element);
  return l;
}

std::uint64_t BinaryStructure::product(std::uint64_t a, std::uint64_t b) const {
  if (const auto* table = std::get_if<MagmaTable>(&backing_)) return (*table)(a, b);
  return std::get<AbelianGroupSpec>(backing_).add(a, b);
}

Label BinaryStructure::sample() {
  ++stats_.o1_count;
  std::uniform_int_distribution<std::uint64_t> pick(0, order_ - 1);
  const Label out = label_for(pick(rng_));
  if (opts_.record_transcript) {
    transcript_.push_back({TranscriptEntry::Kind::kSample, {}, {}, out});
  }
  return out;
}

Label BinaryStructure::multiply(Label lhs, Label rhs) {
  ++stats_.o2_count;
  const auto a = reverse_.find(lhs.bits);
  const auto b = reverse_.find(rhs.bits);
  Label out;
  if (a && b) {
    out = label_for(product(*a, *b));
  } else if (opts_.policy == InvalidLabelPolicy::kStrict) {
    throw ProtocolError("O2 queried on a label that was never issued: " +
                        to_hex(a ? rhs : lhs, label_bits_));
  }
  if (opts_.record_transcript) {
    transcript_.push_back({TranscriptEntry::Kind::kMultiply, lhs, rhs, out});
  }
  return out;
}

std::optional<std::uint64_t> BinaryStructure::element_of(Label label) const {
  return reverse_.find(label.bits);
}

std::optional<Label> BinaryStructure::label_of(std::uint64_t element) const {
  if (auto bits = forward_.find(element)) return Label{*bits};
  return std::nullopt;
}

bool BinaryStructure::labeling_consistent() const {
  if (forward_.size() != reverse_.size()) return false;
  const std::uint64_t space = label_space(label_bits_);
  bool ok = true;
  forward_.for_each([&](std::uint64_t element, std::uint64_t label) {
    if (element >= order_ || (label_bits_ < 64 && label >= space)) ok = false;
    const auto back = reverse_.find(label);
    if (!back || *back != element) ok = false;
  });
  return ok;
}

void BinaryStructure::write_transcript(std::ostream& os) const {
  for (const auto& e : transcript_) {
    if (e.kind == TranscriptEntry::Kind::kSample) {
      os << "O1 -> " << to_hex(e.out, label_bits_) << '\n';
    } else {
      os << "O2 " << to_hex(e.lhs, label_bits_) << ' ' << to_hex(e.rhs, label_bits_) << " -> "
         << to_hex(e.out, label_bits_) << '\n';
    }
  }
}

}  // namespace grouptest
