#include "grouptest/distance.hpp"

#include <array>
#include <string>

#include "grouptest/errors.hpp"

namespace grouptest {

namespace {

struct Cell {
  Element x;
  Element y;
};

// Depth-first search over partial bijections. Source element k is assigned
// at depth k; a cell (x, y) is scored at depth max(x, y, S(x, y)), the first
// point where its source image and target value are both known.
class BijectionSearch {
 public:
  BijectionSearch(const MagmaTable& source, const MagmaTable& target)
      : source_(source), target_(target), n_(source.size()), decided_at_(n_) {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        const Element level = std::max({x, y, source(x, y)});
        decided_at_[level].push_back({x, y});
      }
    }
    best_ = n_ * n_ + 1;
  }

  BijectionDistance run() {
    sigma_.assign(n_, 0);
    used_.fill(false);
    descend(0, 0);
    return {best_, best_sigma_};
  }

 private:
  void descend(std::size_t depth, std::size_t cost) {
    if (depth == n_) {
      if (cost < best_) {
        best_ = cost;
        best_sigma_ = sigma_;
      }
      return;
    }
    for (Element image = 0; image < n_; ++image) {
      if (used_[image]) continue;
      used_[image] = true;
      sigma_[depth] = image;
      std::size_t next = cost;
      for (const Cell& c : decided_at_[depth]) {
        next += sigma_[source_(c.x, c.y)] != target_(sigma_[c.x], sigma_[c.y]);
      }
      if (next < best_) descend(depth + 1, next);
      used_[image] = false;
    }
  }

  const MagmaTable& source_;
  const MagmaTable& target_;
  std::size_t n_;
  std::vector<std::vector<Cell>> decided_at_;
  std::vector<Element> sigma_;
  std::array<bool, kBruteForceMaxSize> used_{};
  std::size_t best_;
  std::vector<Element> best_sigma_;
};

void check_brute_force_size(std::size_t n) {
  if (n > kBruteForceMaxSize) {
    throw CapacityError("exact class distance is limited to n <= " +
                        std::to_string(kBruteForceMaxSize) + " (got n = " + std::to_string(n) +
                        ")");
  }
}

}  // namespace

BijectionDistance min_hamming_between(const MagmaTable& source, const MagmaTable& target) {
  if (source.size() != target.size()) throw InputError("tables differ in size");
  check_brute_force_size(source.size());
  return BijectionSearch(source, target).run();
}

BijectionDistance min_hamming_to_cyclic(const MagmaTable& t) {
  check_brute_force_size(t.size());
  return min_hamming_between(t, build_cyclic(t.size()));
}

bool is_delta_far_from_cyclic(const MagmaTable& t, const Rational& delta) {
  const std::uint64_t n = t.size();
  const std::uint64_t value = min_hamming_to_cyclic(t).value;
  return Rational(value, n * n) >= delta;
}

}  // namespace grouptest
