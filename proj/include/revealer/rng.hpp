#ifndef REVEALER_RNG_HPP
#define REVEALER_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace revealer {

// Seeded generator with identical output on every platform: mt19937_64 is
// pinned by the standard, while std distributions are not, so bounded
// draws use rejection sampling on the raw stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty draw range");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform draw from [lo, hi] inclusive.
  int range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty draw range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace revealer

#endif  // REVEALER_RNG_HPP
