#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "csg/braid.hpp"
#include "csg/perm.hpp"
#include "csg/symmetric.hpp"

namespace csg {

/// Seeded generator with a fixed draw procedure, so that a seed reproduces
/// the same inputs on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), by rejection.
  std::size_t below(std::size_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
  }

  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  Perm perm(std::size_t level) {
    std::vector<int> images(level + 1);
    for (std::size_t x = 0; x <= level; ++x) images[x] = static_cast<int>(x);
    for (std::size_t x = level; x > 0; --x) std::swap(images[x], images[below(x + 1)]);
    return PermBuilder::adopt(std::move(images));
  }

  /// Length uniform in [0, max_length]; each letter uniform over generator
  /// index and sign. Level 0 always gives the empty word.
  BraidWord braid(std::size_t level, std::size_t max_length) {
    if (level == 0) return braid_one(0);
    const std::size_t len = below(max_length + 1);
    std::vector<Letter> letters;
    letters.reserve(len);
    for (std::size_t r = 0; r < len; ++r) {
      const auto gen = static_cast<std::uint32_t>(below(level));
      letters.push_back({gen, below(2) == 0 ? 1 : -1});
    }
    return BraidWord(level, std::move(letters));
  }

private:
  std::mt19937_64 engine_;
};

/// Random element of an instance, for the property suites.
template <class I>
struct RandomElement;

template <>
struct RandomElement<Symmetric> {
  static Perm draw(Rng& rng, std::size_t level, std::size_t) { return rng.perm(level); }
};

template <>
struct RandomElement<Braid> {
  static BraidWord draw(Rng& rng, std::size_t level, std::size_t max_length) { return rng.braid(level, max_length); }
};

}  // namespace csg
