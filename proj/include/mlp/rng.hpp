#pragma once

#include <cstdint>
#include <random>

namespace mlp {

/// Deterministic 64-bit-seeded generator used everywhere randomness is needed.
///
/// One Rng per solve call, consumed strictly sequentially, so runs replay
/// exactly from the seed. std::mt19937_64 has a standardized sequence; the
/// bounded draw below uses plain modulo reduction, which is portable and whose
/// bias is irrelevant at the bounds used here (n + 1 <= a few thousand).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw in [0, bound). bound must be >= 1.
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }

  private:
    std::mt19937_64 gen_;
};

} // namespace mlp
