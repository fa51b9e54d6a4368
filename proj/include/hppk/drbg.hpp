#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hppk/nat.hpp"

namespace hppk {

using Seed = std::array<std::uint8_t, 32>;

/// Deterministic byte stream: block i is SHA-256(seed || LE64(i)), and the
/// blocks are concatenated for i = 0, 1, 2, ...
///
/// Single owner; not safe for concurrent use. Identical seeds give identical
/// streams on every platform.
class Drbg {
 public:
  explicit Drbg(const Seed& seed);
  /// Throws SeedLength unless `seed` is exactly 32 bytes.
  explicit Drbg(std::span<const std::uint8_t> seed);

  /// Seed parsed from 64 hex characters.
  static Drbg from_hex(std::string_view hex);
  /// Seed drawn from the OS entropy source.
  static Seed random_seed();

  void fill(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> bytes(std::size_t n);
  Seed next_seed();

  std::uint64_t bytes_consumed() const { return consumed_; }
  const Seed& seed() const { return seed_; }

 private:
  void refill();

  Seed seed_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t pos_ = 32;
  std::uint64_t consumed_ = 0;
};

Seed parse_seed(std::string_view hex);

/// Uniform in [0, bound) by rejection: draw byte_length(bound - 1) bytes,
/// read them little-endian, retry while the value is >= bound.
Nat uniform_below(Drbg& g, const Nat& bound);

/// Uniform in [lo, hi) as lo + uniform_below(hi - lo).
Nat uniform_range(Drbg& g, const Nat& lo, const Nat& hi);

/// Value in [2^(L-1), 2^L): ceil(L/8) bytes little-endian, bits >= L
/// cleared, bit L-1 set. Requires L >= 2.
Nat uniform_exact_bits(Drbg& g, std::size_t L);

}  // namespace hppk
