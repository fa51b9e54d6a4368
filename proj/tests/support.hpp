#pragma once

#include <array>
#include <cstdint>

#include "hppk/drbg.hpp"
#include "hppk/params.hpp"

namespace testing {

inline hppk::Seed seed_of(std::uint64_t n) {
  hppk::Seed s{};
  for (int i = 0; i < 8; ++i) s[i] = static_cast<std::uint8_t>(n >> (8 * i));
  return s;
}

inline hppk::Drbg drbg_of(std::uint64_t n) { return hppk::Drbg(seed_of(n)); }

constexpr std::array<hppk::Level, 3> kLevels = {hppk::Level::I, hppk::Level::III, hppk::Level::V};

}  // namespace testing
