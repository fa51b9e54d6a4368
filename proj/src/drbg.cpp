#include "hppk/drbg.hpp"

#include <algorithm>
#include <random>

#include <openssl/evp.h>

#include "hppk/error.hpp"
#include "hppk/hash.hpp"

namespace hppk {

Drbg::Drbg(const Seed& seed) : seed_(seed) {}

Drbg::Drbg(std::span<const std::uint8_t> seed) {
  if (seed.size() != seed_.size()) {
    throw Error(Errc::SeedLength, "seed must be 32 bytes, got " + std::to_string(seed.size()));
  }
  std::copy(seed.begin(), seed.end(), seed_.begin());
}

Drbg Drbg::from_hex(std::string_view hex) { return Drbg(parse_seed(hex)); }

Seed Drbg::random_seed() {
  std::random_device rd;
  Seed s{};
  for (std::size_t i = 0; i < s.size(); i += 4) {
    const std::uint32_t w = rd();
    for (std::size_t k = 0; k < 4; ++k) s[i + k] = static_cast<std::uint8_t>(w >> (8 * k));
  }
  return s;
}

void Drbg::refill() {
  std::array<std::uint8_t, 40> input{};
  std::copy(seed_.begin(), seed_.end(), input.begin());
  for (std::size_t k = 0; k < 8; ++k) input[32 + k] = static_cast<std::uint8_t>(counter_ >> (8 * k));
  unsigned int len = 0;
  if (EVP_Digest(input.data(), input.size(), block_.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("EVP_Digest failed");
  }
  ++counter_;
  pos_ = 0;
}

void Drbg::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == block_.size()) refill();
    const std::size_t take = std::min(out.size() - done, block_.size() - pos_);
    std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(pos_), take,
                out.begin() + static_cast<std::ptrdiff_t>(done));
    pos_ += take;
    done += take;
  }
  consumed_ += out.size();
}

std::vector<std::uint8_t> Drbg::bytes(std::size_t n) {
  std::vector<std::uint8_t> out(n);
  fill(out);
  return out;
}

Seed Drbg::next_seed() {
  Seed s{};
  fill(s);
  return s;
}

Seed parse_seed(std::string_view hex) {
  if (hex.size() != 64) {
    throw Error(Errc::SeedLength, "seed must be 64 hex characters, got " + std::to_string(hex.size()));
  }
  const auto raw = hppk::from_hex(hex);
  Seed s{};
  std::copy(raw.begin(), raw.end(), s.begin());
  return s;
}

Nat uniform_below(Drbg& g, const Nat& bound) {
  if (bound.is_zero()) throw Error(Errc::InvalidParams, "uniform_below needs bound >= 1");
  const std::size_t width = (bound - Nat(1)).byte_length();
  std::vector<std::uint8_t> buf(width);
  for (;;) {
    g.fill(buf);
    Nat v = Nat::from_bytes_le(buf);
    if (v < bound) return v;
  }
}

Nat uniform_range(Drbg& g, const Nat& lo, const Nat& hi) {
  if (hi <= lo) throw Error(Errc::InvalidParams, "uniform_range needs lo < hi");
  return lo + uniform_below(g, hi - lo);
}

Nat uniform_exact_bits(Drbg& g, std::size_t L) {
  if (L < 2) throw Error(Errc::InvalidParams, "uniform_exact_bits needs L >= 2");
  std::vector<std::uint8_t> buf((L + 7) / 8);
  g.fill(buf);
  const std::size_t spare = buf.size() * 8 - L;
  buf.back() = static_cast<std::uint8_t>(buf.back() & (0xffu >> spare));
  const std::size_t top = L - 1;
  buf[top / 8] = static_cast<std::uint8_t>(buf[top / 8] | (1u << (top % 8)));
  return Nat::from_bytes_le(buf);
}

}  // namespace hppk
