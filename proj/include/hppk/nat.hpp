#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hppk {

/// Arbitrary-precision natural number.
///
/// Thin value-semantic wrapper over a GMP integer that keeps the value
/// non-negative: subtraction that would underflow throws RangeViolation.
/// Byte conversions are always little-endian and width-explicit.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Nat(const mpz_class& v);

  static Nat pow2(std::size_t k);
  static Nat from_bytes_le(std::span<const std::uint8_t> bytes);
  /// Decimal, or hexadecimal with a 0x prefix.
  static Nat parse(std::string_view text);

  /// Exactly `width` bytes; throws RangeViolation if the value does not fit.
  std::vector<std::uint8_t> to_bytes_le(std::size_t width) const;
  void write_le(std::span<std::uint8_t> out) const;

  std::size_t bit_length() const;
  std::size_t byte_length() const { return (bit_length() + 7) / 8; }
  bool bit(std::size_t i) const;
  bool is_zero() const { return sgn(v_) == 0; }
  bool fits_u64() const { return bit_length() <= 64; }
  std::uint64_t to_u64() const;
  std::string to_string() const;
  std::string to_hex() const;

  const mpz_class& raw() const { return v_; }

  Nat& operator+=(const Nat& o);
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o);
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);
  Nat& operator<<=(std::size_t k);
  Nat& operator>>=(std::size_t k);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }
  friend Nat operator<<(Nat a, std::size_t k) { return a <<= k; }
  friend Nat operator>>(Nat a, std::size_t k) { return a >>= k; }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

}  // namespace hppk
