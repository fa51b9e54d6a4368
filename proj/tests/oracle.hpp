#pragma once

// Test-only reference arithmetic, independent of the GMP-backed library path.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

// Little-endian base-2^32 natural number.
using Limbs = std::vector<std::uint32_t>;

inline void trim(Limbs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Limbs from_bytes_le(const std::vector<std::uint8_t>& bytes) {
  Limbs out((bytes.size() + 3) / 4, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) out[i / 4] |= std::uint32_t{bytes[i]} << (8 * (i % 4));
  trim(out);
  return out;
}

inline std::vector<std::uint8_t> to_bytes_le(const Limbs& a, std::size_t width) {
  std::vector<std::uint8_t> out(width, 0);
  for (std::size_t i = 0; i < a.size() * 4 && i < width; ++i) {
    out[i] = static_cast<std::uint8_t>(a[i / 4] >> (8 * (i % 4)));
  }
  return out;
}

inline Limbs schoolbook_mul(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t t = std::uint64_t{a[i]} * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    out[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim(out);
  return out;
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D. Returns u mod v; v non-empty.
inline Limbs knuth_mod(Limbs u, Limbs v) {
  trim(u);
  trim(v);
  if (u.size() < v.size()) return u;
  if (v.size() == 1) {
    std::uint64_t r = 0;
    for (std::size_t i = u.size(); i-- > 0;) r = ((r << 32) | u[i]) % v[0];
    Limbs out{static_cast<std::uint32_t>(r)};
    trim(out);
    return out;
  }
  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  int s = 0;
  while ((v.back() << s & 0x80000000u) == 0) ++s;

  Limbs vn(n), un(u.size() + 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(std::uint64_t{v[i - 1]} >> (32 - s)) : 0);
  }
  vn[0] = v[0] << s;
  un[u.size()] = s ? static_cast<std::uint32_t>(std::uint64_t{u.back()} >> (32 - s)) : 0;
  for (std::size_t i = u.size() - 1; i > 0; --i) {
    un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(std::uint64_t{u[i - 1]} >> (32 - s)) : 0);
  }
  un[0] = u[0] << s;

  constexpr std::uint64_t b = std::uint64_t{1} << 32;
  for (std::size_t j = m + 1; j-- > 0;) {
    const std::uint64_t num = (std::uint64_t{un[j + n]} << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= b || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= b) break;
    }
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      const std::int64_t t = std::int64_t{un[i + j]} - static_cast<std::int64_t>(p & 0xffffffffu) + borrow;
      un[i + j] = static_cast<std::uint32_t>(t);
      borrow = t >> 32;
    }
    const std::int64_t t = std::int64_t{un[j + n]} - static_cast<std::int64_t>(carry) + borrow;
    un[j + n] = static_cast<std::uint32_t>(t);
    if (t < 0) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sum = std::uint64_t{un[i + j]} + vn[i] + c;
        un[i + j] = static_cast<std::uint32_t>(sum);
        c = sum >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(std::uint64_t{un[j + n]} + c);
    }
  }

  Limbs r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(std::uint64_t{un[i + 1]} << (32 - s)) : 0);
  }
  trim(r);
  return r;
}

using u128 = unsigned __int128;

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for all 64-bit n (first twelve prime bases).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t euclid_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace oracle
