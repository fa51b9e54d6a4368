#pragma once

#include <cstddef>

#include "hppk/nat.hpp"

// Modular and Barrett primitives over Nat. All products are taken at full
// width before any reduction.
namespace hppk {

Nat gcd(const Nat& a, const Nat& b);

/// x in [1, m) with a*x = 1 (mod m). Throws NotInvertible when gcd(a, m) != 1
/// and InvalidParams when m < 2.
Nat mod_inverse(const Nat& a, const Nat& m);

Nat mul_mod(const Nat& a, const Nat& b, const Nat& m);
Nat add_mod(const Nat& a, const Nat& b, const Nat& m);
/// (a - b) mod m with wraparound; operands need not be reduced.
Nat sub_mod(const Nat& a, const Nat& b, const Nat& m);
Nat pow_mod(const Nat& base, const Nat& exp, const Nat& m);

/// floor(c * 2^K / S). Requires S >= 1 and c < S, so the result is < 2^K.
Nat barrett_precompute(const Nat& c, const Nat& S, std::size_t K);

/// floor(h * mu / 2^K). Never exceeds floor(h * c / S) for mu from
/// barrett_precompute(c, S, K), and for h < 2^K falls short of it by at
/// most one.
Nat barrett_quotient(const Nat& h, const Nat& mu, std::size_t K);

/// Probabilistic primality test (GMP, 40 rounds).
bool is_probable_prime(const Nat& n);

}  // namespace hppk
