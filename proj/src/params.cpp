#include "hppk/params.hpp"

#include <bit>

#include "hppk/bigmod.hpp"
#include "hppk/error.hpp"

namespace hppk {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t ceil_log2(std::size_t v) { return v <= 1 ? 0 : std::bit_width(v - 1); }

// Largest primes below 2^32, 2^48 and 2^64.
Nat kem_prime(Level level) {
  switch (level) {
    case Level::I: return Nat::pow2(32) - Nat(5);
    case Level::III: return Nat::pow2(48) - Nat(59);
    case Level::V: return Nat::pow2(64) - Nat(59);
  }
  throw Error(Errc::InvalidParams, "unknown level");
}

Nat ds_prime(Level level) {
  switch (level) {
    case Level::I: return Nat::pow2(64) - Nat(59);
    case Level::III: return Nat::pow2(96) - Nat(17);
    case Level::V: return Nat::pow2(128) - Nat(159);
  }
  throw Error(Errc::InvalidParams, "unknown level");
}

void finish_kem(KemParams& k) {
  k.coeff_bytes = ceil_div(k.prime_bits, 8);
  k.ring_bytes = ceil_div(k.ring_bits, 8);
  k.seg_bytes = k.coeff_bytes;
  k.num_segments = ceil_div(32, k.seg_bytes);
  // |Pbar| < terms * S * p < 2^(L + b + ceil(log2(terms)))
  k.ct_value_bytes = ceil_div(k.ring_bits + k.prime_bits + ceil_log2(k.terms()), 8);
}

void finish_ds(DsParams& d) {
  if (d.barrett_bits <= d.ring_bits) {
    throw Error(Errc::InvalidParams, "Barrett shift K must exceed the ring size L");
  }
  d.coeff_bytes = ceil_div(d.prime_bits, 8);
  d.ring_bytes = ceil_div(d.ring_bits, 8);
  d.barrett_bytes = ceil_div(d.barrett_bits, 8);
  d.seg_bytes = digest_size(d.hash) / d.seg_count;
}

void check_toy_prime(std::uint64_t p) {
  if (p < 3 || p >= (1u << 10) || !is_probable_prime(Nat(p))) {
    throw Error(Errc::InvalidParams, "toy p must be an odd prime below 2^10");
  }
}

}  // namespace

Level level_from_int(int v) {
  switch (v) {
    case 1: return Level::I;
    case 3: return Level::III;
    case 5: return Level::V;
    default: throw Error(Errc::InvalidParams, "security level must be 1, 3 or 5");
  }
}

KemParams kem_params(Level level, std::size_t m, std::size_t rings) {
  if (m != 2 && m != 3) throw Error(Errc::InvalidParams, "KEM noise count m must be 2 or 3");
  if (rings != 1 && rings != 2) throw Error(Errc::InvalidParams, "rings must be 1 or 2");
  KemParams k;
  k.level = level;
  k.p = kem_prime(level);
  k.prime_bits = k.p.bit_length();
  k.m = m;
  k.rings = rings;
  k.ring_bits = 2 * k.prime_bits + 8;
  finish_kem(k);
  return k;
}

KemParams toy_kem_params(std::uint64_t p, std::size_t ring_bits, std::size_t m, std::size_t rings) {
  check_toy_prime(p);
  if (ring_bits < 8 || ring_bits > 24) throw Error(Errc::InvalidParams, "toy L must be in [8, 24]");
  if (m < 1 || m > 3) throw Error(Errc::InvalidParams, "toy m must be in [1, 3]");
  if (rings != 1 && rings != 2) throw Error(Errc::InvalidParams, "rings must be 1 or 2");
  KemParams k;
  k.toy = true;
  k.p = Nat(p);
  k.prime_bits = k.p.bit_length();
  k.m = m;
  k.rings = rings;
  k.ring_bits = ring_bits;
  finish_kem(k);
  return k;
}

DsParams ds_params(Level level, std::size_t m, std::size_t barrett_extra) {
  if (m != 1 && m != 2) throw Error(Errc::InvalidParams, "DS noise count m must be 1 or 2");
  if (barrett_extra == 0) throw Error(Errc::InvalidParams, "Barrett shift K must exceed L");
  DsParams d;
  d.level = level;
  d.p = ds_prime(level);
  d.prime_bits = d.p.bit_length();
  d.m = m;
  d.ring_bits = 2 * d.prime_bits + 16;
  d.barrett_bits = d.ring_bits + barrett_extra;
  d.hash = level == Level::I ? HashKind::Sha256
                             : (level == Level::III ? HashKind::Sha384 : HashKind::Sha512);
  finish_ds(d);
  return d;
}

DsParams toy_ds_params(std::uint64_t p, std::size_t ring_bits, std::size_t barrett_bits,
                       std::size_t m) {
  check_toy_prime(p);
  if (ring_bits < 8 || ring_bits > 24) throw Error(Errc::InvalidParams, "toy L must be in [8, 24]");
  if (m != 1 && m != 2) throw Error(Errc::InvalidParams, "DS noise count m must be 1 or 2");
  DsParams d;
  d.toy = true;
  d.p = Nat(p);
  d.prime_bits = d.p.bit_length();
  d.m = m;
  d.ring_bits = ring_bits;
  d.barrett_bits = barrett_bits;
  finish_ds(d);
  return d;
}

std::string KemParams::describe() const {
  std::string s = toy ? "toy" : "level=" + std::to_string(level_number(level));
  s += " m=" + std::to_string(m) + " rings=" + std::to_string(rings);
  if (toy) s += " p=" + p.to_string() + " L=" + std::to_string(ring_bits);
  return s;
}

std::string DsParams::describe() const {
  std::string s = toy ? "toy" : "level=" + std::to_string(level_number(level));
  s += " m=" + std::to_string(m) + " K=" + std::to_string(barrett_bits);
  if (toy) s += " p=" + p.to_string() + " L=" + std::to_string(ring_bits);
  return s;
}

}  // namespace hppk
