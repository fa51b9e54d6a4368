#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "hppk/hash.hpp"
#include "hppk/nat.hpp"

namespace hppk {

enum class Level : int { I = 1, III = 3, V = 5 };

/// Accepts 1, 3 or 5; throws InvalidParams otherwise.
Level level_from_int(int v);
inline int level_number(Level l) { return static_cast<int>(l); }

/// KEM parameter set. f and h are linear (lambda = 1) and the noise
/// polynomial beta is linear in x (n = 1), so every coefficient matrix has
/// n + lambda + 1 = 3 rows and m columns.
struct KemParams {
  Level level = Level::I;
  bool toy = false;
  Nat p;
  std::size_t prime_bits = 0;  // b
  std::size_t n = 1;
  std::size_t lambda = 1;
  std::size_t m = 2;
  std::size_t rings = 2;
  std::size_t ring_bits = 0;  // L

  std::size_t coeff_bytes = 0;  // field element width
  std::size_t ring_bytes = 0;   // ceil(L/8)
  std::size_t seg_bytes = 0;
  std::size_t num_segments = 0;
  std::size_t ct_value_bytes = 0;

  std::size_t rows() const { return n + lambda + 1; }
  std::size_t terms() const { return rows() * m; }
  std::string describe() const;
};

/// Production set: b = 32/48/64 with p the largest prime below 2^b,
/// L = 2b + 8. m in {2, 3}, rings in {1, 2}.
KemParams kem_params(Level level, std::size_t m, std::size_t rings);

/// Toy set for the cryptanalysis module: small prime p (< 2^10) and an
/// explicit ring size L in [8, 24] that ignores the 2b + 8 rule.
KemParams toy_kem_params(std::uint64_t p, std::size_t ring_bits, std::size_t m, std::size_t rings);

/// Signature parameter set: b = 64/96/128, L = 2b + 16, Barrett shift K > L,
/// four hash segments of digest_size / 4 bytes each.
struct DsParams {
  Level level = Level::I;
  bool toy = false;
  Nat p;
  std::size_t prime_bits = 0;
  std::size_t n = 1;
  std::size_t lambda = 1;
  std::size_t m = 1;
  std::size_t ring_bits = 0;     // L
  std::size_t barrett_bits = 0;  // K, R = 2^K
  HashKind hash = HashKind::Sha256;

  std::size_t seg_count = 4;
  std::size_t seg_bytes = 0;
  std::size_t coeff_bytes = 0;
  std::size_t ring_bytes = 0;
  std::size_t barrett_bytes = 0;

  std::size_t rows() const { return n + lambda + 1; }
  std::size_t terms() const { return rows() * m; }
  std::string describe() const;
};

/// K = L + barrett_extra. The benchmarked configuration is m = 1, extra = 64.
DsParams ds_params(Level level, std::size_t m = 1, std::size_t barrett_extra = 64);

DsParams toy_ds_params(std::uint64_t p, std::size_t ring_bits, std::size_t barrett_bits,
                       std::size_t m = 1);

}  // namespace hppk
