#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hppk/ds.hpp"
#include "hppk/kem.hpp"
#include "hppk/params.hpp"

// Raw fixed-width little-endian encodings. No headers, no version bytes:
// the byte length of every artifact is a pure function of its parameter set.
//
// Field order:
//   KEM sk   f0 f1 h0 h1 R1 R2 S1 [S2]
//   KEM pk   P row-major, then Q row-major
//   KEM ct   (Pbar, Qbar) per segment
//   DS  sk   f0 f1 h0 h1 R1 R2 S1 S2
//   DS  pk   p', q', mu, nu (each row-major), then s1, s2
//   DS  sig  (F, H) per segment
namespace hppk::codec {

struct KemSizes {
  std::size_t public_key;
  std::size_t private_key;
  std::size_t ciphertext;
};

struct DsSizes {
  std::size_t public_key;
  std::size_t private_key;
  std::size_t signature;
};

KemSizes kem_sizes(const KemParams& params);
DsSizes ds_sizes(const DsParams& params);

std::vector<std::uint8_t> encode(const kem::PublicKey& pk, const KemParams& params);
std::vector<std::uint8_t> encode(const kem::PrivateKey& sk, const KemParams& params);
std::vector<std::uint8_t> encode(const kem::Ciphertext& ct, const KemParams& params);
std::vector<std::uint8_t> encode(const ds::PublicKey& pk, const DsParams& params);
std::vector<std::uint8_t> encode(const ds::PrivateKey& sk, const DsParams& params);
std::vector<std::uint8_t> encode(const ds::Signature& sig, const DsParams& params);

// Decoders throw LengthMismatch unless the input length is exact, and
// RangeViolation when a field exceeds its bound (coefficients >= p, ring
// elements >= 2^L or >= S, Barrett constants >= 2^K, R not a unit mod S).
kem::PublicKey decode_kem_public_key(std::span<const std::uint8_t> bytes, const KemParams& params);
kem::PrivateKey decode_kem_private_key(std::span<const std::uint8_t> bytes, const KemParams& params);
kem::Ciphertext decode_kem_ciphertext(std::span<const std::uint8_t> bytes, const KemParams& params);
ds::PublicKey decode_ds_public_key(std::span<const std::uint8_t> bytes, const DsParams& params);
ds::PrivateKey decode_ds_private_key(std::span<const std::uint8_t> bytes, const DsParams& params);
ds::Signature decode_ds_signature(std::span<const std::uint8_t> bytes, const DsParams& params);

}  // namespace hppk::codec
