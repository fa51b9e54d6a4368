#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hppk/drbg.hpp"
#include "hppk/hidden_ring.hpp"
#include "hppk/params.hpp"
#include "hppk/poly.hpp"

namespace hppk::ds {

struct PrivateKey {
  LinearPair fh;
  HiddenRing ring1;
  HiddenRing ring2;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

/// Verification key. With the blinding scalar beta and the ring-encrypted
/// coefficients P_ij, Q_ij from key generation:
///   p'_ij = beta P_ij mod p      q'_ij = beta Q_ij mod p
///   mu_ij = floor(2^K P_ij / S1) nu_ij = floor(2^K Q_ij / S2)
///   s1 = beta S1 mod p           s2 = beta S2 mod p
/// Neither beta nor P, Q is kept in either key.
struct PublicKey {
  Matrix p_prime;
  Matrix q_prime;
  Matrix mu;
  Matrix nu;
  Nat s1;
  Nat s2;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct KeyPair {
  PrivateKey sk;
  PublicKey pk;
};

struct KeygenTrace {
  Matrix c;
  Matrix p_plain;
  Matrix q_plain;
  Matrix P;  // ring-encrypted p_plain
  Matrix Q;  // ring-encrypted q_plain
  Nat beta;
};

struct SignatureSegment {
  Nat F;  // f(x) R2^-1 mod S2
  Nat H;  // h(x) R1^-1 mod S1

  friend bool operator==(const SignatureSegment&, const SignatureSegment&) = default;
};

struct Signature {
  std::vector<SignatureSegment> segments;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using Segments = std::array<Nat, 4>;

/// Private key sampled as for the KEM (with L = 2b + 16), then beta in [1, p).
KeyPair keygen(const DsParams& params, Drbg& g, KeygenTrace* trace = nullptr);

/// digest split into four equal chunks in digest order, each read
/// little-endian and reduced mod p.
Segments hash_to_segments(std::span<const std::uint8_t> msg, const DsParams& params);

/// Deterministic: the same key and message always give the same signature.
Signature sign(const PrivateKey& sk, const DsParams& params, std::span<const std::uint8_t> msg);

/// Throws MalformedSignature if a component is >= 2^L or the segment count
/// is wrong; any other mismatch is a plain `false`.
bool verify(const PublicKey& pk, const DsParams& params, std::span<const std::uint8_t> msg,
            const Signature& sig);

/// Barrett-transformed verification coefficient
///   (sig * blinded - blinded_modulus * floor(sig * mu / 2^K)) mod p,
/// equal to beta * (sig * C mod S) mod p whenever the Barrett quotient is
/// exact.
Nat verification_coefficient(const Nat& sig_value, const Nat& blinded, const Nat& blinded_modulus,
                             const Nat& mu, std::size_t K, const Nat& p);

}  // namespace hppk::ds
