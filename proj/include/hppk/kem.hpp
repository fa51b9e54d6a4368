#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hppk/drbg.hpp"
#include "hppk/hidden_ring.hpp"
#include "hppk/params.hpp"
#include "hppk/poly.hpp"

namespace hppk::kem {

struct PrivateKey {
  LinearPair fh;
  HiddenRing ring1;
  HiddenRing ring2;  // shares ring1.S when params.rings == 1

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

/// P_ij = R1*p_ij mod S1 and Q_ij = R2*q_ij mod S2, (n+lambda+1) x m each.
struct PublicKey {
  Matrix P;
  Matrix Q;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct KeyPair {
  PrivateKey sk;
  PublicKey pk;
};

/// Construction-time values discarded by key generation. Only tests and the
/// cryptanalysis module ask for them.
struct KeygenTrace {
  Matrix c;        // beta coefficients, (n+1) x m
  Matrix p_plain;  // f * beta coefficients mod p
  Matrix q_plain;  // h * beta coefficients mod p
};

/// Integer sums, never reduced.
struct CiphertextSegment {
  Nat p_bar;
  Nat q_bar;

  friend bool operator==(const CiphertextSegment&, const CiphertextSegment&) = default;
};

struct Ciphertext {
  std::vector<CiphertextSegment> segments;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

using SharedSecret = std::array<std::uint8_t, 32>;

struct Encapsulation {
  Ciphertext ct;
  SharedSecret ss;
};

/// Sampling order: f, h; beta coefficients row by row; S1, R1; then S2, R2
/// (or only R2 when rings == 1).
KeyPair keygen(const KemParams& params, Drbg& g, KeygenTrace* trace = nullptr);

/// Per segment: x uniform in [0, p), then u_1..u_m uniform in [0, p).
Encapsulation encapsulate(const PublicKey& pk, const KemParams& params, Drbg& g);

/// Pbar = sum_i sum_j P_ij * (u_j x^i mod p) and the Q-side analog.
CiphertextSegment encapsulate_segment(const PublicKey& pk, const KemParams& params, const Nat& x,
                                      std::span<const Nat> u);

/// Little-endian concatenation of the segment secrets, truncated to 32 bytes.
SharedSecret assemble_secret(std::span<const Nat> xs, const KemParams& params);

struct SegmentOpening {
  Nat a;   // beta(x,u) f(x) mod p
  Nat bq;  // beta(x,u) h(x) mod p
  Nat k;   // f(x) / h(x) mod p
  Nat x;
};

/// Throws DecapsulationFailure when beta(x,u) h(x) = 0 (mod p) or the linear
/// root equation degenerates.
SegmentOpening decapsulate_segment(const PrivateKey& sk, const KemParams& params,
                                   const CiphertextSegment& seg);

SharedSecret decapsulate(const PrivateKey& sk, const KemParams& params, const Ciphertext& ct);

}  // namespace hppk::kem
