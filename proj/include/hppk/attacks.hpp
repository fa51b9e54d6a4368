#pragma once

#include <cstdint>
#include <vector>

#include "hppk/ds.hpp"
#include "hppk/kem.hpp"
#include "hppk/params.hpp"

// Exhaustive key- and secret-recovery searches at toy sizes. Every entry
// point refuses non-toy parameter sets with InvalidParams.
namespace hppk::attacks {

/// Which hidden ring to attack: the P / mu side (ring 1) or the Q / nu side
/// (ring 2).
enum class Side { First, Second };

struct RingCandidate {
  std::uint64_t R = 0;
  std::uint64_t S = 0;

  friend bool operator==(const RingCandidate&, const RingCandidate&) = default;
  // Ordered by modulus first.
  friend auto operator<=>(const RingCandidate& a, const RingCandidate& b) {
    return a.S != b.S ? a.S <=> b.S : a.R <=> b.R;
  }
};

struct KemRingRecovery {
  std::vector<RingCandidate> candidates;  // sorted by (S, R)
  std::uint64_t pairs_tried = 0;          // coprime (R, S) pairs examined
  std::uint64_t moduli_scanned = 0;
};

/// Scans S in [2^(L-1), 2^L) and every unit R mod S, accepting (R, S) when
/// R^-1 * C_ij mod S < p for every public coefficient C_ij. Returns every
/// accepted pair. S-ranges are split across `threads` workers.
KemRingRecovery kem_ring_recovery(const kem::PublicKey& pk, const KemParams& params,
                                  Side side = Side::First, unsigned threads = 1);

struct DsRingRecovery {
  std::uint64_t S = 0;
  Matrix coefficients;  // recovered P_ij (or Q_ij)
  std::uint64_t iterations = 0;
};

/// Scans S upward from 2^(L-1): C_ij = ceil(S mu_ij / 2^K), accept the
/// first S for which floor(2^K C_ij / S) reproduces every mu_ij. Throws
/// NotFound when no S in range matches. Requires K <= 100.
DsRingRecovery ds_ring_recovery(const ds::PublicKey& pk, const DsParams& params,
                                Side side = Side::First);

struct Census {
  std::uint64_t tuples = 0;          // p^(m+1)
  std::uint64_t exact_matches = 0;   // reproduce Pbar and Qbar as integers
  std::uint64_t field_matches = 0;   // reproduce Pbar and Qbar mod p only
};

/// Enumerates every (x, u_1..u_m) in F_p^(m+1). Requires p <= 64.
Census ciphertext_census(const kem::PublicKey& pk, const kem::CiphertextSegment& seg,
                         const KemParams& params);

}  // namespace hppk::attacks
