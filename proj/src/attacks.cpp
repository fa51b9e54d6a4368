#include "hppk/attacks.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <tuple>
#include <utility>

#include "hppk/error.hpp"

namespace hppk::attacks {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_toy(bool toy) {
  if (!toy) throw Error(Errc::InvalidParams, "attacks run on toy parameter sets only");
}

std::vector<u64> flatten(const Matrix& m) {
  std::vector<u64> out;
  out.reserve(m.values().size());
  for (const Nat& v : m.values()) out.push_back(v.to_u64());
  return out;
}

u64 totient(u64 n) {
  u64 result = n;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

u64 inverse_mod(u64 a, u64 m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(m);
  return static_cast<u64>(t0);
}

u128 to_u128(const Nat& v) {
  if (v.bit_length() > 128) throw Error(Errc::RangeViolation, "value exceeds 128 bits");
  const auto b = v.to_bytes_le(16);
  u128 r = 0;
  for (std::size_t i = 16; i-- > 0;) r = (r << 8) | b[i];
  return r;
}

struct ScanResult {
  std::vector<RingCandidate> found;
  u64 pairs = 0;
  u64 moduli = 0;
};

// T plays the role of R^-1; the unit test and inversion only run for the
// rare T that already maps every coefficient below p.
ScanResult scan_moduli(const std::vector<u64>& coeffs, u64 p, u64 s_begin, u64 s_end) {
  ScanResult out;
  std::vector<u64> reduced(coeffs.size());
  for (u64 S = s_begin; S < s_end; ++S) {
    ++out.moduli;
    out.pairs += totient(S);
    for (std::size_t k = 0; k < coeffs.size(); ++k) reduced[k] = coeffs[k] % S;
    const u64 c0 = reduced[0];
    u64 v0 = 0;
    for (u64 T = 1; T < S; ++T) {
      v0 += c0;
      if (v0 >= S) v0 -= S;
      if (v0 >= p) continue;
      bool ok = true;
      for (std::size_t k = 1; k < reduced.size() && ok; ++k) ok = (T * reduced[k]) % S < p;
      if (!ok || std::gcd(T, S) != 1) continue;
      out.found.push_back({inverse_mod(T, S), S});
    }
  }
  return out;
}

}  // namespace

KemRingRecovery kem_ring_recovery(const kem::PublicKey& pk, const KemParams& params, Side side,
                                  unsigned threads) {
  require_toy(params.toy);
  const auto coeffs = flatten(side == Side::First ? pk.P : pk.Q);
  const u64 p = params.p.to_u64();
  const u64 lo = u64{1} << (params.ring_bits - 1);
  const u64 hi = u64{1} << params.ring_bits;

  threads = std::max(1u, threads);
  std::vector<ScanResult> parts(threads);
  std::vector<std::thread> pool;
  const u64 span = (hi - lo + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const u64 b = std::min(hi, lo + t * span);
    const u64 e = std::min(hi, b + span);
    pool.emplace_back([&, t, b, e] { parts[t] = scan_moduli(coeffs, p, b, e); });
  }
  for (auto& th : pool) th.join();

  KemRingRecovery out;
  for (auto& part : parts) {
    out.candidates.insert(out.candidates.end(), part.found.begin(), part.found.end());
    out.pairs_tried += part.pairs;
    out.moduli_scanned += part.moduli;
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  return out;
}

DsRingRecovery ds_ring_recovery(const ds::PublicKey& pk, const DsParams& params, Side side) {
  require_toy(params.toy);
  const std::size_t K = params.barrett_bits;
  if (K > 100) throw Error(Errc::InvalidParams, "toy Barrett shift must be at most 100 bits");
  const Matrix& mu_matrix = side == Side::First ? pk.mu : pk.nu;
  std::vector<u128> mu;
  for (const Nat& v : mu_matrix.values()) mu.push_back(to_u128(v));

  const u64 lo = u64{1} << (params.ring_bits - 1);
  const u64 hi = u64{1} << params.ring_bits;
  const u128 round_up = (u128{1} << K) - 1;
  std::vector<u64> coeffs(mu.size());

  DsRingRecovery out;
  for (u64 S = lo; S < hi; ++S) {
    ++out.iterations;
    bool match = true;
    for (std::size_t k = 0; k < mu.size() && match; ++k) {
      const u128 c = (u128{S} * mu[k] + round_up) >> K;
      match = ((c << K) / S) == mu[k];
      coeffs[k] = static_cast<u64>(c);
    }
    if (!match) continue;
    out.S = S;
    out.coefficients = Matrix(mu_matrix.rows(), mu_matrix.cols());
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.coefficients.values()[k] = Nat(coeffs[k]);
    return out;
  }
  throw Error(Errc::NotFound, "no modulus in [2^(L-1), 2^L) reproduces the Barrett constants");
}

Census ciphertext_census(const kem::PublicKey& pk, const kem::CiphertextSegment& seg,
                         const KemParams& params) {
  require_toy(params.toy);
  const u64 p = params.p.to_u64();
  if (p > 64) throw Error(Errc::InvalidParams, "census needs p <= 64");
  const std::size_t rows = params.rows();
  const std::size_t m = params.m;
  const auto P = flatten(pk.P);
  const auto Q = flatten(pk.Q);
  const u64 p_bar = seg.p_bar.to_u64();
  const u64 q_bar = seg.q_bar.to_u64();
  const u64 p_bar_mod = p_bar % p;
  const u64 q_bar_mod = q_bar % p;

  Census census;
  std::vector<u64> u(m, 0);
  std::vector<u64> x_pow(rows);
  for (u64 x = 0; x < p; ++x) {
    x_pow[0] = 1;
    for (std::size_t i = 1; i < rows; ++i) x_pow[i] = x_pow[i - 1] * x % p;
    std::fill(u.begin(), u.end(), 0);
    for (;;) {
      ++census.tuples;
      u64 pv = 0, qv = 0, pm = 0, qm = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const u64 w = u[j] * x_pow[i] % p;
          pv += P[i * m + j] * w;
          qv += Q[i * m + j] * w;
          pm += (P[i * m + j] % p) * w;
          qm += (Q[i * m + j] % p) * w;
        }
      }
      if (pv == p_bar && qv == q_bar) ++census.exact_matches;
      if (pm % p == p_bar_mod && qm % p == q_bar_mod) ++census.field_matches;

      std::size_t j = 0;
      while (j < m && ++u[j] == p) u[j++] = 0;
      if (j == m) break;
    }
  }
  return census;
}

}  // namespace hppk::attacks
