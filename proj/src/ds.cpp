#include "hppk/ds.hpp"

#include "hppk/bigmod.hpp"
#include "hppk/error.hpp"
#include "hppk/hash.hpp"

namespace hppk::ds {

namespace {

Matrix blind(const Matrix& m, const Nat& beta, const Nat& p) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = mul_mod(beta, m.at(i, j), p);
  }
  return out;
}

Matrix barrett_matrix(const Matrix& m, const Nat& S, std::size_t K) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = barrett_precompute(m.at(i, j), S, K);
  }
  return out;
}

}  // namespace

KeyPair keygen(const DsParams& params, Drbg& g, KeygenTrace* trace) {
  const Nat& p = params.p;
  LinearPair fh = sample_linear_pair(g, p);
  Matrix c = sample_noise_coefficients(g, p, params.n, params.m);
  Matrix p_plain = product_coefficients(fh.f, c, p);
  Matrix q_plain = product_coefficients(fh.h, c, p);

  HiddenRing ring1 = sample_hidden_ring(g, params.ring_bits);
  HiddenRing ring2 = sample_hidden_ring(g, params.ring_bits);
  Matrix P = ring1.encrypt(p_plain);
  Matrix Q = ring2.encrypt(q_plain);

  const Nat beta = uniform_range(g, Nat(1), p);
  const std::size_t K = params.barrett_bits;
  PublicKey pk{blind(P, beta, p),
               blind(Q, beta, p),
               barrett_matrix(P, ring1.S, K),
               barrett_matrix(Q, ring2.S, K),
               mul_mod(beta, ring1.S, p),
               mul_mod(beta, ring2.S, p)};

  KeyPair kp{PrivateKey{fh, ring1, ring2}, std::move(pk)};
  if (trace != nullptr) {
    *trace = KeygenTrace{std::move(c), std::move(p_plain), std::move(q_plain),
                         std::move(P),  std::move(Q),       beta};
  }
  return kp;
}

Segments hash_to_segments(std::span<const std::uint8_t> msg, const DsParams& params) {
  const auto d = digest(params.hash, msg);
  Segments xs;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    xs[t] = Nat::from_bytes_le(std::span(d).subspan(t * params.seg_bytes, params.seg_bytes)) % params.p;
  }
  return xs;
}

Signature sign(const PrivateKey& sk, const DsParams& params, std::span<const std::uint8_t> msg) {
  Signature sig;
  sig.segments.reserve(params.seg_count);
  for (const Nat& x : hash_to_segments(msg, params)) {
    const Nat fx = eval_linear(sk.fh.f, x, params.p);
    const Nat hx = eval_linear(sk.fh.h, x, params.p);
    // F pairs with the Q side (ring 2), H with the P side (ring 1).
    sig.segments.push_back({sk.ring2.decrypt(fx), sk.ring1.decrypt(hx)});
  }
  return sig;
}

Nat verification_coefficient(const Nat& sig_value, const Nat& blinded, const Nat& blinded_modulus,
                             const Nat& mu, std::size_t K, const Nat& p) {
  const Nat q = barrett_quotient(sig_value, mu, K);
  return sub_mod(mul_mod(sig_value, blinded, p), mul_mod(blinded_modulus, q, p), p);
}

bool verify(const PublicKey& pk, const DsParams& params, std::span<const std::uint8_t> msg,
            const Signature& sig) {
  if (sig.segments.size() != params.seg_count) {
    throw Error(Errc::MalformedSignature, "signature must have " + std::to_string(params.seg_count) +
                                              " segments");
  }
  for (const auto& s : sig.segments) {
    if (s.F.bit_length() > params.ring_bits || s.H.bit_length() > params.ring_bits) {
      throw Error(Errc::MalformedSignature, "signature component exceeds 2^L");
    }
  }

  const Nat& p = params.p;
  const std::size_t K = params.barrett_bits;
  const auto xs = hash_to_segments(msg, params);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const auto& [F, H] = sig.segments[t];
    for (std::size_t j = 0; j < params.m; ++j) {
      Nat lhs;
      Nat rhs;
      Nat x_pow(1);
      for (std::size_t i = 0; i < params.rows(); ++i) {
        const Nat U = verification_coefficient(H, pk.p_prime.at(i, j), pk.s1, pk.mu.at(i, j), K, p);
        const Nat V = verification_coefficient(F, pk.q_prime.at(i, j), pk.s2, pk.nu.at(i, j), K, p);
        lhs += U * x_pow;
        rhs += V * x_pow;
        x_pow = mul_mod(x_pow, xs[t], p);
      }
      if (lhs % p != rhs % p) return false;
    }
  }
  return true;
}

}  // namespace hppk::ds
