#include "hppk/kem.hpp"

#include <algorithm>

#include "hppk/bigmod.hpp"
#include "hppk/error.hpp"

namespace hppk::kem {

namespace {

void check_dimensions(const PublicKey& pk, const KemParams& params) {
  if (pk.P.rows() != params.rows() || pk.P.cols() != params.m || pk.Q.rows() != params.rows() ||
      pk.Q.cols() != params.m) {
    throw Error(Errc::InvalidParams, "public key dimensions do not match " + params.describe());
  }
}

}  // namespace

KeyPair keygen(const KemParams& params, Drbg& g, KeygenTrace* trace) {
  const Nat& p = params.p;
  LinearPair fh = sample_linear_pair(g, p);
  Matrix c = sample_noise_coefficients(g, p, params.n, params.m);
  Matrix p_plain = product_coefficients(fh.f, c, p);
  Matrix q_plain = product_coefficients(fh.h, c, p);

  HiddenRing ring1 = sample_hidden_ring(g, params.ring_bits);
  HiddenRing ring2 = params.rings == 2
                         ? sample_hidden_ring(g, params.ring_bits)
                         : HiddenRing::from(ring1.S, sample_ring_multiplier(g, ring1.S));

  KeyPair kp{PrivateKey{fh, ring1, ring2}, PublicKey{ring1.encrypt(p_plain), ring2.encrypt(q_plain)}};
  if (trace != nullptr) *trace = KeygenTrace{std::move(c), std::move(p_plain), std::move(q_plain)};
  return kp;
}

CiphertextSegment encapsulate_segment(const PublicKey& pk, const KemParams& params, const Nat& x,
                                      std::span<const Nat> u) {
  check_dimensions(pk, params);
  if (u.size() != params.m) throw Error(Errc::InvalidParams, "noise vector length must equal m");
  const Nat& p = params.p;
  CiphertextSegment seg;
  Nat x_pow(1);
  for (std::size_t i = 0; i < params.rows(); ++i) {
    for (std::size_t j = 0; j < params.m; ++j) {
      const Nat w = mul_mod(u[j], x_pow, p);
      seg.p_bar += pk.P.at(i, j) * w;
      seg.q_bar += pk.Q.at(i, j) * w;
    }
    x_pow = mul_mod(x_pow, x, p);
  }
  return seg;
}

SharedSecret assemble_secret(std::span<const Nat> xs, const KemParams& params) {
  std::vector<std::uint8_t> raw(xs.size() * params.seg_bytes);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    xs[t].write_le(std::span(raw).subspan(t * params.seg_bytes, params.seg_bytes));
  }
  SharedSecret ss{};
  std::copy_n(raw.begin(), std::min(raw.size(), ss.size()), ss.begin());
  return ss;
}

Encapsulation encapsulate(const PublicKey& pk, const KemParams& params, Drbg& g) {
  check_dimensions(pk, params);
  Encapsulation out;
  std::vector<Nat> xs(params.num_segments);
  std::vector<Nat> u(params.m);
  out.ct.segments.reserve(params.num_segments);
  for (auto& x : xs) {
    x = uniform_below(g, params.p);
    for (auto& uj : u) uj = uniform_below(g, params.p);
    out.ct.segments.push_back(encapsulate_segment(pk, params, x, u));
  }
  out.ss = assemble_secret(xs, params);
  return out;
}

SegmentOpening decapsulate_segment(const PrivateKey& sk, const KemParams& params,
                                   const CiphertextSegment& seg) {
  const Nat& p = params.p;
  SegmentOpening o;
  o.a = sk.ring1.decrypt(seg.p_bar) % p;
  o.bq = sk.ring2.decrypt(seg.q_bar) % p;
  if (o.bq.is_zero()) throw Error(Errc::DecapsulationFailure, "beta(x,u) h(x) vanishes mod p");
  o.k = mul_mod(o.a, mod_inverse(o.bq, p), p);

  // f0 + f1 x = k (h0 + h1 x)  =>  x = (k h0 - f0) / (f1 - k h1)
  const auto& f = sk.fh.f;
  const auto& h = sk.fh.h;
  const Nat denom = sub_mod(f[1], mul_mod(o.k, h[1], p), p);
  if (denom.is_zero()) throw Error(Errc::DecapsulationFailure, "root equation is degenerate");
  const Nat numer = sub_mod(mul_mod(o.k, h[0], p), f[0], p);
  o.x = mul_mod(numer, mod_inverse(denom, p), p);
  return o;
}

SharedSecret decapsulate(const PrivateKey& sk, const KemParams& params, const Ciphertext& ct) {
  if (ct.segments.size() != params.num_segments) {
    throw Error(Errc::LengthMismatch, "ciphertext must have " + std::to_string(params.num_segments) +
                                          " segments");
  }
  std::vector<Nat> xs;
  xs.reserve(ct.segments.size());
  for (const auto& seg : ct.segments) xs.push_back(decapsulate_segment(sk, params, seg).x);
  return assemble_secret(xs, params);
}

}  // namespace hppk::kem
