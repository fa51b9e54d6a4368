#include "hppk/codec.hpp"

#include <string>

#include "hppk/error.hpp"

namespace hppk::codec {

namespace {

class Writer {
 public:
  explicit Writer(std::size_t total) : out_(total) {}

  void put(const Nat& v, std::size_t width) {
    v.write_le(std::span(out_).subspan(pos_, width));
    pos_ += width;
  }

  void put(const Matrix& m, std::size_t width) {
    for (const Nat& v : m.values()) put(v, width);
  }

  std::vector<std::uint8_t> finish() && { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
  std::size_t pos_ = 0;
};

class Reader {
 public:
  Reader(std::span<const std::uint8_t> in, std::size_t expected, const char* what) : in_(in) {
    if (in.size() != expected) {
      throw Error(Errc::LengthMismatch, std::string(what) + " must be " + std::to_string(expected) +
                                            " bytes, got " + std::to_string(in.size()));
    }
  }

  Nat get(std::size_t width) {
    Nat v = Nat::from_bytes_le(in_.subspan(pos_, width));
    pos_ += width;
    return v;
  }

  Nat get_below(std::size_t width, const Nat& bound, const char* field) {
    Nat v = get(width);
    if (v >= bound) throw Error(Errc::RangeViolation, std::string(field) + " out of range");
    return v;
  }

  Matrix get_matrix(std::size_t rows, std::size_t cols, std::size_t width, const Nat& bound,
                    const char* field) {
    Matrix m(rows, cols);
    for (auto& v : m.values()) v = get_below(width, bound, field);
    return m;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

HiddenRing ring_from(const Nat& S, const Nat& R, std::size_t L) {
  if (S.bit_length() != L) throw Error(Errc::RangeViolation, "ring modulus must have exactly L bits");
  if (R.is_zero() || R >= S) throw Error(Errc::RangeViolation, "ring multiplier must lie in [1, S)");
  try {
    return HiddenRing::from(S, R);
  } catch (const Error&) {
    throw Error(Errc::RangeViolation, "ring multiplier is not a unit modulo S");
  }
}

LinearPair read_linear_pair(Reader& r, std::size_t width, const Nat& p) {
  LinearPair fh;
  for (auto& v : fh.f) v = r.get_below(width, p, "f coefficient");
  for (auto& v : fh.h) v = r.get_below(width, p, "h coefficient");
  return fh;
}

void write_linear_pair(Writer& w, const LinearPair& fh, std::size_t width) {
  for (const auto& v : fh.f) w.put(v, width);
  for (const auto& v : fh.h) w.put(v, width);
}

}  // namespace

KemSizes kem_sizes(const KemParams& params) {
  return KemSizes{
      2 * params.terms() * params.ring_bytes,
      4 * params.coeff_bytes + (params.rings == 1 ? 3 : 4) * params.ring_bytes,
      params.num_segments * 2 * params.ct_value_bytes,
  };
}

DsSizes ds_sizes(const DsParams& params) {
  const std::size_t N = params.terms();
  return DsSizes{
      2 * N * params.coeff_bytes + 2 * N * params.barrett_bytes + 2 * params.coeff_bytes,
      4 * params.coeff_bytes + 4 * params.ring_bytes,
      2 * params.seg_count * params.ring_bytes,
  };
}

std::vector<std::uint8_t> encode(const kem::PublicKey& pk, const KemParams& params) {
  Writer w(kem_sizes(params).public_key);
  w.put(pk.P, params.ring_bytes);
  w.put(pk.Q, params.ring_bytes);
  return std::move(w).finish();
}

std::vector<std::uint8_t> encode(const kem::PrivateKey& sk, const KemParams& params) {
  Writer w(kem_sizes(params).private_key);
  write_linear_pair(w, sk.fh, params.coeff_bytes);
  w.put(sk.ring1.R, params.ring_bytes);
  w.put(sk.ring2.R, params.ring_bytes);
  w.put(sk.ring1.S, params.ring_bytes);
  if (params.rings == 2) w.put(sk.ring2.S, params.ring_bytes);
  return std::move(w).finish();
}

std::vector<std::uint8_t> encode(const kem::Ciphertext& ct, const KemParams& params) {
  if (ct.segments.size() != params.num_segments) {
    throw Error(Errc::LengthMismatch, "ciphertext segment count does not match parameters");
  }
  Writer w(kem_sizes(params).ciphertext);
  for (const auto& seg : ct.segments) {
    w.put(seg.p_bar, params.ct_value_bytes);
    w.put(seg.q_bar, params.ct_value_bytes);
  }
  return std::move(w).finish();
}

std::vector<std::uint8_t> encode(const ds::PublicKey& pk, const DsParams& params) {
  Writer w(ds_sizes(params).public_key);
  w.put(pk.p_prime, params.coeff_bytes);
  w.put(pk.q_prime, params.coeff_bytes);
  w.put(pk.mu, params.barrett_bytes);
  w.put(pk.nu, params.barrett_bytes);
  w.put(pk.s1, params.coeff_bytes);
  w.put(pk.s2, params.coeff_bytes);
  return std::move(w).finish();
}

std::vector<std::uint8_t> encode(const ds::PrivateKey& sk, const DsParams& params) {
  Writer w(ds_sizes(params).private_key);
  write_linear_pair(w, sk.fh, params.coeff_bytes);
  w.put(sk.ring1.R, params.ring_bytes);
  w.put(sk.ring2.R, params.ring_bytes);
  w.put(sk.ring1.S, params.ring_bytes);
  w.put(sk.ring2.S, params.ring_bytes);
  return std::move(w).finish();
}

std::vector<std::uint8_t> encode(const ds::Signature& sig, const DsParams& params) {
  if (sig.segments.size() != params.seg_count) {
    throw Error(Errc::LengthMismatch, "signature segment count does not match parameters");
  }
  Writer w(ds_sizes(params).signature);
  for (const auto& seg : sig.segments) {
    w.put(seg.F, params.ring_bytes);
    w.put(seg.H, params.ring_bytes);
  }
  return std::move(w).finish();
}

kem::PublicKey decode_kem_public_key(std::span<const std::uint8_t> bytes, const KemParams& params) {
  Reader r(bytes, kem_sizes(params).public_key, "KEM public key");
  const Nat bound = Nat::pow2(params.ring_bits);
  kem::PublicKey pk;
  pk.P = r.get_matrix(params.rows(), params.m, params.ring_bytes, bound, "P coefficient");
  pk.Q = r.get_matrix(params.rows(), params.m, params.ring_bytes, bound, "Q coefficient");
  return pk;
}

kem::PrivateKey decode_kem_private_key(std::span<const std::uint8_t> bytes, const KemParams& params) {
  Reader r(bytes, kem_sizes(params).private_key, "KEM private key");
  kem::PrivateKey sk;
  sk.fh = read_linear_pair(r, params.coeff_bytes, params.p);
  const Nat R1 = r.get(params.ring_bytes);
  const Nat R2 = r.get(params.ring_bytes);
  const Nat S1 = r.get(params.ring_bytes);
  const Nat S2 = params.rings == 2 ? r.get(params.ring_bytes) : S1;
  sk.ring1 = ring_from(S1, R1, params.ring_bits);
  sk.ring2 = ring_from(S2, R2, params.ring_bits);
  return sk;
}

kem::Ciphertext decode_kem_ciphertext(std::span<const std::uint8_t> bytes, const KemParams& params) {
  Reader r(bytes, kem_sizes(params).ciphertext, "KEM ciphertext");
  kem::Ciphertext ct;
  ct.segments.resize(params.num_segments);
  for (auto& seg : ct.segments) {
    seg.p_bar = r.get(params.ct_value_bytes);
    seg.q_bar = r.get(params.ct_value_bytes);
  }
  return ct;
}

ds::PublicKey decode_ds_public_key(std::span<const std::uint8_t> bytes, const DsParams& params) {
  Reader r(bytes, ds_sizes(params).public_key, "DS public key");
  const Nat barrett_bound = Nat::pow2(params.barrett_bits);
  const std::size_t rows = params.rows();
  ds::PublicKey pk;
  pk.p_prime = r.get_matrix(rows, params.m, params.coeff_bytes, params.p, "p' coefficient");
  pk.q_prime = r.get_matrix(rows, params.m, params.coeff_bytes, params.p, "q' coefficient");
  pk.mu = r.get_matrix(rows, params.m, params.barrett_bytes, barrett_bound, "mu coefficient");
  pk.nu = r.get_matrix(rows, params.m, params.barrett_bytes, barrett_bound, "nu coefficient");
  pk.s1 = r.get_below(params.coeff_bytes, params.p, "s1");
  pk.s2 = r.get_below(params.coeff_bytes, params.p, "s2");
  return pk;
}

ds::PrivateKey decode_ds_private_key(std::span<const std::uint8_t> bytes, const DsParams& params) {
  Reader r(bytes, ds_sizes(params).private_key, "DS private key");
  ds::PrivateKey sk;
  sk.fh = read_linear_pair(r, params.coeff_bytes, params.p);
  const Nat R1 = r.get(params.ring_bytes);
  const Nat R2 = r.get(params.ring_bytes);
  const Nat S1 = r.get(params.ring_bytes);
  const Nat S2 = r.get(params.ring_bytes);
  sk.ring1 = ring_from(S1, R1, params.ring_bits);
  sk.ring2 = ring_from(S2, R2, params.ring_bits);
  return sk;
}

ds::Signature decode_ds_signature(std::span<const std::uint8_t> bytes, const DsParams& params) {
  Reader r(bytes, ds_sizes(params).signature, "DS signature");
  const Nat bound = Nat::pow2(params.ring_bits);
  ds::Signature sig;
  sig.segments.resize(params.seg_count);
  for (auto& seg : sig.segments) {
    seg.F = r.get_below(params.ring_bytes, bound, "F");
    seg.H = r.get_below(params.ring_bytes, bound, "H");
  }
  return sig;
}

}  // namespace hppk::codec
