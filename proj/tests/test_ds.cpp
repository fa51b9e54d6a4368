#include <doctest.h>

#include "hppk/bigmod.hpp"
#include "hppk/codec.hpp"
#include "hppk/ds.hpp"
#include "hppk/error.hpp"
#include "hppk/hash.hpp"
#include "support.hpp"

using hppk::Nat;
using namespace hppk::ds;
using testing::drbg_of;
using testing::kLevels;

namespace {

Nat lin(const std::array<Nat, 2>& poly, const Nat& x, const Nat& p) { return (poly[0] + poly[1] * x) % p; }

}  // namespace

TEST_CASE("parameter sets") {
  const std::size_t b[] = {64, 96, 128};
  const std::size_t seg[] = {8, 12, 16};
  const char* names[] = {"SHA-256", "SHA-384", "SHA-512"};
  int i = 0;
  for (auto level : kLevels) {
    const auto params = hppk::ds_params(level);
    CHECK(params.prime_bits == b[i]);
    CHECK(params.ring_bits == 2 * b[i] + 16);
    CHECK(params.barrett_bits == params.ring_bits + 64);
    CHECK(params.seg_bytes == seg[i]);
    CHECK(hppk::hash_name(params.hash) == names[i]);
    CHECK(hppk::is_probable_prime(params.p));
    CHECK(params.p.bit_length() == b[i]);
    ++i;
  }
  CHECK(hppk::ds_params(hppk::Level::I).p == Nat::pow2(64) - Nat(59));
  CHECK(hppk::ds_params(hppk::Level::III).p == Nat::pow2(96) - Nat(17));
  CHECK(hppk::ds_params(hppk::Level::V).p == Nat::pow2(128) - Nat(159));
}

TEST_CASE("keygen: sizes, Barrett constants and the ceiling identity") {
  for (auto level : kLevels) {
    const auto params = hppk::ds_params(level);
    auto g = drbg_of(21);
    for (int k = 0; k < 20; ++k) {
      KeygenTrace tr;
      const auto kp = keygen(params, g, &tr);
      const Nat two_k = Nat::pow2(params.barrett_bits);
      for (std::size_t i = 0; i < params.rows(); ++i) {
        const Nat& mu = kp.pk.mu.at(i, 0);
        const Nat& nu = kp.pk.nu.at(i, 0);
        CHECK(mu < two_k);
        CHECK(nu < two_k);
        CHECK(mu == tr.P.at(i, 0) * two_k / kp.sk.ring1.S);
        // ceil(S1 * mu / 2^K) recovers P_ij
        CHECK((kp.sk.ring1.S * mu + two_k - Nat(1)) / two_k == tr.P.at(i, 0));
        CHECK((kp.sk.ring2.S * nu + two_k - Nat(1)) / two_k == tr.Q.at(i, 0));
        CHECK(kp.pk.p_prime.at(i, 0) == tr.beta * tr.P.at(i, 0) % params.p);
      }
      CHECK(kp.pk.s1 == tr.beta * kp.sk.ring1.S % params.p);
      CHECK(tr.beta >= Nat(1));
      CHECK(tr.beta < params.p);
    }
  }
  auto g = drbg_of(22);
  const auto params = hppk::ds_params(hppk::Level::I);
  CHECK(hppk::codec::encode(keygen(params, g).pk, params).size() == 220);
}

TEST_CASE("hash_to_segments of the empty message at level I") {
  const auto params = hppk::ds_params(hppk::Level::I);
  const auto d = hppk::from_hex("e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(hppk::sha256({}) == d);
  const auto xs = hash_to_segments({}, params);
  for (std::size_t t = 0; t < 4; ++t) {
    std::uint64_t word = 0;
    for (int k = 7; k >= 0; --k) word = (word << 8) | d[8 * t + k];
    const std::uint64_t p = 0xffffffffffffffffull - 58;
    CHECK(xs[t] == Nat(word % p));
  }
  CHECK(xs[0] == Nat(0x141cfc9842c4b0e3ull));
}

TEST_CASE("hash_to_segments: avalanche and level V widths") {
  const auto params = hppk::ds_params(hppk::Level::I);
  auto g = drbg_of(23);
  for (int trial = 0; trial < 1000; ++trial) {
    auto msg = g.bytes(1 + trial % 64);
    const auto before = hash_to_segments(msg, params);
    const std::size_t bit = hppk::uniform_below(g, Nat(msg.size() * 8)).to_u64();
    msg[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    CHECK(hash_to_segments(msg, params) != before);
  }
  const auto v = hppk::ds_params(hppk::Level::V);
  CHECK(v.seg_bytes == 16);
  CHECK(hppk::digest_size(v.hash) == 64);
  for (const auto& x : hash_to_segments(std::vector<std::uint8_t>{1, 2, 3}, v)) CHECK(x < v.p);
}

TEST_CASE("sign: determinism and ring inversion") {
  for (auto level : kLevels) {
    const auto params = hppk::ds_params(level);
    auto g = drbg_of(24);
    const auto kp = keygen(params, g);
    const auto msg = g.bytes(100);
    const auto sig = sign(kp.sk, params, msg);
    CHECK(sig == sign(kp.sk, params, msg));
    const auto xs = hash_to_segments(msg, params);
    for (std::size_t t = 0; t < 4; ++t) {
      CHECK(sig.segments[t].F * kp.sk.ring2.R % kp.sk.ring2.S == lin(kp.sk.fh.f, xs[t], params.p));
      CHECK(sig.segments[t].H * kp.sk.ring1.R % kp.sk.ring1.S == lin(kp.sk.fh.h, xs[t], params.p));
    }
  }
}

TEST_CASE("round trip and rejection") {
  for (auto level : kLevels) {
    const auto params = hppk::ds_params(level);
    auto g = drbg_of(25);
    for (int k = 0; k < 30; ++k) {
      const auto kp = keygen(params, g);
      auto msg = g.bytes(32);
      const auto sig = sign(kp.sk, params, msg);
      CHECK(verify(kp.pk, params, msg, sig));

      auto flipped = msg;
      flipped[k % 32] ^= 0x10;
      CHECK_FALSE(verify(kp.pk, params, flipped, sig));

      auto bad = sig;
      bad.segments[k % 4].F += Nat(1);
      CHECK_FALSE(verify(kp.pk, params, msg, bad));
    }
  }
}

TEST_CASE("swapping the F/H pairing fails verification") {
  const auto params = hppk::ds_params(hppk::Level::I);
  auto g = drbg_of(26);
  for (int k = 0; k < 20; ++k) {
    const auto kp = keygen(params, g);
    const auto msg = g.bytes(16);
    const auto xs = hash_to_segments(msg, params);
    Signature swapped;
    for (const auto& x : xs) {
      const Nat fx = lin(kp.sk.fh.f, x, params.p);
      const Nat hx = lin(kp.sk.fh.h, x, params.p);
      swapped.segments.push_back({kp.sk.ring1.decrypt(fx), kp.sk.ring2.decrypt(hx)});
    }
    CHECK_FALSE(verify(kp.pk, params, msg, swapped));
  }
}

TEST_CASE("algebraic core: U = beta hx p_ij and V = beta fx q_ij") {
  for (auto level : kLevels) {
    for (std::size_t m : {1u, 2u}) {
      const auto params = hppk::ds_params(level, m);
      const Nat& p = params.p;
      auto g = drbg_of(27);
      for (int k = 0; k < 10; ++k) {
        KeygenTrace tr;
        const auto kp = keygen(params, g, &tr);
        const auto msg = g.bytes(20);
        const auto sig = sign(kp.sk, params, msg);
        const auto xs = hash_to_segments(msg, params);
        for (std::size_t t = 0; t < 4; ++t) {
          const Nat fx = lin(kp.sk.fh.f, xs[t], p);
          const Nat hx = lin(kp.sk.fh.h, xs[t], p);
          for (std::size_t j = 0; j < m; ++j) {
            Nat lhs(0), rhs(0), beta_poly(0);
            for (std::size_t i = 0; i < 3; ++i) {
              const Nat U = verification_coefficient(sig.segments[t].H, kp.pk.p_prime.at(i, j), kp.pk.s1,
                                                     kp.pk.mu.at(i, j), params.barrett_bits, p);
              const Nat V = verification_coefficient(sig.segments[t].F, kp.pk.q_prime.at(i, j), kp.pk.s2,
                                                     kp.pk.nu.at(i, j), params.barrett_bits, p);
              CHECK(U == tr.beta * hx * tr.p_plain.at(i, j) % p);
              CHECK(V == tr.beta * fx * tr.q_plain.at(i, j) % p);
              const Nat xi = hppk::pow_mod(xs[t], Nat(i), p);
              lhs += U * xi;
              rhs += V * xi;
            }
            beta_poly = (tr.c.at(0, j) + tr.c.at(1, j) * xs[t]) % p;
            CHECK(lhs % p == rhs % p);
            CHECK(lhs % p == tr.beta * fx * hx * beta_poly % p);
          }
        }
      }
    }
  }
}

TEST_CASE("malformed signatures") {
  const auto params = hppk::ds_params(hppk::Level::I);
  auto g = drbg_of(28);
  const auto kp = keygen(params, g);
  const std::vector<std::uint8_t> msg = {'h', 'i'};
  auto sig = sign(kp.sk, params, msg);

  auto too_big = sig;
  too_big.segments[2].H = Nat::pow2(params.ring_bits);
  try {
    verify(kp.pk, params, msg, too_big);
    FAIL("expected MalformedSignature");
  } catch (const hppk::Error& e) {
    CHECK(e.code() == hppk::Errc::MalformedSignature);
  }

  auto short_sig = sig;
  short_sig.segments.resize(3);
  CHECK_THROWS_AS(verify(kp.pk, params, msg, short_sig), hppk::Error);

  // Below 2^L but above S: well-formed, simply rejected.
  auto high = sig;
  high.segments[0].F = Nat::pow2(params.ring_bits) - Nat(1);
  CHECK_FALSE(verify(kp.pk, params, msg, high));
}
