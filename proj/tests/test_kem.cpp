#include <doctest.h>

#include <optional>

#include "hppk/bigmod.hpp"
#include "hppk/codec.hpp"
#include "hppk/error.hpp"
#include "hppk/kem.hpp"
#include "oracle.hpp"
#include "support.hpp"

using hppk::Nat;
using namespace hppk::kem;
using testing::drbg_of;
using testing::kLevels;

namespace {

// beta(x, u) = sum_j (c_0j + c_1j x) u_j mod p, written out directly.
Nat beta_at(const hppk::Matrix& c, const Nat& x, const std::vector<Nat>& u, const Nat& p) {
  Nat acc(0);
  for (std::size_t j = 0; j < u.size(); ++j) acc += (c.at(0, j) + c.at(1, j) * x) * u[j];
  return acc % p;
}

Nat lin(const std::array<Nat, 2>& poly, const Nat& x, const Nat& p) { return (poly[0] + poly[1] * x) % p; }

std::vector<Nat> draw(hppk::Drbg& g, const Nat& bound, std::size_t n) {
  std::vector<Nat> out(n);
  for (auto& v : out) v = hppk::uniform_below(g, bound);
  return out;
}

}  // namespace

TEST_CASE("KEM primes are the largest primes below 2^32, 2^48, 2^64") {
  const std::uint64_t ps[] = {(1ull << 32) - 5, (1ull << 48) - 59, 0xffffffffffffffffull - 58};
  int i = 0;
  for (auto level : kLevels) {
    const auto params = hppk::kem_params(level, 2, 2);
    CHECK(params.p == Nat(ps[i]));
    CHECK(oracle::is_prime_u64(ps[i]));
    CHECK(hppk::is_probable_prime(params.p));
    const std::uint64_t top = i == 2 ? 0xffffffffffffffffull : (1ull << params.prime_bits) - 1;
    for (std::uint64_t q = ps[i] + 1; q <= top && q > ps[i]; ++q) CHECK_FALSE(oracle::is_prime_u64(q));
    CHECK(params.ring_bits == 2 * params.prime_bits + 8);
    ++i;
  }
}

TEST_CASE("segment geometry") {
  const std::size_t segs[] = {8, 6, 4};
  const std::size_t widths[] = {14, 20, 26};
  int i = 0;
  for (auto level : kLevels) {
    const auto params = hppk::kem_params(level, 2, 2);
    CHECK(params.num_segments == segs[i]);
    CHECK(params.ct_value_bytes == widths[i]);
    CHECK(hppk::codec::kem_sizes(params).ciphertext == segs[i] * 2 * widths[i]);
    ++i;
  }
  CHECK_THROWS_AS(hppk::kem_params(hppk::Level::I, 4, 2), hppk::Error);
  CHECK_THROWS_AS(hppk::kem_params(hppk::Level::I, 2, 3), hppk::Error);
}

TEST_CASE("keygen shape and determinism") {
  const auto params = hppk::kem_params(hppk::Level::I, 2, 2);
  auto g1 = drbg_of(5);
  auto g2 = drbg_of(5);
  const auto a = keygen(params, g1);
  const auto b = keygen(params, g2);
  CHECK(a.pk == b.pk);
  CHECK(a.sk == b.sk);
  CHECK(a.pk.P.rows() == 3);
  CHECK(a.pk.P.cols() == 2);
  CHECK(hppk::codec::encode(a.pk, params).size() == 108);

  auto g3 = drbg_of(6);
  CHECK_FALSE(keygen(params, g3).pk == a.pk);
}

TEST_CASE("keygen invariants and convolution against retained internals") {
  for (auto level : kLevels) {
    for (std::size_t m : {2u, 3u}) {
      for (std::size_t rings : {1u, 2u}) {
        const auto params = hppk::kem_params(level, m, rings);
        for (std::uint64_t s = 0; s < 10; ++s) {
          auto g = drbg_of(100 + s);
          KeygenTrace tr;
          const auto kp = keygen(params, g, &tr);
          const Nat& p = params.p;
          const auto& sk = kp.sk;

          for (const auto& v : {sk.fh.f[0], sk.fh.f[1], sk.fh.h[0], sk.fh.h[1]}) {
            CHECK(v >= Nat(1));
            CHECK(v < p);
          }
          CHECK(hppk::mul_mod(sk.fh.f[1], sk.fh.h[0], p) != hppk::mul_mod(sk.fh.f[0], sk.fh.h[1], p));
          for (const auto& ring : {sk.ring1, sk.ring2}) {
            CHECK(ring.S.bit_length() == params.ring_bits);
            CHECK(hppk::gcd(ring.R, ring.S) == Nat(1));
          }
          if (rings == 1) CHECK(sk.ring1.S == sk.ring2.S);

          for (std::size_t j = 0; j < m; ++j) {
            const Nat& c0 = tr.c.at(0, j);
            const Nat& c1 = tr.c.at(1, j);
            const Nat expect_p[3] = {sk.fh.f[0] * c0 % p, (sk.fh.f[0] * c1 + sk.fh.f[1] * c0) % p,
                                     sk.fh.f[1] * c1 % p};
            const Nat expect_q[3] = {sk.fh.h[0] * c0 % p, (sk.fh.h[0] * c1 + sk.fh.h[1] * c0) % p,
                                     sk.fh.h[1] * c1 % p};
            for (std::size_t i = 0; i < 3; ++i) {
              CHECK(sk.ring1.Rinv * kp.pk.P.at(i, j) % sk.ring1.S == expect_p[i]);
              CHECK(sk.ring2.Rinv * kp.pk.Q.at(i, j) % sk.ring2.S == expect_q[i]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("forced noise and forced x") {
  const auto params = hppk::kem_params(hppk::Level::I, 2, 2);
  auto g = drbg_of(7);
  const auto kp = keygen(params, g);

  const std::vector<Nat> zeros(2, Nat(0));
  const auto z = encapsulate_segment(kp.pk, params, Nat(123456), zeros);
  CHECK(z.p_bar.is_zero());
  CHECK(z.q_bar.is_zero());

  const std::vector<Nat> u = {Nat(17), Nat(99991)};
  const auto seg = encapsulate_segment(kp.pk, params, Nat(0), u);
  CHECK(seg.p_bar == kp.pk.P.at(0, 0) * u[0] + kp.pk.P.at(0, 1) * u[1]);
  CHECK(seg.q_bar == kp.pk.Q.at(0, 0) * u[0] + kp.pk.Q.at(0, 1) * u[1]);
}

TEST_CASE("round trip on every configuration") {
  for (auto level : kLevels) {
    for (std::size_t m : {2u, 3u}) {
      for (std::size_t rings : {1u, 2u}) {
        const auto params = hppk::kem_params(level, m, rings);
        auto g = drbg_of(level == hppk::Level::I ? 1 : 2);
        for (int trial = 0; trial < 50; ++trial) {
          const auto kp = keygen(params, g);
          const auto enc = encapsulate(kp.pk, params, g);
          REQUIRE(enc.ct.segments.size() == params.num_segments);
          CHECK(decapsulate(kp.sk, params, enc.ct) == enc.ss);
        }
      }
    }
  }
}

TEST_CASE("shared secret is the little-endian concatenation of the segment values") {
  const auto params = hppk::kem_params(hppk::Level::III, 2, 2);
  auto g = drbg_of(8);
  const auto kp = keygen(params, g);
  hppk::Drbg replay = g;
  const auto enc = encapsulate(kp.pk, params, g);

  std::vector<std::uint8_t> raw;
  for (std::size_t t = 0; t < params.num_segments; ++t) {
    const Nat x = hppk::uniform_below(replay, params.p);
    for (std::size_t j = 0; j < params.m; ++j) hppk::uniform_below(replay, params.p);
    const auto b = x.to_bytes_le(6);
    raw.insert(raw.end(), b.begin(), b.end());
  }
  REQUIRE(raw.size() == 36);
  CHECK(std::equal(enc.ss.begin(), enc.ss.end(), raw.begin()));
}

TEST_CASE("decryption identity, plaintext bound and root algebra") {
  for (auto level : kLevels) {
    const auto params = hppk::kem_params(level, 2, 2);
    const Nat& p = params.p;
    KeygenTrace current;
    KeyPair current_kp;
    auto g = drbg_of(9);
    for (int trial = 0; trial < 1000; ++trial) {
      // 20 keys, 50 instances each
      if (trial % 50 == 0) current_kp = keygen(params, g, &current);
      const auto& sk = current_kp.sk;
      const Nat x = hppk::uniform_below(g, p);
      const auto u = draw(g, p, params.m);
      const auto seg = encapsulate_segment(current_kp.pk, params, x, u);

      Nat plain_sum(0);
      for (std::size_t i = 0; i < 3; ++i) {
        const Nat xi = hppk::pow_mod(x, Nat(i), p);
        for (std::size_t j = 0; j < params.m; ++j) plain_sum += current.p_plain.at(i, j) * (u[j] * xi % p);
      }
      CHECK(plain_sum < sk.ring1.S);

      const Nat beta = beta_at(current.c, x, u, p);
      const Nat a = sk.ring1.Rinv * seg.p_bar % sk.ring1.S % p;
      const Nat bq = sk.ring2.Rinv * seg.q_bar % sk.ring2.S % p;
      CHECK(a == beta * lin(sk.fh.f, x, p) % p);
      CHECK(bq == beta * lin(sk.fh.h, x, p) % p);

      const Nat hx = lin(sk.fh.h, x, p);
      if (beta.is_zero() || hx.is_zero()) continue;
      const auto open = decapsulate_segment(sk, params, seg);
      CHECK(open.x == x);
      const Nat lhs = hppk::sub_mod(sk.fh.f[1], open.k * sk.fh.h[1], p);
      const Nat det = hppk::sub_mod(sk.fh.f[1] * sk.fh.h[0], sk.fh.f[0] * sk.fh.h[1], p);
      CHECK(lhs == det * hppk::mod_inverse(hx, p) % p);
      CHECK_FALSE(lhs.is_zero());
    }
  }
}

TEST_CASE("noise cancels: k depends on x only") {
  const auto params = hppk::kem_params(hppk::Level::I, 3, 2);
  auto g = drbg_of(10);
  const auto kp = keygen(params, g);
  const Nat x(4242424242ull);
  std::optional<Nat> k;
  for (int i = 0; i < 100; ++i) {
    const auto seg = encapsulate_segment(kp.pk, params, x, draw(g, params.p, 3));
    const auto open = decapsulate_segment(kp.sk, params, seg);
    if (!k) k = open.k;
    CHECK(open.k == *k);
    CHECK(open.x == x);
  }
}

TEST_CASE("tampered ciphertexts never crash") {
  const auto params = hppk::kem_params(hppk::Level::I, 2, 2);
  auto g = drbg_of(11);
  const auto kp = keygen(params, g);
  auto enc = encapsulate(kp.pk, params, g);

  // Either a DecapsulationFailure or a different secret; nothing else.
  const auto rejected = [&](const Ciphertext& ct) {
    try {
      return decapsulate(kp.sk, params, ct) != enc.ss;
    } catch (const hppk::Error& e) {
      return e.code() == hppk::Errc::DecapsulationFailure;
    }
  };

  auto zeroed = enc.ct;
  zeroed.segments[0].q_bar = Nat(0);
  CHECK(rejected(zeroed));

  auto tweaked = enc.ct;
  tweaked.segments[3].p_bar += Nat(1);
  CHECK(rejected(tweaked));

  auto short_ct = enc.ct;
  short_ct.segments.pop_back();
  try {
    decapsulate(kp.sk, params, short_ct);
    FAIL("expected LengthMismatch");
  } catch (const hppk::Error& e) {
    CHECK(e.code() == hppk::Errc::LengthMismatch);
  }
}

TEST_CASE("one hidden ring behaves as two rings with S2 = S1") {
  const auto ohr = hppk::kem_params(hppk::Level::V, 2, 1);
  const auto thr = hppk::kem_params(hppk::Level::V, 2, 2);
  auto g = drbg_of(12);
  const auto kp = keygen(ohr, g);
  CHECK(kp.sk.ring1.S == kp.sk.ring2.S);

  // The same key material read as a two-ring key gives the same ciphertexts
  // and the same secrets; only the private-key encoding differs.
  hppk::Drbg ga = g, gb = g;
  const auto e1 = encapsulate(kp.pk, ohr, ga);
  const auto e2 = encapsulate(kp.pk, thr, gb);
  CHECK(e1.ct == e2.ct);
  CHECK(decapsulate(kp.sk, ohr, e1.ct) == decapsulate(kp.sk, thr, e2.ct));
  CHECK(hppk::codec::encode(kp.sk, ohr).size() + 17 == hppk::codec::encode(kp.sk, thr).size());
}

TEST_CASE("degenerate segment surfaces as DecapsulationFailure") {
  const auto params = hppk::kem_params(hppk::Level::I, 2, 2);
  auto g = drbg_of(13);
  const auto kp = keygen(params, g);
  const auto& f = kp.sk.fh;
  const Nat& p = params.p;
  // x = -h0/h1 makes h(x) = 0, so bq = 0.
  const Nat x = hppk::sub_mod(Nat(0), f.h[0] * hppk::mod_inverse(f.h[1], p), p);
  const auto seg = encapsulate_segment(kp.pk, params, x, std::vector<Nat>{Nat(3), Nat(5)});
  try {
    decapsulate_segment(kp.sk, params, seg);
    FAIL("expected DecapsulationFailure");
  } catch (const hppk::Error& e) {
    CHECK(e.code() == hppk::Errc::DecapsulationFailure);
  }
}
