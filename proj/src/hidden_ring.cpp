#include "hppk/hidden_ring.hpp"

#include "hppk/bigmod.hpp"

namespace hppk {

HiddenRing HiddenRing::from(const Nat& S, const Nat& R) {
  return HiddenRing{S, R, mod_inverse(R, S)};
}

Nat HiddenRing::encrypt(const Nat& c) const { return mul_mod(R, c, S); }

Nat HiddenRing::decrypt(const Nat& v) const { return mul_mod(Rinv, v, S); }

Matrix HiddenRing::encrypt(const Matrix& plain) const {
  Matrix out(plain.rows(), plain.cols());
  for (std::size_t i = 0; i < plain.rows(); ++i) {
    for (std::size_t j = 0; j < plain.cols(); ++j) out.at(i, j) = encrypt(plain.at(i, j));
  }
  return out;
}

Nat sample_ring_multiplier(Drbg& g, const Nat& S) {
  const Nat one(1);
  for (;;) {
    Nat R = uniform_range(g, one, S);
    if (gcd(R, S) == one) return R;
  }
}

HiddenRing sample_hidden_ring(Drbg& g, std::size_t L) {
  Nat S = uniform_exact_bits(g, L);
  Nat R = sample_ring_multiplier(g, S);
  return HiddenRing::from(S, R);
}

}  // namespace hppk
