#pragma once

#include <cstddef>

#include "hppk/drbg.hpp"
#include "hppk/nat.hpp"
#include "hppk/poly.hpp"

namespace hppk {

/// Symmetric homomorphic key (R, S): c -> R*c mod S with gcd(R, S) = 1.
/// The map preserves addition and scalar multiplication, so encrypted
/// polynomial coefficients still evaluate correctly.
struct HiddenRing {
  Nat S;
  Nat R;
  Nat Rinv;  // R^-1 mod S

  /// Computes Rinv; throws NotInvertible if gcd(R, S) != 1.
  static HiddenRing from(const Nat& S, const Nat& R);

  Nat encrypt(const Nat& c) const;
  Nat decrypt(const Nat& v) const;
  Matrix encrypt(const Matrix& plain) const;

  friend bool operator==(const HiddenRing&, const HiddenRing&) = default;
};

/// R uniform in [1, S), redrawn until coprime with S.
Nat sample_ring_multiplier(Drbg& g, const Nat& S);

/// S with bit length exactly L, then R as in sample_ring_multiplier.
HiddenRing sample_hidden_ring(Drbg& g, std::size_t L);

}  // namespace hppk
