#include "hppk/bigmod.hpp"

#include "hppk/error.hpp"

namespace hppk {

Nat gcd(const Nat& a, const Nat& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Nat(g);
}

Nat mod_inverse(const Nat& a, const Nat& m) {
  if (m < Nat(2)) throw Error(Errc::InvalidParams, "modulus must be at least 2");
  mpz_class x;
  // mpz_invert runs the extended Euclidean algorithm and works for any
  // modulus, prime or not.
  if (mpz_invert(x.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t()) == 0) {
    throw Error(Errc::NotInvertible, a.to_string() + " has no inverse modulo " + m.to_string());
  }
  return Nat(x);
}

Nat mul_mod(const Nat& a, const Nat& b, const Nat& m) {
  if (m.is_zero()) throw Error(Errc::InvalidParams, "modulus must be at least 1");
  mpz_class r = a.raw() * b.raw();
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.raw().get_mpz_t());
  return Nat(r);
}

Nat add_mod(const Nat& a, const Nat& b, const Nat& m) {
  mpz_class r = a.raw() + b.raw();
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.raw().get_mpz_t());
  return Nat(r);
}

Nat sub_mod(const Nat& a, const Nat& b, const Nat& m) {
  mpz_class r = a.raw() - b.raw();
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.raw().get_mpz_t());
  return Nat(r);
}

Nat pow_mod(const Nat& base, const Nat& exp, const Nat& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.raw().get_mpz_t(), exp.raw().get_mpz_t(), m.raw().get_mpz_t());
  return Nat(r);
}

Nat barrett_precompute(const Nat& c, const Nat& S, std::size_t K) {
  if (S.is_zero()) throw Error(Errc::InvalidParams, "Barrett modulus must be at least 1");
  if (c >= S) throw Error(Errc::RangeViolation, "Barrett numerator must be below the modulus");
  return (c << K) / S;
}

Nat barrett_quotient(const Nat& h, const Nat& mu, std::size_t K) { return (h * mu) >> K; }

bool is_probable_prime(const Nat& n) {
  return mpz_probab_prime_p(n.raw().get_mpz_t(), 40) != 0;
}

}  // namespace hppk
