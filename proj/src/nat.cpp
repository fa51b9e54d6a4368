#include "hppk/nat.hpp"

#include <algorithm>
#include <cctype>

#include "hppk/error.hpp"

namespace hppk {

Nat::Nat(std::uint64_t v) {
  // mpz_class has no portable uint64 constructor on every ABI.
  mpz_import(v_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

Nat::Nat(const mpz_class& v) : v_(v) {
  if (sgn(v_) < 0) throw Error(Errc::RangeViolation, "negative value for Nat");
}

Nat Nat::pow2(std::size_t k) {
  Nat r;
  mpz_setbit(r.v_.get_mpz_t(), k);
  return r;
}

Nat Nat::from_bytes_le(std::span<const std::uint8_t> bytes) {
  Nat r;
  if (!bytes.empty()) mpz_import(r.v_.get_mpz_t(), bytes.size(), -1, 1, 0, 0, bytes.data());
  return r;
}

Nat Nat::parse(std::string_view text) {
  std::string s(text);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s = s.substr(2);
    base = 16;
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [base](char c) {
        return base == 16 ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                          : std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    throw Error(Errc::ParseError, "not a natural number: '" + std::string(text) + "'");
  }
  Nat r;
  r.v_.set_str(s, base);
  return r;
}

std::vector<std::uint8_t> Nat::to_bytes_le(std::size_t width) const {
  std::vector<std::uint8_t> out(width, 0);
  write_le(out);
  return out;
}

void Nat::write_le(std::span<std::uint8_t> out) const {
  const std::size_t need = byte_length();
  if (need > out.size()) {
    throw Error(Errc::RangeViolation, "value needs " + std::to_string(need) + " bytes, field has " +
                                          std::to_string(out.size()));
  }
  std::fill(out.begin(), out.end(), 0);
  std::size_t written = 0;
  if (need > 0) mpz_export(out.data(), &written, -1, 1, 0, 0, v_.get_mpz_t());
}

std::size_t Nat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool Nat::bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw Error(Errc::RangeViolation, "value exceeds 64 bits");
  std::uint64_t r = 0;
  std::size_t written = 0;
  if (!is_zero()) mpz_export(&r, &written, -1, sizeof(r), 0, 0, v_.get_mpz_t());
  return r;
}

std::string Nat::to_string() const { return v_.get_str(10); }
std::string Nat::to_hex() const { return v_.get_str(16); }

Nat& Nat::operator+=(const Nat& o) {
  v_ += o.v_;
  return *this;
}

Nat& Nat::operator-=(const Nat& o) {
  if (cmp(v_, o.v_) < 0) throw Error(Errc::RangeViolation, "natural subtraction underflow");
  v_ -= o.v_;
  return *this;
}

Nat& Nat::operator*=(const Nat& o) {
  v_ *= o.v_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw Error(Errc::RangeViolation, "division by zero");
  mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw Error(Errc::RangeViolation, "modulus is zero");
  mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator<<=(std::size_t k) {
  mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), k);
  return *this;
}

Nat& Nat::operator>>=(std::size_t k) {
  mpz_fdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), k);
  return *this;
}

}  // namespace hppk
