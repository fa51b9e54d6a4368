#include "hppk/poly.hpp"

#include <algorithm>

#include "hppk/bigmod.hpp"

namespace hppk {

bool non_proportional(const LinearPair& fh, const Nat& p) {
  return mul_mod(fh.f[1], fh.h[0], p) != mul_mod(fh.f[0], fh.h[1], p);
}

LinearPair sample_linear_pair(Drbg& g, const Nat& p) {
  LinearPair fh;
  do {
    for (std::size_t i = 0; i < 2; ++i) {
      fh.f[i] = uniform_range(g, Nat(1), p);
      fh.h[i] = uniform_range(g, Nat(1), p);
    }
  } while (!non_proportional(fh, p));
  return fh;
}

Matrix sample_noise_coefficients(Drbg& g, const Nat& p, std::size_t n, std::size_t m) {
  Matrix c(n + 1, m);
  for (auto& v : c.values()) v = uniform_range(g, Nat(1), p);
  return c;
}

Matrix product_coefficients(std::span<const Nat> poly, const Matrix& c, const Nat& p) {
  const std::size_t lambda = poly.size() - 1;
  const std::size_t n = c.rows() - 1;
  Matrix out(n + lambda + 1, c.cols());
  for (std::size_t i = 0; i <= n + lambda; ++i) {
    const std::size_t s_lo = i > n ? i - n : 0;
    const std::size_t s_hi = std::min(lambda, i);
    for (std::size_t j = 0; j < c.cols(); ++j) {
      Nat acc;
      for (std::size_t s = s_lo; s <= s_hi; ++s) acc += poly[s] * c.at(i - s, j);
      out.at(i, j) = acc % p;
    }
  }
  return out;
}

Nat eval_linear(const std::array<Nat, 2>& poly, const Nat& x, const Nat& p) {
  return (poly[0] + poly[1] * x) % p;
}

}  // namespace hppk
