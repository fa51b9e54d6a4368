#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hppk/drbg.hpp"
#include "hppk/nat.hpp"

namespace hppk {

/// Dense row-major matrix of naturals; rows index powers of x, columns
/// index noise variables.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Nat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Nat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Nat> values() const { return data_; }
  std::span<Nat> values() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Nat> data_;
};

/// Linear secret polynomials f(x) = f0 + f1 x and h(x) = h0 + h1 x over F_p.
struct LinearPair {
  std::array<Nat, 2> f;
  std::array<Nat, 2> h;

  friend bool operator==(const LinearPair&, const LinearPair&) = default;
};

/// f1*h0 != f0*h1 (mod p): f/h is then a bijective Moebius map, so
/// f(x) - k h(x) = 0 has exactly one root whenever it is not degenerate.
bool non_proportional(const LinearPair& fh, const Nat& p);

/// All four coefficients uniform in [1, p); resampled as a whole until
/// non_proportional holds.
LinearPair sample_linear_pair(Drbg& g, const Nat& p);

/// Coefficients c_ij of beta(x, u) = sum_i sum_j c_ij x^i u_j, uniform in
/// [1, p), drawn row by row.
Matrix sample_noise_coefficients(Drbg& g, const Nat& p, std::size_t n, std::size_t m);

/// Product coefficients of poly(x) * beta(x, u):
/// out_ij = sum_s poly_s * c_(i-s)j mod p for max(0, i-n) <= s <= min(lambda, i).
Matrix product_coefficients(std::span<const Nat> poly, const Matrix& c, const Nat& p);

Nat eval_linear(const std::array<Nat, 2>& poly, const Nat& x, const Nat& p);

}  // namespace hppk
