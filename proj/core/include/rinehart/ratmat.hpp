#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rinehart/rational.hpp"

namespace rinehart {

/// Dense matrix over the rationals; all operations exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  bool is_symmetric() const;
  bool is_zero() const;
  std::size_t rank() const;

  /// Exact solution of (*this) x = b, or empty when the system is inconsistent.
  /// Underdetermined systems return one solution (free variables set to zero).
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  /// Basis of the right kernel { x : (*this) x = 0 }.
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Symmetric factorization m = Σ_k pivot[k] · column[k] · column[k]ᵀ taken in
/// natural pivot order. Exact arithmetic needs no pivoting for stability, and
/// natural order keeps triangular Gram inputs factorable with square pivots.
/// When m is not positive semidefinite, a witness vector v with vᵀ m v < 0 is
/// produced instead (an exact disproof of semidefiniteness).
struct Ldlt {
  bool psd = false;
  std::size_t rank = 0;                       // number of positive pivots
  std::vector<std::size_t> pivot_index;       // diagonal position of each pivot
  std::vector<Rational> pivot;                // the positive pivots
  std::vector<std::vector<Rational>> column;  // unit-diagonal columns, original coordinates
  std::vector<Rational> witness;              // only when !psd
  Rational witness_value = 0;                 // witnessᵀ m witness, negative when !psd
};

/// Requires a symmetric input.
Ldlt ldlt_decompose(const RatMatrix& m);

/// Coefficients expressing target in the span of the given vectors, or empty
/// when target lies outside the span. All vectors must share target's length.
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& target);

}  // namespace rinehart
