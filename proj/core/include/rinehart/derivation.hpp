#pragma once

#include <map>

#include "rinehart/poly.hpp"

namespace rinehart {

/// Derivation of a polynomial algebra, stored by its images on generators and
/// extended to arbitrary polynomials through the Leibniz rule. Variables
/// without a recorded image are treated as constants. Zero images are erased
/// at construction so equality is structural.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::map<Var, Poly> images);

  /// D(p) = Σ_v image(v) · ∂p/∂v.
  Poly apply(const Poly& p) const;

  Poly image_of(const Var& v) const;
  const std::map<Var, Poly>& images() const { return images_; }
  bool is_zero() const { return images_.empty(); }

  Derivation operator+(const Derivation& rhs) const;
  Derivation operator-(const Derivation& rhs) const;
  Derivation operator-() const;

  /// Left-multiplication by a polynomial (module structure over the algebra).
  friend Derivation operator*(const Poly& a, const Derivation& d);

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::map<Var, Poly> images_;
};

/// [a, b] = a ∘ b − b ∘ a, again a derivation.
Derivation commutator(const Derivation& a, const Derivation& b);

}  // namespace rinehart
