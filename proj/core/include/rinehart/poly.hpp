#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rinehart/rational.hpp"
#include "rinehart/variable.hpp"

namespace rinehart {

/// Product of variable powers, kept sorted by variable with exponents >= 1.
/// The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial{}; }
  static Monomial of(const Var& v, int exp = 1);

  int degree() const;
  int degree(VarKind kind) const;
  int exponent(const Var& v) const;
  bool is_one() const { return factors_.empty(); }

  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;

  /// This monomial with v's exponent lowered by one. Requires exponent(v) >= 1.
  Monomial divided_by(const Var& v) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

/// Degree-lexicographic order, larger monomial first, so polynomial term maps
/// iterate leading term first. Base variables precede fiber variables through
/// the Var order; ties at equal total degree go to the monomial with the
/// larger exponent on the earliest variable.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form is an invariant: no zero coefficients are stored, and term
/// order is fixed by MonomialOrder, so equality is plain map equality.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;

  static Poly zero() { return Poly{}; }
  static Poly one() { return constant(1); }
  static Poly constant(const Rational& c);
  static Poly variable(const Var& v);
  static Poly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest per-term degree in variables of the given kind; -1 if zero.
  int degree(VarKind kind) const;
  /// True when some term contains a variable of the given kind.
  bool uses(VarKind kind) const;

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  std::set<Var> variables() const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  Poly pow(unsigned e) const;

  /// Formal partial derivative.
  Poly partial(const Var& v) const;

  /// Sum of the terms whose total fiber-variable degree is exactly d.
  /// Summing over all d recovers the polynomial.
  Poly fiber_degree_part(int d) const;

  /// Full evaluation. Every variable that occurs must have a value.
  Rational evaluate(const std::map<Var, Rational>& values) const;

  /// Algebra-map substitution: each mapped variable is replaced by its image,
  /// unmapped variables stay themselves.
  Poly substitute(const std::map<Var, Poly>& images) const;

  /// Canonical rendering, e.g. "3/2*x^2*e1 + y". Deterministic term order;
  /// the DSL expression grammar parses this back to an equal Poly.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly::constant(c) * p; }
inline Poly operator*(const Poly& p, const Rational& c) { return p * Poly::constant(c); }

}  // namespace rinehart
