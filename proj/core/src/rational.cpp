#include "rinehart/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rinehart {

Rational make_rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

namespace {

bool rational_text_ok(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!rational_text_ok(text))
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  Rational r(text);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational literal with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(Rational r, unsigned long e) {
  Rational acc = 1;
  while (e > 0) {
    if (e & 1UL) acc *= r;
    r *= r;
    e >>= 1UL;
  }
  return acc;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t())) return false;
  if (!mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  // gcd(rn, rd) = 1 because gcd(rn^2, rd^2) = 1, so this is canonical already.
  root = Rational(rn, rd);
  return true;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  return Rational(x);
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace rinehart
