#include "rinehart/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rinehart {

Monomial Monomial::of(const Var& v, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::degree(VarKind kind) const {
  int d = 0;
  for (const auto& [v, e] : factors_)
    if (v.kind == kind) d += e;
  return d;
}

int Monomial::exponent(const Var& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto ia = factors_.begin(), ea = factors_.end();
  auto ib = rhs.factors_.begin(), eb = rhs.factors_.end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, ea);
  out.factors_.insert(out.factors_.end(), ib, eb);
  return out;
}

Monomial Monomial::divided_by(const Var& v) const {
  Monomial out;
  bool found = false;
  for (const auto& [w, e] : factors_) {
    if (w == v) {
      found = true;
      if (e > 1) out.factors_.push_back({w, e - 1});
    } else {
      out.factors_.push_back({w, e});
    }
  }
  if (!found) throw std::invalid_argument("monomial not divisible by " + v.name);
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) {
      // The side holding the earlier variable has positive exponent where the
      // other side has zero, which makes it the larger monomial.
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  // Equal total degree with one factor list a prefix of the other forces both
  // to be exhausted, hence equality.
  return false;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::variable(const Var& v) { return term(1, Monomial::of(v)); }

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::degree(VarKind kind) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(kind));
  return d;
}

bool Poly::uses(VarKind kind) const {
  for (const auto& [m, c] : terms_)
    if (m.degree(kind) > 0) return true;
  return false;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  out += rhs;
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  out -= rhs;
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

Poly Poly::partial(const Var& v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.divided_by(v), c * e);
  }
  return out;
}

Poly Poly::fiber_degree_part(int d) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.degree(VarKind::fiber) == d) out.add_term(m, c);
  return out;
}

Rational Poly::evaluate(const std::map<Var, Rational>& values) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        throw std::invalid_argument("no value bound for variable " + v.name);
      t *= rational_pow(it->second, static_cast<unsigned long>(e));
    }
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::map<Var, Poly>& images) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t = constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      const Poly& image = (it == images.end()) ? variable(v) : it->second;
      t *= image.pow(static_cast<unsigned>(e));
    }
    out += t;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = m.to_string();
    if (mono.empty()) {
      out += rinehart::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rinehart::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace rinehart
