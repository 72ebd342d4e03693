#pragma once

#include <compare>
#include <string>

namespace rinehart {

/// Base variables generate the coefficient algebra A; fiber variables are the
/// module generators adjoined to it in the symmetric algebra.
enum class VarKind { base, fiber };

/// Named polynomial generator. The total order (base before fiber, then by
/// name) is what every canonical form in the toolkit is pinned to.
struct Var {
  std::string name;
  VarKind kind = VarKind::base;

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.name <=> b.name;
  }
};

inline Var base_var(std::string name) { return Var{std::move(name), VarKind::base}; }
inline Var fiber_var(std::string name) { return Var{std::move(name), VarKind::fiber}; }

}  // namespace rinehart
