#include "rinehart/presets.hpp"

namespace rinehart {
namespace presets {
namespace {

Poly var(const char* name, VarKind kind) { return Poly::variable(Var{name, kind}); }

/// Alternating structure constants on three generators: [e_i, e_j] = ε_ijk e_k.
StructureTensor so3_structure() {
  StructureTensor c(3, std::vector<std::vector<Poly>>(3, std::vector<Poly>(3, Poly::zero())));
  c[0][1][2] = Poly::one();
  c[1][0][2] = -Poly::one();
  c[1][2][0] = Poly::one();
  c[2][1][0] = -Poly::one();
  c[2][0][1] = Poly::one();
  c[0][2][1] = -Poly::one();
  return c;
}

std::vector<std::vector<std::vector<Rational>>> so3_constants() {
  std::vector<std::vector<std::vector<Rational>>> c(
      3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  c[1][2][0] = 1;
  c[2][1][0] = -1;
  c[2][0][1] = 1;
  c[0][2][1] = -1;
  return c;
}

LieRinehartPresentation abelian_translations(const std::vector<std::string>& base_names) {
  std::vector<std::vector<Poly>> anchor(base_names.size(),
                                        std::vector<Poly>(base_names.size(), Poly::zero()));
  for (std::size_t j = 0; j < base_names.size(); ++j) anchor[j][j] = Poly::one();
  std::vector<std::string> fiber_names;
  for (std::size_t j = 0; j < base_names.size(); ++j) {
    fiber_names.push_back("e" + std::to_string(j + 1));
  }
  return make_presentation("translations", base_names, fiber_names, anchor, {});
}

LieRinehartPresentation central_line(const std::vector<std::string>& base_names,
                                     const std::vector<std::string>& fiber_names) {
  return make_presentation("central", base_names, fiber_names,
                           std::vector<std::vector<Poly>>(
                               fiber_names.size(), std::vector<Poly>(base_names.size(), Poly::zero())),
                           {});
}

}  // namespace

LieRinehartPresentation vect_line() {
  return make_presentation("vect_line", {"x"}, {"e"}, {{Poly::one()}}, {});
}

LieRinehartPresentation rotation_plane() {
  return make_presentation("rotation_plane", {"x", "y"}, {"e"},
                           {{var("y", VarKind::base), -var("x", VarKind::base)}}, {});
}

LieRinehartPresentation so3() {
  return make_presentation("so3", {}, {"e1", "e2", "e3"}, {}, so3_structure());
}

LieRinehartPresentation so3_mutant() {
  StructureTensor c = so3_structure();
  c[0][1][2] = Poly::zero();
  c[1][0][2] = Poly::zero();
  c[0][1][0] = Poly::one();
  c[1][0][0] = -Poly::one();
  return make_presentation("so3_mutant", {}, {"e1", "e2", "e3"}, {}, c);
}

LieRinehartPresentation anchor_mutant() {
  return make_presentation(
      "anchor_mutant", {"x1", "x2"}, {"e1", "e2"},
      {{Poly::one(), Poly::zero()}, {var("x1", VarKind::base), Poly::zero()}}, {});
}

ExtensionData heisenberg_extension() {
  ExtensionData ext;
  ext.name = "heisenberg";
  ext.l_prime = central_line({"x1", "x2"}, {"c"});
  ext.l_double_prime = abelian_translations({"x1", "x2"});
  ext.nabla.assign(2, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly::zero())));
  ext.omega.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(1, Poly::zero())));
  ext.omega[0][1][0] = Poly::one();
  ext.omega[1][0][0] = -Poly::one();
  validate_extension(ext);
  return ext;
}

ExtensionData direct_product_extension() {
  ExtensionData ext = heisenberg_extension();
  ext.name = "direct_product";
  ext.omega[0][1][0] = Poly::zero();
  ext.omega[1][0][0] = Poly::zero();
  return ext;
}

ExtensionData atiyah_shadow() {
  ExtensionData ext;
  ext.name = "atiyah_shadow";
  ext.l_prime = make_presentation(
      "so3_vertical", {"x1", "x2"}, {"c1", "c2", "c3"},
      std::vector<std::vector<Poly>>(3, std::vector<Poly>(2, Poly::zero())), so3_structure());
  ext.l_double_prime = abelian_translations({"x1", "x2"});
  ext.nabla.assign(2, std::vector<std::vector<Poly>>(3, std::vector<Poly>(3, Poly::zero())));
  ext.omega.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(3, Poly::zero())));
  validate_extension(ext);
  return ext;
}

ExtensionData nonclosed_curvature_mutant() {
  ExtensionData ext;
  ext.name = "nonclosed_curvature";
  ext.l_prime = central_line({"x1", "x2", "x3"}, {"c"});
  ext.l_double_prime = abelian_translations({"x1", "x2", "x3"});
  ext.nabla.assign(3, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly::zero())));
  ext.omega.assign(3, std::vector<std::vector<Poly>>(3, std::vector<Poly>(1, Poly::zero())));
  ext.omega[0][1][0] = var("x3", VarKind::base);
  ext.omega[1][0][0] = -var("x3", VarKind::base);
  validate_extension(ext);
  return ext;
}

ExtensionData closed_curvature_rank_two() {
  ExtensionData ext;
  ext.name = "closed_curvature_rank_two";
  ext.l_prime = central_line({"x1", "x2"}, {"c"});
  ext.l_double_prime = abelian_translations({"x1", "x2"});
  ext.nabla.assign(2, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly::zero())));
  ext.omega.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(1, Poly::zero())));
  ext.omega[0][1][0] = var("x1", VarKind::base);
  ext.omega[1][0][0] = -var("x1", VarKind::base);
  validate_extension(ext);
  return ext;
}

ReductivePair so3_so2() {
  LieAlgebra g;
  g.name = "so3";
  g.basis_names = {"e1", "e2", "e3"};
  g.structure = so3_constants();
  return make_reductive_pair("so3_so2", g, {2}, {0, 1});
}

ReductivePair double_so3() {
  // Basis: diagonal f_i = (e_i, e_i) first, antidiagonal a_i = (e_i, −e_i)
  // after. Then [f_i, f_j] = ε f_k, [f_i, a_j] = ε a_k, [a_i, a_j] = ε f_k.
  LieAlgebra g;
  g.name = "so3_double";
  g.basis_names = {"f1", "f2", "f3", "a1", "a2", "a3"};
  auto eps = so3_constants();
  g.structure.assign(6, std::vector<std::vector<Rational>>(6, std::vector<Rational>(6, 0)));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        g.structure[i][j][k] = eps[i][j][k];
        g.structure[i][3 + j][3 + k] = eps[i][j][k];
        g.structure[3 + i][j][3 + k] = eps[i][j][k];
        g.structure[3 + i][3 + j][k] = eps[i][j][k];
      }
    }
  }
  return make_reductive_pair("gxg_so3", g, {0, 1, 2}, {3, 4, 5});
}

ReductivePair borel_pair() {
  LieAlgebra g;
  g.name = "borel2";
  g.basis_names = {"t", "n"};
  g.structure.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
  g.structure[0][1][1] = 1;   // [t, n] = n
  g.structure[1][0][1] = -1;
  return make_reductive_pair("borel", g, {1}, {0});
}

}  // namespace presets
}  // namespace rinehart
