#pragma once

#include <string>
#include <vector>

#include "heckeho/weyl.hpp"

namespace heckeho::haff {

using weyl::AffineDynkin;
using weyl::Face;
using weyl::GroupSpec;
using weyl::NodeId;
using weyl::NodeSet;

// Character of the finite torus T(F_q) given by exponents modulo q-1: one
// tuple per GL factor (length n_i) and one exponent per torus coordinate.
struct TorusChar {
  std::vector<std::vector<int>> exponents;
  std::vector<int> torus_exponents;

  bool operator==(const TorusChar&) const = default;
  auto operator<=>(const TorusChar&) const = default;
};

// Character of the affine pro-p Iwahori Hecke algebra: T_t acts by xi(t),
// T_s by -1 for s in J and by 0 otherwise. J must lie in S_xi.
struct AffChar {
  TorusChar xi;
  NodeSet J = 0;

  int value(NodeId s) const { return weyl::has_node(J, s) ? -1 : 0; }
  bool operator==(const AffChar&) const = default;
  auto operator<=>(const AffChar&) const = default;
};

// Diagram-level view of a character, usable for any affine type where the
// torus data is only known through S_xi and an identity key for xi.
struct CharData {
  NodeSet s_xi = 0;
  NodeSet J = 0;
  std::vector<int> xi_key;

  bool operator==(const CharData&) const = default;
};

TorusChar normalize(const GroupSpec& spec, TorusChar xi);
// Validates shapes and J within S_xi; reduces exponents modulo q-1.
AffChar make_char(const GroupSpec& spec, TorusChar xi, NodeSet J);
// det^a on every GL factor, trivial on the extra torus.
TorusChar det_power(const GroupSpec& spec, const std::vector<int>& a);

NodeSet s_xi(const GroupSpec& spec, const TorusChar& xi);
CharData char_data(const GroupSpec& spec, const AffChar& chi);

bool is_supersingular(const AffineDynkin& d, const CharData& chi);
bool is_supersingular(const GroupSpec& spec, const AffChar& chi);

// Finite projective dimension of the simple supersingular modules built on chi.
bool has_finite_pd(const AffineDynkin& d, const CharData& chi);
bool has_finite_pd(const GroupSpec& spec, const AffChar& chi);

// Projectivity of the restriction of chi to the finite Hecke algebra of F.
bool res_face_projective(const AffineDynkin& d, const CharData& chi, const Face& f);
bool res_face_projective(const GroupSpec& spec, const AffChar& chi, const Face& f);

struct HoDeltaHom {
  int dim = 0;
  bool contains_iso = false;
};

// Morphisms between two distinct supersingular characters of infinite
// projective dimension in the homotopy category of the affine algebra.
HoDeltaHom ho_delta_hom(const AffineDynkin& d, const CharData& a, const CharData& b);
HoDeltaHom ho_delta_hom(const GroupSpec& spec, const AffChar& a, const AffChar& b);

// Rotate factor i by rotation[i]: node s_{i,j} of J moves to s_{i,j+k} and
// exponents shift along with the nodes.
AffChar conj_char(const GroupSpec& spec, const AffChar& chi, const std::vector<int>& rotation);

// d_i = least k > 0 with rotation of factor i alone fixing chi.
std::vector<int> stabilizer(const GroupSpec& spec, const AffChar& chi);

// Every valid character (any xi, every J within S_xi), in a fixed order.
std::vector<AffChar> all_characters(const GroupSpec& spec, std::size_t cap = 1000000);

std::string describe(const GroupSpec& spec, const AffChar& chi);
// Compact form without commas or spaces: J bits per factor, then exponents.
std::string label(const GroupSpec& spec, const AffChar& chi);

}  // namespace heckeho::haff
