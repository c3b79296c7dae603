#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "heckeho/ff.hpp"
#include "heckeho/weyl.hpp"

namespace heckeho::zerohecke {

using ff::FFMatrix;
using ff::Field;

// A finite-dimensional algebra given by its right regular representation on
// generators. Vectors are rows; basis element b times generator g is row b of
// gen_action[g]. The product of all relations is implicit in those matrices.
struct FiniteAlgebra {
  Field field;
  std::size_t dim = 0;
  std::size_t unit = 0;  // basis index of the identity
  std::vector<std::string> gen_names;
  std::vector<FFMatrix> gen_action;
  std::string label;

  int gen_index(const std::string& name) const;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Right module on row vectors. When a parent algebra is attached the action
// is checked against it at construction; a module without parent is a
// representation of a generator set whose relations are checked elsewhere.
class HModule {
 public:
  HModule(AlgebraPtr parent, std::vector<FFMatrix> actions);
  HModule(Field field, std::vector<std::string> gen_names, std::vector<FFMatrix> actions);

  const AlgebraPtr& parent() const { return parent_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& gen_names() const { return names_; }
  const std::vector<FFMatrix>& actions() const { return actions_; }
  const FFMatrix& action(std::size_t g) const { return actions_.at(g); }

 private:
  AlgebraPtr parent_;
  Field field_;
  std::vector<std::string> names_;
  std::vector<FFMatrix> actions_;
  std::size_t dim_ = 0;
};

struct ZeroHeckeAlg {
  weyl::CoxeterGroup group;
  AlgebraPtr algebra;
};

inline constexpr std::size_t default_group_cap = 1024;

// 0-Hecke algebra with H_s^2 = -H_s. Basis H_w indexed like group elements.
// Generators are named "H1".."Hn" unless names are supplied.
ZeroHeckeAlg build_zero_hecke(const weyl::CoxeterGroup& group, Field field,
                              std::vector<std::string> names = {},
                              std::size_t cap = default_group_cap);
ZeroHeckeAlg build_zero_hecke(const weyl::CoxeterType& type, Field field,
                              std::vector<std::string> names = {},
                              std::size_t cap = default_group_cap);

// H_s acts by -1 for s in subset, else by 0. Bit g of subset is generator g.
HModule character_module(const ZeroHeckeAlg& alg, weyl::NodeSet subset);
HModule character_module(const AlgebraPtr& alg, const std::vector<ff::Elem>& values);
HModule regular_module(const AlgebraPtr& alg);
HModule direct_sum(const HModule& m, const HModule& n);

// Intertwiners M -> N as dim(M) x dim(N) matrices F with X_M(g) F = F X_N(g).
std::vector<FFMatrix> hom_basis(const HModule& m, const HModule& n);
// The same space with every intertwiner flattened row-major into one row.
FFMatrix hom_space(const HModule& m, const HModule& n);
std::size_t hom_dim(const HModule& m, const HModule& n);

bool is_projective(const HModule& m);
// dim Hom(M, N) minus the dimension of maps factoring through a projective.
std::size_t stable_hom_dim(const HModule& m, const HModule& n);

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
HModule tensor_module(const HModule& m, const HModule& n);
// Outer tensor product as a module over a target algebra whose generator names
// are the union of the two factors' generator names.
HModule tensor_module(const HModule& m, const HModule& n, const AlgebraPtr& target);

}  // namespace heckeho::zerohecke
