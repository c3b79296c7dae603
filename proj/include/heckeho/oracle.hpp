#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heckeho/ff.hpp"
#include "heckeho/gln.hpp"
#include "heckeho/haff.hpp"
#include "heckeho/weyl.hpp"
#include "heckeho/zerohecke.hpp"

namespace heckeho::oracle {

using ff::Elem;
using ff::FFMatrix;
using ff::Field;
using haff::AffChar;
using haff::TorusChar;
using weyl::Face;
using weyl::GroupSpec;
using weyl::NodeId;
using zerohecke::AlgebraPtr;
using zerohecke::HModule;

// Monomial matrix over F_p((pi)) with pi formal: column j sends e_j to
// coeff[j] * pi^val[j] * e_{row[j]}. Coefficients are residues in [1, p).
struct MonomialMatrix {
  int p = 0;
  std::vector<int> row;
  std::vector<int> coeff;
  std::vector<int> val;

  static MonomialMatrix identity(int size, int p);
  int size() const { return static_cast<int>(row.size()); }
  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  bool is_diagonal() const;
  // Diagonal with every pi-exponent zero, i.e. an element of T(F_p).
  bool is_torus() const;
  bool operator==(const MonomialMatrix&) const = default;
  std::string to_string() const;
};

// alpha_s^vee(x) puts x at .first and x^{-1} at .second.
std::pair<int, int> coroot_slots(const GroupSpec& spec, NodeId s);

struct Lifts {
  GroupSpec spec;
  std::vector<MonomialMatrix> reflection;   // per node
  std::vector<MonomialMatrix> omega;        // per GL factor
  std::vector<MonomialMatrix> torus_omega;  // per extra torus coordinate
  // omega_i s omega_i^{-1} = rotation_correction[s] * (rotated s), s in factor i.
  std::vector<MonomialMatrix> rotation_correction;

  MonomialMatrix coroot(NodeId s, int x) const;
  // Diagonal matrix with residue x at coordinate k.
  MonomialMatrix torus_unit(int k, int x) const;
};

// Builds the lifts and asserts the group identities; throws DomainError with
// the failure list when any identity breaks.
Lifts build_lifts(const GroupSpec& spec);
std::vector<std::string> lift_failures(const Lifts& lifts);

// Generator matrices of some representation of the affine Hecke algebra part:
// torus[j] is T of diag(g at coordinate j) for the fixed generator g of F_p^x.
struct HeckeGens {
  Field field;
  std::size_t dim = 0;
  std::vector<FFMatrix> torus;
  std::vector<std::pair<NodeId, FFMatrix>> reflection;
};

// Torus relations, s t s^{-1}, quadratic and braid relations.
std::vector<std::string> affine_relation_failures(const Lifts& lifts, const HeckeGens& gens);

inline constexpr std::size_t default_face_cap = 4096;

// Parahoric algebra of a face with basis T_{t w-hat}, t in T(F_p), w in W_F.
// Generators are "t1".."tN" followed by the face nodes by name.
class BruteFaceAlg {
 public:
  static BruteFaceAlg build(const GroupSpec& spec, const Face& face, Field field,
                            std::size_t cap = default_face_cap);

  const GroupSpec& spec() const { return lifts_.spec; }
  const Face& face() const { return face_; }
  const Lifts& lifts() const { return lifts_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t dim() const { return torus_size_ * group_size_; }
  std::size_t torus_size() const { return torus_size_; }
  std::size_t group_size() const { return group_size_; }

  // Right multiplication by T_t, t given by exponents of the generator of F_p^x.
  FFMatrix torus_action(const std::vector<int>& exps) const;
  const FFMatrix& reflection_action(NodeId s) const;
  // Right multiplication by e_xi.
  FFMatrix central_idempotent(const TorusChar& xi) const;
  HModule character(const AffChar& chi) const;
  HeckeGens gens() const;

  // Defining relations plus the e_xi identities for every xi with S_F in S_xi.
  std::vector<std::string> relation_failures() const;

 private:
  BruteFaceAlg() = default;
  std::size_t torus_index(const std::vector<int>& exps) const;
  std::vector<int> torus_exps(std::size_t index) const;
  std::vector<int> conj(std::size_t w, const std::vector<int>& exps) const;
  Elem xi_value(const TorusChar& xi, const std::vector<int>& exps) const;

  Lifts lifts_;
  Face face_;
  Field field_;
  Field prime_;
  AlgebraPtr algebra_;
  std::vector<NodeId> nodes_;
  std::vector<MonomialMatrix> hats_;
  std::size_t torus_size_ = 0;
  std::size_t group_size_ = 0;
  int coords_ = 0;
};

bool brute_res_projective(const BruteFaceAlg& alg, const AffChar& chi);
bool brute_res_projective(const GroupSpec& spec, const AffChar& chi, const Face& face, Field field);
std::size_t brute_stable_hom(const BruteFaceAlg& alg, const AffChar& a, const AffChar& b);
std::size_t brute_stable_hom(const GroupSpec& spec, const AffChar& a, const AffChar& b, const Face& face,
                             Field field);

// Explicit model of a simple supersingular module on the basis v_k, k in the
// rotation transversal. Generators: t1..tN, every node, w<i>, w<i>^-1, u<j>, u<j>^-1.
struct ModuleModel {
  gln::SimpleSS source;
  Lifts lifts;
  std::vector<std::vector<int>> basis;
  HModule module;
};

ModuleModel brute_module_model(const gln::SimpleSS& m);
std::vector<std::string> model_relation_failures(const ModuleModel& model);
bool brute_mod_isomorphic(const ModuleModel& a, const ModuleModel& b);
bool brute_mod_isomorphic(const gln::SimpleSS& a, const gln::SimpleSS& b);

struct OracleRow {
  std::string instance;
  std::string predicate;
  std::string oracle;
  bool agree = true;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  std::vector<std::string> warnings;

  std::size_t disagreements() const;
  bool all_agree() const { return disagreements() == 0; }
  void append(OracleReport other);
};

inline constexpr std::size_t default_sweep_cap = 200000;

// Each sweep stops with a warning once it has produced cap rows.
OracleReport projectivity_sweep(const GroupSpec& spec, Field field, std::size_t cap = default_sweep_cap);
OracleReport stable_hom_sweep(const GroupSpec& spec, Field field, std::size_t cap = default_sweep_cap);
OracleReport relation_sweep(const GroupSpec& spec, Field field, std::size_t cap = default_sweep_cap);
OracleReport module_sweep(const GroupSpec& spec, Field field, std::size_t cap = default_sweep_cap);
OracleReport oracle_check(const GroupSpec& spec, Field field, std::size_t cap = default_sweep_cap);

std::string face_label(const GroupSpec& spec, const Face& face);

}  // namespace heckeho::oracle
