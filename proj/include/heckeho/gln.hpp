#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckeho/ff.hpp"
#include "heckeho/haff.hpp"

namespace heckeho::gln {

using ff::Elem;
using ff::Field;
using haff::AffChar;
using weyl::GroupSpec;

// Simple supersingular module built from a supersingular character chi and a
// one-dimensional representation of its stabilizer: omega_i^{d_i} acts by
// lambda[i], the torus lifts by nu[j].
struct SimpleSS {
  GroupSpec spec;
  AffChar chi;
  std::vector<Elem> lambda;
  std::vector<Elem> nu;
  Field field;
  std::vector<int> d;

  std::size_t dim() const;
  // Compact identifier without commas or spaces, stable across runs.
  std::string label() const;
};

SimpleSS build_simple(const GroupSpec& spec, const AffChar& chi, std::vector<Elem> lambda,
                      std::vector<Elem> nu, Field field);

// Every rotation vector k with 0 <= k_i < bound[i], first factor slowest.
std::vector<std::vector<int>> rotations(const std::vector<int>& bound);

std::vector<AffChar> restriction_decomposition(const SimpleSS& m);

// Rotation k with conj_char(m.chi, k) = m'.chi and matching scalars.
std::optional<std::vector<int>> conjugating_rotation(const SimpleSS& m, const SimpleSS& other);
bool mod_isomorphic(const SimpleSS& m, const SimpleSS& other);

bool is_exceptional_shape(const GroupSpec& spec);

struct Decision {
  bool mod_iso = false;
  bool ho_iso = false;
  std::string witness;
};

// Both decisions with a readable witness. Rejects modules of finite
// projective dimension.
Decision classify(const SimpleSS& m, const SimpleSS& other);
bool ho_isomorphic(const SimpleSS& m, const SimpleSS& other);

// Lexicographically least rotation of chi, comparing J bits then exponents.
AffChar canonical_rotation(const GroupSpec& spec, const AffChar& chi);
std::vector<int> chi_key(const GroupSpec& spec, const AffChar& chi);

inline constexpr std::size_t default_simple_cap = 100000;

// One module per isomorphism class, chi supersingular, all scalar choices.
std::vector<SimpleSS> enumerate_simples(const GroupSpec& spec, Field field,
                                        std::size_t cap = default_simple_cap);

}  // namespace heckeho::gln
