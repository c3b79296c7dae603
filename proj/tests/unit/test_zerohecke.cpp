#include <doctest.h>

#include "heckeho/error.hpp"
#include "heckeho/zerohecke.hpp"

using namespace heckeho;
using namespace heckeho::zerohecke;
using ff::FFMatrix;
using ff::GaloisField;
using weyl::CoxeterType;
using weyl::NodeSet;

namespace {

// Irreducible components of the Coxeter graph as generator bitmasks.
std::vector<NodeSet> components(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int s = 0; s < n; ++s) {
    if (weyl::has_node(seen, s)) continue;
    NodeSet comp = weyl::single(s);
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (weyl::has_node(comp, a) && !weyl::has_node(comp, b) && cartan[a][b] != 0) {
            comp |= weyl::single(b);
            grew = true;
          }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

int bond_order(const std::vector<std::vector<int>>& c, int s, int t) {
  switch (c[s][t] * c[t][s]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

FFMatrix alternating(const FFMatrix& a, const FFMatrix& b, int len) {
  FFMatrix out = FFMatrix::identity(a.field(), a.rows());
  for (int k = 0; k < len; ++k) out = out * (k % 2 ? b : a);
  return out;
}

const std::vector<const char*> small_types = {"A1", "A2", "B2", "G2", "A1xA1", "A2xA1"};

}  // namespace

TEST_CASE("zero Hecke dimensions and the A1 matrix") {
  auto f = GaloisField::make(3);
  CHECK(build_zero_hecke(CoxeterType::parse("A2"), f).algebra->dim == 6);
  CHECK(build_zero_hecke(CoxeterType::parse("G2"), f).algebra->dim == 12);
  auto a1 = build_zero_hecke(CoxeterType::parse("A1"), f);
  CHECK(a1.algebra->dim == 2);
  CHECK(a1.algebra->gen_action[0] == FFMatrix::from_ints(f, {{0, 1}, {0, -1}}));
  CHECK(a1.algebra->gen_names == std::vector<std::string>{"H1"});
}

TEST_CASE("quadratic and braid relations hold as matrices") {
  auto f = GaloisField::make(3);
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "A2xA1"}) {
    auto z = build_zero_hecke(CoxeterType::parse(t), f);
    const auto& gens = z.algebra->gen_action;
    const auto& c = z.group.cartan();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      CHECK(gens[s] * gens[s] == gens[s].scaled(f->neg(1)));
      for (std::size_t u = s + 1; u < gens.size(); ++u) {
        const int m = bond_order(c, static_cast<int>(s), static_cast<int>(u));
        CHECK(alternating(gens[s], gens[u], m) == alternating(gens[u], gens[s], m));
      }
    }
  }
}

TEST_CASE("character modules") {
  auto f = GaloisField::make(3);
  auto a2 = build_zero_hecke(CoxeterType::parse("A2"), f);
  auto triv = character_module(a2, 0);
  CHECK(triv.action(0)(0, 0) == 0u);
  CHECK(triv.action(1)(0, 0) == 0u);
  auto sign = character_module(a2, 0b11);
  CHECK(sign.action(0)(0, 0) == 2u);
  CHECK(sign.action(1)(0, 0) == 2u);
  auto one = character_module(a2, 0b01);
  CHECK(one.action(0)(0, 0) == 2u);
  CHECK(one.action(1)(0, 0) == 0u);
  // Values that break the quadratic relation are rejected.
  CHECK_THROWS_AS(character_module(a2.algebra, {1, 0}), DomainError);
}

TEST_CASE("hom spaces") {
  auto f = GaloisField::make(3);
  auto a1 = build_zero_hecke(CoxeterType::parse("A1"), f);
  auto reg = regular_module(a1.algebra);
  CHECK(hom_dim(reg, reg) == 2);
  CHECK(hom_space(reg, reg).rows() == 2);
  CHECK(hom_space(reg, reg).cols() == 4);
  auto triv = character_module(a1, 0);
  auto sign = character_module(a1, 1);
  CHECK(hom_dim(triv, triv) == 1);
  CHECK(hom_dim(triv, sign) == 0);
  // Every basis element intertwines.
  for (const auto& phi : hom_basis(reg, triv))
    for (std::size_t g = 0; g < reg.gen_names().size(); ++g)
      CHECK(reg.action(g) * phi == phi * triv.action(g));
}

TEST_CASE("projectivity examples") {
  auto f = GaloisField::make(3);
  auto a2 = build_zero_hecke(CoxeterType::parse("A2"), f);
  CHECK(is_projective(character_module(a2, 0)));
  CHECK(is_projective(character_module(a2, 0b11)));
  CHECK_FALSE(is_projective(character_module(a2, 0b01)));
  CHECK_FALSE(is_projective(character_module(a2, 0b10)));
  CHECK(is_projective(regular_module(a2.algebra)));
}

TEST_CASE("characters: count, distinctness, projectivity, stable hom") {
  auto f = GaloisField::make(3);
  for (const char* t : small_types) {
    CAPTURE(t);
    auto z = build_zero_hecke(CoxeterType::parse(t), f);
    const int rank = z.group.rank();
    const auto comps = components(z.group.cartan());
    std::vector<HModule> chars;
    for (NodeSet l = 0; l < (NodeSet{1} << rank); ++l) chars.push_back(character_module(z, l));
    CHECK(chars.size() == (std::size_t{1} << rank));
    for (NodeSet l = 0; l < chars.size(); ++l) {
      bool expect = true;
      for (NodeSet c : comps) expect = expect && ((l & c) == 0 || (l & c) == c);
      const bool proj = is_projective(chars[l]);
      CHECK(proj == expect);
      for (NodeSet k = 0; k < chars.size(); ++k) {
        const auto hom = hom_dim(chars[l], chars[k]);
        const auto st = stable_hom_dim(chars[l], chars[k]);
        CHECK(hom == (l == k ? 1u : 0u));
        CHECK(st <= hom);
        CHECK(st == (l == k && !proj ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("stable hom out of a projective vanishes") {
  auto f = GaloisField::make(3);
  auto b2 = build_zero_hecke(CoxeterType::parse("B2"), f);
  auto reg = regular_module(b2.algebra);
  for (NodeSet l = 0; l < 4; ++l) CHECK(stable_hom_dim(reg, character_module(b2, l)) == 0);
}

TEST_CASE("direct sums") {
  auto f = GaloisField::make(3);
  auto a2 = build_zero_hecke(CoxeterType::parse("A2"), f);
  for (NodeSet a = 0; a < 4; ++a)
    for (NodeSet b = 0; b < 4; ++b) {
      auto m = character_module(a2, a), n = character_module(a2, b);
      auto sum = direct_sum(m, n);
      CHECK(sum.dim() == 2);
      CHECK(is_projective(sum) == (is_projective(m) && is_projective(n)));
    }
  CHECK(is_projective(direct_sum(regular_module(a2.algebra), character_module(a2, 0))));
}

TEST_CASE("tensor products") {
  auto f = GaloisField::make(3);
  auto x = build_zero_hecke(CoxeterType::parse("A1"), f, {"X"});
  auto y = build_zero_hecke(CoxeterType::parse("A1"), f, {"Y"});
  auto xy = build_zero_hecke(CoxeterType::parse("A1xA1"), f, {"X", "Y"});
  auto triv = tensor_module(character_module(x, 0), character_module(y, 0), xy.algebra);
  CHECK(triv.dim() == 1);
  CHECK(hom_dim(triv, character_module(xy, 0)) == 1);
  auto mixed = tensor_module(character_module(x, 1), character_module(y, 0), xy.algebra);
  CHECK(hom_dim(mixed, character_module(xy, 0b01)) == 1);
  auto reg = tensor_module(regular_module(x.algebra), regular_module(y.algebra));
  CHECK(reg.dim() == 4);
  CHECK(is_projective(reg));
  CHECK(tensor_algebra(x.algebra, y.algebra)->dim == 4);
  auto other = build_zero_hecke(CoxeterType::parse("A1"), f, {"X"});
  CHECK_THROWS_AS(tensor_module(character_module(x, 0), character_module(other, 0)), DomainError);
}

TEST_CASE("group cap") {
  auto f = GaloisField::make(3);
  CHECK_THROWS_AS(build_zero_hecke(CoxeterType::parse("A4"), f, {}, 100), DomainError);
}
