#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "heckeho/error.hpp"
#include "heckeho/gln.hpp"

using namespace heckeho;
using namespace heckeho::gln;
using ff::GaloisField;
using haff::TorusChar;
using weyl::build_spec;
using weyl::NodeSet;
using weyl::single;

namespace {

NodeSet nodes(std::initializer_list<int> ids) {
  NodeSet s = 0;
  for (int i : ids) s |= single(i);
  return s;
}

AffChar gl_char(const GroupSpec& spec, std::vector<std::vector<int>> exps, NodeSet J) {
  return haff::make_char(spec, TorusChar{std::move(exps), std::vector<int>(spec.torus_rank, 0)}, J);
}

// Rotation written out directly: position m of factor i moves to m + k_i.
std::pair<std::vector<int>, std::vector<std::vector<int>>> rotate(const GroupSpec& spec, const AffChar& chi,
                                                                    const std::vector<int>& k) {
  std::vector<int> bits(spec.node_count());
  std::vector<std::vector<int>> exps = chi.xi.exponents;
  exps.push_back(chi.xi.torus_exponents);
  for (int i = 0; i < spec.rank(); ++i) {
    const int n = spec.factors[i];
    for (int m = 0; m < n; ++m) {
      bits[spec.offset(i) + (m + k[i]) % n] = weyl::has_node(chi.J, spec.offset(i) + m);
      exps[i][(m + k[i]) % n] = chi.xi.exponents[i][m];
    }
  }
  return {bits, exps};
}

std::size_t brute_class_count(const GroupSpec& spec, const Field& field) {
  std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> classes;
  for (const auto& chi : haff::all_characters(spec)) {
    if (!haff::is_supersingular(spec, chi)) continue;
    auto best = rotate(spec, chi, std::vector<int>(spec.rank(), 0));
    for (const auto& k : rotations(spec.factors)) best = std::min(best, rotate(spec, chi, k));
    classes.insert(best);
  }
  std::size_t count = classes.size();
  for (int i = 0; i < spec.rank() + spec.torus_rank; ++i) count *= field->order() - 1;
  return count;
}

// Non-projective restricted characters per face, as a sorted list.
std::vector<std::pair<NodeSet, std::vector<std::vector<int>>>> stable_face_data(const SimpleSS& m,
                                                                                 const weyl::Face& f) {
  std::vector<std::pair<NodeSet, std::vector<std::vector<int>>>> out;
  for (const auto& c : restriction_decomposition(m))
    if (!haff::res_face_projective(m.spec, c, f)) out.emplace_back(c.J & f.nodes, c.xi.exponents);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("simple module construction") {
  auto f3 = GaloisField::make(3);
  auto g3 = build_spec({3}, 0, 3);
  auto m = build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({0, 1})), {1}, {}, f3);
  CHECK(m.dim() == 3);
  CHECK(m.d == std::vector<int>{3});
  auto g2 = build_spec({2}, 0, 3);
  CHECK(build_simple(g2, gl_char(g2, {{0, 0}}, nodes({0})), {1}, {}, f3).dim() == 2);
  CHECK_THROWS_AS(build_simple(g3, gl_char(g3, {{1, 1, 1}}, 0), {1}, {}, f3), DomainError);
  CHECK_THROWS_AS(build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({0})), {0}, {}, f3), DomainError);
  CHECK_THROWS_AS(build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({0})), {1, 1}, {}, f3), DomainError);
  auto g4 = build_spec({4}, 0, 3);
  CHECK(build_simple(g4, gl_char(g4, {{0, 0, 0, 0}}, nodes({0, 2})), {2}, {}, f3).dim() == 2);
}

TEST_CASE("restriction decomposition examples") {
  auto f3 = GaloisField::make(3);
  auto g3 = build_spec({3}, 0, 3);
  auto m = build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({0, 1})), {1}, {}, f3);
  auto parts = restriction_decomposition(m);
  std::set<NodeSet> js;
  for (const auto& c : parts) js.insert(c.J);
  CHECK(parts.size() == 3);
  CHECK(js == std::set<NodeSet>{nodes({0, 1}), nodes({1, 2}), nodes({0, 2})});
  auto g2 = build_spec({2}, 0, 3);
  auto parts2 = restriction_decomposition(build_simple(g2, gl_char(g2, {{0, 0}}, nodes({0})), {1}, {}, f3));
  REQUIRE(parts2.size() == 2);
  CHECK(parts2[0].J != parts2[1].J);
}

TEST_CASE("Mod isomorphism examples") {
  auto f5 = GaloisField::make(5);
  auto g3 = build_spec({3}, 0, 5);
  auto chi = gl_char(g3, {{1, 1, 1}}, nodes({0, 1}));
  auto m = build_simple(g3, chi, {2}, {}, f5);
  auto rotated = build_simple(g3, haff::conj_char(g3, chi, {1}), {2}, {}, f5);
  CHECK(mod_isomorphic(m, rotated));
  CHECK(conjugating_rotation(m, rotated) == std::vector<int>{1});
  CHECK_FALSE(mod_isomorphic(m, build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({1})), {2}, {}, f5)));
  CHECK_FALSE(mod_isomorphic(build_simple(g3, chi, {1}, {}, f5), m));
  CHECK(mod_isomorphic(m, m));
}

TEST_CASE("Ho isomorphism examples") {
  auto f3 = GaloisField::make(3);
  auto g3 = build_spec({3}, 0, 3);
  for (int a : {0, 1}) {
    auto big = gl_char(g3, {{a, a, a}}, nodes({0, 1}));
    auto small = gl_char(g3, {{a, a, a}}, nodes({1}));
    for (ff::Elem l : {1u, 2u})
      for (ff::Elem l2 : {1u, 2u}) {
        auto d = classify(build_simple(g3, big, {l}, {}, f3), build_simple(g3, small, {l2}, {}, f3));
        CHECK_FALSE(d.mod_iso);
        CHECK(d.ho_iso == (l == l2));
      }
  }
  auto m = build_simple(g3, gl_char(g3, {{1, 1, 1}}, nodes({0})), {1}, {}, f3);
  CHECK(ho_isomorphic(m, m));
  CHECK(is_exceptional_shape(g3));
  CHECK(is_exceptional_shape(build_spec({3, 2, 2}, 1, 3)));
  CHECK_FALSE(is_exceptional_shape(build_spec({4}, 0, 3)));
  CHECK_FALSE(is_exceptional_shape(build_spec({3, 3}, 0, 3)));
  auto g2 = build_spec({2}, 0, 3);
  auto fin = build_simple(g2, gl_char(g2, {{0, 0}}, nodes({0})), {1}, {}, f3);
  CHECK_THROWS_AS(classify(fin, fin), DomainError);
}

TEST_CASE("GL_4 never has exceptional pairs") {
  auto f3 = GaloisField::make(3);
  auto g4 = build_spec({4}, 0, 3);
  auto sims = enumerate_simples(g4, f3);
  for (const auto& a : sims)
    for (const auto& b : sims) {
      if (haff::has_finite_pd(g4, a.chi) || haff::has_finite_pd(g4, b.chi)) continue;
      auto d = classify(a, b);
      CHECK(d.ho_iso == d.mod_iso);
    }
}

TEST_CASE("enumeration counts match a brute orbit count") {
  for (auto [factors, torus, q, m] : std::vector<std::tuple<std::vector<int>, int, int, int>>{
           {{2}, 0, 3, 1}, {{3}, 0, 3, 1}, {{3}, 0, 5, 1}, {{2, 2}, 0, 3, 1}, {{4}, 0, 3, 2}, {{3, 2}, 0, 3, 1},
           {{2}, 1, 3, 1}}) {
    auto spec = build_spec(factors, torus, q);
    CAPTURE(spec.torus_rank);
    auto field = GaloisField::make(spec.p, m);
    auto sims = enumerate_simples(spec, field);
    CHECK(sims.size() == brute_class_count(spec, field));
    // Pairwise non-isomorphic.
    if (sims.size() < 200)
      for (std::size_t i = 0; i < sims.size(); ++i)
        for (std::size_t j = i + 1; j < sims.size(); ++j) CHECK_FALSE(mod_isomorphic(sims[i], sims[j]));
  }
  // GL_3 at q=3 with S_xi = S: 6 J-patterns fall into 2 classes for each of the 2 xi.
  auto g3 = build_spec({3}, 0, 3);
  std::size_t full = 0;
  for (const auto& s : enumerate_simples(g3, GaloisField::make(3)))
    full += haff::s_xi(g3, s.chi.xi) == g3.all_nodes();
  CHECK(full == 2 * 2 * 2);
  CHECK_THROWS_AS(enumerate_simples(build_spec({3, 2}, 0, 3), GaloisField::make(3, 2), 50), DomainError);
}

TEST_CASE("classifier invariants on enumerated modules") {
  for (auto factors : std::vector<std::vector<int>>{{3}, {4}, {3, 2}, {2, 2}}) {
    auto spec = build_spec(factors, 0, 3);
    auto field = GaloisField::make(3);
    auto sims = enumerate_simples(spec, field);
    std::erase_if(sims, [&](const SimpleSS& s) { return haff::has_finite_pd(spec, s.chi); });
    auto fs = weyl::faces(spec);
    for (const auto& a : sims) {
      std::size_t expect_dim = 1;
      for (int di : a.d) expect_dim *= di;
      CHECK(a.dim() == expect_dim);
      CHECK(classify(a, a).ho_iso);
      for (const auto& b : sims) {
        const auto ab = classify(a, b), ba = classify(b, a);
        CHECK(ab.mod_iso == ba.mod_iso);
        CHECK(ab.ho_iso == ba.ho_iso);
        if (ab.mod_iso) CHECK(ab.ho_iso);
        if (ab.ho_iso && !ab.mod_iso) {
          CHECK(haff::s_xi(spec, a.chi.xi) == spec.all_nodes());
          CHECK(is_exceptional_shape(spec));
          const NodeSet first = spec.factor_nodes(0);
          const int na = std::popcount(a.chi.J & first), nb = std::popcount(b.chi.J & first);
          CHECK(std::min(na, nb) == 1);
          CHECK(std::max(na, nb) == 2);
          for (const auto& f : fs) CHECK(stable_face_data(a, f) == stable_face_data(b, f));
        }
      }
    }
  }
}

TEST_CASE("rotation transversal") {
  CHECK(rotations({2, 3}).size() == 6);
  CHECK(rotations({2, 3})[1] == std::vector<int>{0, 1});
  CHECK(rotations({}).size() == 1);
}
