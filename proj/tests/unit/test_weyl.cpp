#include <doctest.h>

#include <algorithm>
#include <set>

#include "heckeho/error.hpp"
#include "heckeho/weyl.hpp"

using namespace heckeho;
using namespace heckeho::weyl;

namespace {

// Independent face count: subsets that miss a node in every factor.
std::size_t brute_face_count(const std::vector<int>& factors) {
  int total = 0;
  for (int n : factors) total += n;
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    int off = 0;
    bool ok = true;
    for (int n : factors) {
      const unsigned part = (mask >> off) & ((1u << n) - 1);
      ok = ok && part != (1u << n) - 1;
      off += n;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("build_spec examples") {
  auto a = build_spec({3}, 0, 3);
  CHECK(a.node_count() == 3);
  CHECK(a.p == 3);
  auto b = build_spec({2, 2}, 1, 5);
  CHECK(b.node_count() == 4);
  CHECK(b.p == 5);
  auto c = build_spec({2, 3}, 0, 4);
  CHECK(c.factors == std::vector<int>{3, 2});
  CHECK(c.node_count() == 5);
  CHECK(c.p == 2);
  CHECK(c.f == 2);
  CHECK(c.node_name(3) == "s2.0");
  CHECK(c.parse_node("s1.2") == 2);
  CHECK(c.torus_dim() == 5);
}

TEST_CASE("build_spec errors") {
  CHECK_THROWS_AS(build_spec({3}, 0, 6), DomainError);
  CHECK_THROWS_AS(build_spec({1}, 0, 3), DomainError);
  CHECK_THROWS_AS(build_spec({3}, -1, 3), DomainError);
  CHECK_THROWS_AS(build_spec({3}, 0, 3).parse_node("s2.0"), DomainError);
}

TEST_CASE("affine diagram of GL factors") {
  auto d = affine_dynkin(build_spec({3, 2}, 0, 3));
  CHECK(d.component_count() == 2);
  CHECK(d.bond(0, 1) == 3);
  CHECK(d.bond(0, 2) == 3);
  CHECK(d.bond(3, 4) == 0);
  CHECK(d.bond(0, 3) == 2);
  auto d4 = affine_dynkin(build_spec({4}, 0, 3));
  CHECK(d4.bond(0, 2) == 2);
  CHECK(d4.bond(3, 0) == 3);
}

TEST_CASE("static affine tables") {
  // Node counts, and the bond order multiset of the attachments.
  CHECK(affine_dynkin('A', 1).bond(0, 1) == 0);
  CHECK(affine_dynkin('B', 3).node_count() == 4);
  CHECK(affine_dynkin('C', 2).bond(0, 1) == 4);
  CHECK(affine_dynkin('G', 2).bond(1, 2) == 6);
  CHECK(affine_dynkin('G', 2).bond(0, 2) == 3);
  CHECK(affine_dynkin('E', 8).bond(0, 8) == 3);
  CHECK(affine_dynkin('F', 4).bond(0, 1) == 3);
  CHECK(affine_dynkin('D', 4).bond(0, 2) == 3);
  // Removing any node of an untwisted affine diagram leaves a finite type.
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 5}, {'E', 6}, {'E', 7},
                                                        {'F', 4}, {'G', 2}}) {
    auto d = affine_dynkin(t, r);
    for (NodeId s = 0; s < d.node_count(); ++s) {
      const NodeSet rest = d.all_nodes() & ~single(s);
      CHECK_NOTHROW(classify_cartan(sub_cartan(d, rest)));
    }
    // The finite part is the type itself.
    CHECK(classify_cartan(sub_cartan(d, d.all_nodes() & ~single(0))).str() ==
          std::string(1, t) + std::to_string(r));
  }
}

TEST_CASE("face enumeration") {
  auto g2 = build_spec({2}, 0, 3);
  auto f = faces(g2);
  REQUIRE(f.size() == 3);
  CHECK(f[0].nodes == 0u);
  CHECK(f[1].nodes == single(0));
  CHECK(f[2].nodes == single(1));
  for (auto factors : std::vector<std::vector<int>>{{3}, {2, 2}, {4}, {3, 2}, {2, 2, 2}, {5}}) {
    const auto spec = build_spec(factors, 0, 3);
    std::size_t product = 1;
    for (int n : factors) product *= (1u << n) - 1;
    CHECK(faces(spec).size() == brute_face_count(factors));
    CHECK(faces(spec).size() == product);
  }
  CHECK(faces(build_spec({3}, 0, 3)).size() == 7);
  CHECK(faces(build_spec({2, 2}, 0, 3)).size() == 9);
}

TEST_CASE("closure order") {
  auto spec = build_spec({3}, 0, 3);
  auto a = make_face(spec, single(0));
  auto b = make_face(spec, single(0) | single(1));
  auto c = make_face(spec, single(1));
  CHECK(closure_leq(a, b));
  CHECK_FALSE(closure_leq(a, c));
  CHECK(closure_leq(a, a));
  CHECK_THROWS_AS(closure_leq(a, make_face(build_spec({2}, 0, 3), 0)), DomainError);
  CHECK_THROWS_AS(make_face(spec, spec.all_nodes()), DomainError);
  // Partial order on all faces of GL_2 x GL_2.
  auto fs = faces(build_spec({2, 2}, 0, 3));
  for (const auto& x : fs)
    for (const auto& y : fs) {
      if (closure_leq(x, y) && closure_leq(y, x)) CHECK(x == y);
      for (const auto& z : fs)
        if (closure_leq(x, y) && closure_leq(y, z)) CHECK(closure_leq(x, z));
    }
}

TEST_CASE("omega rotation") {
  auto g3 = build_spec({3}, 0, 3);
  CHECK(omega_rotate(g3, 0, 1, 0) == 1);
  CHECK(omega_rotate(g3, 0, 3, 2) == 2);
  CHECK(omega_rotate(g3, 0, -1, 0) == 2);
  auto g2 = build_spec({2}, 0, 3);
  CHECK(omega_rotate(g2, 0, 1, 0) == 1);
  CHECK(omega_rotate(g2, 0, 1, 1) == 0);
  auto mixed = build_spec({3, 2}, 0, 3);
  CHECK_THROWS_AS(omega_rotate(mixed, 0, 1, 3), DomainError);
  // Bonds are preserved.
  auto d = affine_dynkin(mixed);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 4; ++k)
      for (NodeId s : nodes_of(mixed.factor_nodes(i)))
        for (NodeId t : nodes_of(mixed.factor_nodes(i)))
          CHECK(d.bond(omega_rotate(mixed, i, k, s), omega_rotate(mixed, i, k, t)) == d.bond(s, t));
}

TEST_CASE("finite Coxeter groups") {
  auto a2 = enumerate_coxeter(CoxeterType::parse("A2"));
  CHECK(a2.size() == 6);
  CHECK(a2.length(a2.longest()) == 3);
  auto b2 = enumerate_coxeter(CoxeterType::parse("B2"));
  CHECK(b2.size() == 8);
  CHECK(b2.length(b2.longest()) == 4);
  CHECK(enumerate_coxeter(CoxeterType::parse("A1xA1")).size() == 4);
  CHECK(enumerate_coxeter(CoxeterType::parse("G2")).size() == 12);
  CHECK(enumerate_coxeter(CoxeterType::parse("A3")).size() == 24);
  CHECK(enumerate_coxeter(CoxeterType::parse("D4")).size() == 192);
  CHECK(enumerate_coxeter(CoxeterType::parse("F4")).size() == 1152);
  CHECK(enumerate_coxeter(CoxeterType::parse("E6")).size() == 51840);
  CHECK(enumerate_coxeter(CoxeterType::parse("B3")).size() == 48);
  CHECK(enumerate_coxeter(CoxeterType::parse("C3")).size() == 48);
}

TEST_CASE("Coxeter lengths change by one and match inversions") {
  for (const char* t : {"A3", "B3", "G2", "A2xA1"}) {
    auto w = enumerate_coxeter(CoxeterType::parse(t));
    for (std::size_t e = 0; e < w.size(); ++e) {
      CHECK(w.length(e) == w.inversions(e));
      CHECK(static_cast<int>(w.word(e).size()) == w.length(e));
      for (int s = 0; s < w.rank(); ++s) {
        const int diff = w.length(w.right_mult(e, s)) - w.length(e);
        CHECK((diff == 1 || diff == -1));
        CHECK(w.right_mult(w.right_mult(e, s), s) == e);
      }
    }
    CHECK(w.length(w.longest()) == static_cast<int>(w.positive_root_count()));
  }
}

TEST_CASE("Coxeter enumeration errors") {
  auto d = affine_dynkin(build_spec({3}, 0, 3));
  CHECK_THROWS_AS(CoxeterGroup::from_cartan(sub_cartan(d, d.all_nodes())), DomainError);
  CHECK_THROWS_AS(enumerate_coxeter(CoxeterType::parse("E8"), 1000), DomainError);
}

TEST_CASE("every face is of finite type") {
  for (auto factors : std::vector<std::vector<int>>{{3}, {4}, {3, 2}, {2, 2}}) {
    auto spec = build_spec(factors, 0, 3);
    auto d = affine_dynkin(spec);
    for (const auto& f : faces(d)) {
      auto g = face_group(d, f);
      std::size_t expect = 1;
      // Each connected run of k consecutive nodes in a cycle is A_k with (k+1)! elements.
      for (int i = 0; i < spec.rank(); ++i) {
        const int n = spec.factors[i];
        int start = 0;
        while (start < n && has_node(f.nodes, spec.node(i, start))) ++start;
        int run = 0;
        for (int step = 1; step <= n; ++step) {
          const int j = (start + step) % n;
          if (has_node(f.nodes, spec.node(i, j))) {
            ++run;
          } else {
            for (int k = 2; k <= run + 1; ++k) expect *= k;
            run = 0;
          }
        }
      }
      CHECK(g.size() == expect);
    }
  }
}
