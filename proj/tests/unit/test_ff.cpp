#include <doctest.h>

#include <cmath>
#include <random>

#include "heckeho/error.hpp"
#include "heckeho/ff.hpp"

using namespace heckeho;
using ff::FFMatrix;
using ff::GaloisField;

namespace {

// Polynomial arithmetic mod p on coefficient vectors, independent of the field tables.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod,
                              int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * m - 1; k >= m; --k) {
    const int c = prod[k];
    if (!c) continue;
    for (int t = 0; t <= m; ++t) prod[k - m + t] = ((prod[k - m + t] - c * mod[t]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  auto f = GaloisField::make(7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      CHECK(f->add(a, b) == static_cast<ff::Elem>((a + b) % 7));
      CHECK(f->mul(a, b) == static_cast<ff::Elem>((a * b) % 7));
    }
  CHECK(f->from_int(-1) == 6u);
  CHECK(f->to_string(3) == "3");
}

TEST_CASE("extension field multiplication agrees with polynomial arithmetic") {
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    auto f = GaloisField::make(p, m);
    CHECK(f->order() == static_cast<ff::Elem>(std::pow(p, m)));
    for (ff::Elem a = 0; a < f->order(); ++a)
      for (ff::Elem b = 0; b < f->order(); b += 3) {
        auto expect = poly_mul_mod(f->coeffs(a), f->coeffs(b), f->modulus(), p);
        CHECK(f->coeffs(f->mul(a, b)) == expect);
      }
  }
}

TEST_CASE("modulus is the least monic irreducible") {
  // x^2 + 1 is irreducible over GF(3) and the smallest in the coefficient order.
  CHECK(GaloisField::make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
  // Over GF(2): x^2 + x + 1.
  CHECK(GaloisField::make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("field axioms and Frobenius on samples") {
  auto f = GaloisField::make(3, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<ff::Elem> pick(0, f->order() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    CHECK(f->add(a, f->neg(a)) == 0u);
    if (a) CHECK(f->mul(a, f->inv(a)) == 1u);
    CHECK(f->pow(f->add(a, b), 3) == f->add(f->pow(a, 3), f->pow(b, 3)));
    CHECK(f->pow(f->mul(a, b), 3) == f->mul(f->pow(a, 3), f->pow(b, 3)));
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  auto f = GaloisField::make(5, 2);
  std::vector<bool> seen(f->order(), false);
  ff::Elem x = 1;
  for (ff::Elem k = 0; k + 1 < f->order(); ++k) {
    CHECK_FALSE(seen[x]);
    seen[x] = true;
    x = f->mul(x, f->primitive());
  }
  CHECK(x == 1u);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(GaloisField::make(6), DomainError);
  CHECK_THROWS_AS(GaloisField::make(2, 17), DomainError);
  CHECK_THROWS_AS(GaloisField::make(3, 0), DomainError);
}

TEST_CASE("rref examples") {
  auto f3 = GaloisField::make(3);
  CHECK(ff::rref(FFMatrix::identity(f3, 3)).rank == 3);
  CHECK(ff::rref(FFMatrix(f3, 3, 4)).rank == 0);
  auto f5 = GaloisField::make(5);
  auto r = ff::rref(FFMatrix::from_ints(f5, {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced == FFMatrix::from_ints(f5, {{1, 2}, {0, 0}}));
}

TEST_CASE("solve examples") {
  auto f5 = GaloisField::make(5);
  auto b = FFMatrix::from_ints(f5, {{1, 2}, {3, 4}});
  CHECK(*ff::solve(FFMatrix::identity(f5, 2), b) == b);
  CHECK_FALSE(ff::solve(FFMatrix(f5, 2, 2), b).has_value());
  auto f2 = GaloisField::make(2);
  auto x = ff::solve(FFMatrix::from_ints(f2, {{1, 1}}), FFMatrix::from_ints(f2, {{0}}));
  REQUIRE(x.has_value());
  CHECK(*x == FFMatrix::from_ints(f2, {{0}, {0}}));
  CHECK_THROWS_AS(ff::solve(FFMatrix::identity(f5, 2), FFMatrix(f5, 3, 1)), DomainError);
}

TEST_CASE("kernel examples") {
  auto f3 = GaloisField::make(3);
  CHECK(ff::kernel(FFMatrix::identity(f3, 3)).cols() == 0);
  CHECK(ff::kernel(FFMatrix(f3, 3, 3)).cols() == 3);
  auto f2 = GaloisField::make(2);
  auto k = ff::kernel(FFMatrix::from_ints(f2, {{1, 1}}));
  CHECK(k == FFMatrix::from_ints(f2, {{1}, {1}}));
}

TEST_CASE("random matrices: rank symmetry, kernel and solve round trips") {
  auto f = GaloisField::make(3, 2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<ff::Elem> pick(0, f->order() - 1);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    FFMatrix a(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = trial % 3 == 0 && j == 0 ? 0 : pick(rng);
    const auto rk = ff::rank(a);
    CHECK(rk == ff::rank(a.transposed()));
    const auto k = ff::kernel(a);
    CHECK(k.cols() == c - rk);
    CHECK((a * k).is_zero());
    CHECK(ff::rank(k) == k.cols());
    FFMatrix x(f, c, 2);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) = pick(rng);
    const auto b = a * x;
    auto sol = ff::solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
    if (r == c) {
      auto inv = ff::inverse(a);
      CHECK(inv.has_value() == (rk == r));
      if (inv) CHECK(a * *inv == FFMatrix::identity(f, r));
    }
  }
}

TEST_CASE("kronecker product shape and entries") {
  auto f = GaloisField::make(5);
  auto a = FFMatrix::from_ints(f, {{1, 2}, {3, 4}});
  auto b = FFMatrix::from_ints(f, {{0, 1}, {1, 0}});
  auto k = a.kron(b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == 1u);
  CHECK(k(3, 2) == 4u);
  CHECK(k(2, 1) == 3u);
}
