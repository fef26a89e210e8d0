#include <doctest.h>

#include <random>

#include "algint/catalog.hpp"
#include "algint/integration.hpp"
#include "algint/symmetry.hpp"
#include "test_support.hpp"

using namespace algint;
using test::e;

namespace {

AlgebraElement neg(const AlgebraElement& a) { return GaussScalar(-1) * a; }

}  // namespace

TEST_CASE("grassmann tables") {
  auto g1 = catalog::grassmann(1);
  CHECK(multiply(e(2, 0), e(2, 0), g1) == e(2, 0));
  CHECK(multiply(e(2, 0), e(2, 1), g1) == e(2, 1));
  CHECK(multiply(e(2, 1), e(2, 0), g1) == e(2, 1));
  CHECK(multiply(e(2, 1), e(2, 1), g1).is_zero());

  auto g2 = catalog::grassmann(2);
  CHECK(multiply(e(4, 1), e(4, 2), g2) == e(4, 3));
  CHECK(multiply(e(4, 2), e(4, 1), g2) == neg(e(4, 3)));

  auto g3 = catalog::grassmann(3);
  CHECK(multiply(e(8, 3), e(8, 4), g3) == e(8, 7));
  CHECK(multiply(e(8, 4), e(8, 3), g3) == e(8, 7));
  CHECK(multiply(e(8, 5), e(8, 2), g3) == neg(e(8, 7)));

  CHECK_THROWS(catalog::grassmann(0));
  CHECK_THROWS(catalog::grassmann(7));
}

TEST_CASE("grassmann generators anticommute and square to zero") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = catalog::grassmann(n);
    const std::size_t dim = g.dim();
    CHECK_FALSE(is_commutative(g) == (n >= 2));
    for (std::size_t a = 0; a < n; ++a) {
      auto ta = e(dim, std::size_t{1} << a);
      CHECK(multiply(ta, ta, g).is_zero());
      for (std::size_t b = 0; b < n; ++b) {
        auto tb = e(dim, std::size_t{1} << b);
        CHECK((multiply(ta, tb, g) + multiply(tb, ta, g)).is_zero());
      }
    }
    CHECK(is_associative(g));
  }
}

TEST_CASE("paragrassmann tables") {
  CHECK(catalog::paragrassmann(1) == [] {
    auto g = catalog::grassmann(1);
    g.set_name("paragrassmann_1");
    return g;
  }());
  auto p3 = catalog::paragrassmann(3);
  CHECK(multiply(e(4, 2), e(4, 2), p3).is_zero());
  auto p2 = catalog::paragrassmann(2);
  CHECK(multiply(e(3, 1), e(3, 1), p2) == e(3, 2));
  for (std::size_t p = 1; p <= 4; ++p) {
    CHECK(is_commutative(catalog::paragrassmann(p)));
    CHECK(is_associative(catalog::paragrassmann(p)));
  }
}

TEST_CASE("quaternion tables") {
  auto qe = catalog::quaternion(catalog::Basis::ImaginaryWithUnit);
  CHECK(multiply(e(4, 1), e(4, 2), qe) == e(4, 3));
  CHECK(multiply(e(4, 2), e(4, 1), qe) == neg(e(4, 3)));
  CHECK(multiply(e(4, 3), e(4, 3), qe) == neg(e(4, 0)));

  auto qs = catalog::quaternion(catalog::Basis::Split);
  CHECK(multiply(e(4, 3), e(4, 2), qs) == neg(e(4, 1)));
  CHECK(multiply(e(4, 0), e(4, 0), qs) == e(4, 0));
  CHECK(multiply(e(4, 0), e(4, 2), qs) == e(4, 2));
  CHECK(multiply(e(4, 2), e(4, 0), qs).is_zero());
  CHECK_FALSE(is_commutative(qs));
}

TEST_CASE("octonion tables") {
  auto oe = catalog::octonion(catalog::Basis::ImaginaryWithUnit);
  CHECK(multiply(e(8, 2), e(8, 4), oe) == e(8, 6));
  CHECK(multiply(e(8, 4), e(8, 2), oe) == neg(e(8, 6)));
  for (std::size_t a = 1; a < 8; ++a) CHECK(multiply(e(8, a), e(8, a), oe) == neg(e(8, 0)));

  auto os = catalog::octonion(catalog::Basis::Split);
  auto u = [](std::size_t i) { return e(8, 2 + i); };
  auto us = [](std::size_t i) { return e(8, 5 + i); };
  // u_1 u_2 = u_3*, u_2 u_1 = -u_3*.
  CHECK(multiply(u(0), u(1), os) == us(2));
  CHECK(multiply(u(1), u(0), os) == neg(us(2)));
  CHECK(multiply(us(0), us(1), os) == u(2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(multiply(u(i), us(j), os) == (i == j ? neg(e(8, 0)) : AlgebraElement(8)));
}

TEST_CASE("octonion split operators") {
  auto os = catalog::octonion(catalog::Basis::Split);
  auto ops = build_mult_operators(os);
  const auto& x = ops.right;
  auto anti = [](const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; };
  const ExactMatrix id = ExactMatrix::identity(8);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(x[5 + i] == GaussScalar(-1) * x[2 + i].transpose());
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(anti(x[2 + i], x[5 + j]) == (i == j ? GaussScalar(-1) * id : ExactMatrix(8, 8)));
      CHECK(anti(x[2 + i], x[2 + j]).is_zero());
    }
  }
  CHECK(x[0] * x[0] == x[0]);
  CHECK(x[1] * x[1] == x[1]);
  CHECK((x[0] * x[1]).is_zero());
  CHECK((x[0] + x[1]).is_identity());
}

TEST_CASE("change of basis matrices are isomorphisms") {
  CHECK(is_isomorphism(catalog::quaternion(catalog::Basis::ImaginaryWithUnit),
                       catalog::quaternion(catalog::Basis::Split),
                       catalog::quaternion_split_change())
            .holds);
  CHECK(is_isomorphism(catalog::octonion(catalog::Basis::ImaginaryWithUnit),
                       catalog::octonion(catalog::Basis::Split),
                       catalog::octonion_split_change())
            .holds);
}

TEST_CASE("pauli image is a representation") {
  auto qe = catalog::quaternion(catalog::Basis::ImaginaryWithUnit);
  std::mt19937 rng(31);
  for (int k = 0; k < 10; ++k) {
    auto a = test::random_element(rng, 4), b = test::random_element(rng, 4);
    CHECK(catalog::pauli_image(multiply(a, b, qe)) ==
          catalog::pauli_image(a) * catalog::pauli_image(b));
  }
  CHECK(catalog::pauli_image(e(4, 0)).is_identity());
}

TEST_CASE("su2 and cyclic") {
  auto su = catalog::su2();
  CHECK(multiply(e(3, 0), e(3, 1), su) == e(3, 2));
  CHECK(multiply(e(3, 0), e(3, 0), su).is_zero());
  auto ops = build_mult_operators(su);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ops.right[i] == ops.left[i]);

  auto c4 = catalog::cyclic(4);
  CHECK(multiply(e(4, 1), e(4, 3), c4) == e(4, 0));
  CHECK(is_commutative(c4));
  CHECK(is_associative(c4));
  CHECK_THROWS(catalog::cyclic(1));
}

TEST_CASE("make and names") {
  for (const auto& name : catalog::names()) CHECK_NOTHROW(catalog::make(name, 0));
  CHECK(catalog::make("grassmann", 3).dim() == 8);
  CHECK(catalog::make("cyclic", 0).dim() == 8);
  CHECK_THROWS(catalog::make("sedenion", 0));
  for (const auto& sc : catalog::all()) CHECK_NOTHROW(sc.validate());
}
