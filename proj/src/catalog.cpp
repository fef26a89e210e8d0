#include "algint/catalog.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace algint::catalog {

namespace {

int levi_civita(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) return 0;
  // Parity of the permutation (a, b, c) of (0, 1, 2).
  int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

StructureConstants grassmann(std::size_t n) {
  if (n == 0) throw std::invalid_argument("grassmann: need at least one generator");
  if (n > 6) throw std::invalid_argument("grassmann: at most 6 generators");
  const std::size_t dim = std::size_t{1} << n;
  StructureConstants sc("grassmann_" + std::to_string(n), dim, 0);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      if (s & t) continue;
      // Each generator of s that sits above a generator of t must pass it.
      int inversions = 0;
      for (std::size_t bit = 0; bit < n; ++bit)
        if (t & (std::size_t{1} << bit))
          inversions += std::popcount(s >> (bit + 1));
      sc(s, t, s | t) = inversions % 2 == 0 ? 1 : -1;
    }
  }
  return sc;
}

StructureConstants paragrassmann(std::size_t p) {
  if (p == 0) throw std::invalid_argument("paragrassmann: order must be at least 1");
  StructureConstants sc("paragrassmann_" + std::to_string(p), p + 1, 0);
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; i + j <= p; ++j) sc(i, j, i + j) = 1;
  return sc;
}

StructureConstants quaternion(Basis basis) {
  if (basis == Basis::ImaginaryWithUnit) {
    StructureConstants sc("quaternion", 4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      sc(0, i, i) = 1;
      sc(i, 0, i) = 1;
    }
    for (std::size_t a = 1; a <= 3; ++a) {
      sc(a, a, 0) = -1;
      for (std::size_t b = 1; b <= 3; ++b)
        for (std::size_t c = 1; c <= 3; ++c)
          if (int e = levi_civita(a - 1, b - 1, c - 1)) sc(a, b, c) = e;
    }
    return sc;
  }
  enum { u0 = 0, u0s = 1, up = 2, um = 3 };
  StructureConstants sc("quaternion_split", 4);
  sc(u0, u0, u0) = 1;
  sc(u0, up, up) = 1;
  sc(u0s, u0s, u0s) = 1;
  sc(u0s, um, um) = 1;
  sc(up, u0s, up) = 1;
  sc(up, um, u0) = -1;
  sc(um, u0, um) = 1;
  sc(um, up, u0s) = -1;
  return sc;
}

ExactMatrix quaternion_split_change() {
  const GaussScalar h(Rational(1, 2));
  const GaussScalar ih(Rational(0), Rational(1, 2));
  return ExactMatrix{
      {h, 0, 0, ih},
      {h, 0, 0, -ih},
      {0, h, ih, 0},
      {0, h, -ih, 0},
  };
}

ExactMatrix pauli_image(const AlgebraElement& a) {
  if (a.size() != 4) throw DimensionError("pauli_image: expected a quaternion");
  const GaussScalar i = GaussScalar::i();
  const std::array<ExactMatrix, 4> images = {
      ExactMatrix::identity(2),
      ExactMatrix{{0, -i}, {-i, 0}},  // -iσ_1
      ExactMatrix{{0, -1}, {1, 0}},   // -iσ_2
      ExactMatrix{{-i, 0}, {0, i}},   // -iσ_3
  };
  ExactMatrix m(2, 2);
  for (std::size_t k = 0; k < 4; ++k) m += a[k] * images[k];
  return m;
}

StructureConstants octonion(Basis basis) {
  if (basis == Basis::ImaginaryWithUnit) {
    static constexpr std::array<std::array<std::size_t, 3>, 7> kTriples = {{
        {1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {3, 6, 7}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4},
    }};
    StructureConstants sc("octonion", 8, 0);
    for (std::size_t i = 0; i < 8; ++i) {
      sc(0, i, i) = 1;
      sc(i, 0, i) = 1;
    }
    for (std::size_t a = 1; a < 8; ++a) sc(a, a, 0) = -1;
    for (const auto& [a, b, c] : kTriples) {
      sc(a, b, c) = 1;
      sc(b, c, a) = 1;
      sc(c, a, b) = 1;
      sc(b, a, c) = -1;
      sc(c, b, a) = -1;
      sc(a, c, b) = -1;
    }
    return sc;
  }
  // u_0, u_0*, u_1..u_3, u_1*..u_3*
  StructureConstants sc("octonion_split", 8);
  const std::size_t u0 = 0, u0s = 1;
  auto u = [](std::size_t i) { return 2 + i; };
  auto us = [](std::size_t i) { return 5 + i; };
  sc(u0, u0, u0) = 1;
  sc(u0s, u0s, u0s) = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    sc(u0, u(j), u(j)) = 1;
    sc(u0s, us(j), us(j)) = 1;
    sc(u(j), u0s, u(j)) = 1;
    sc(us(j), u0, us(j)) = 1;
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) {
        sc(u(i), us(j), u0) = -1;
        sc(us(i), u(j), u0s) = -1;
      }
      for (std::size_t k = 0; k < 3; ++k) {
        if (int e = levi_civita(i, j, k)) {
          sc(u(i), u(j), us(k)) = e;
          sc(us(i), us(j), u(k)) = e;
        }
      }
    }
  return sc;
}

ExactMatrix octonion_split_change() {
  const GaussScalar h(Rational(1, 2));
  const GaussScalar ih(Rational(0), Rational(1, 2));
  ExactMatrix s(8, 8);
  s(0, 0) = h;
  s(0, 7) = ih;
  s(1, 0) = h;
  s(1, 7) = -ih;
  for (std::size_t i = 1; i <= 3; ++i) {
    s(1 + i, i) = h;
    s(1 + i, i + 3) = ih;
    s(4 + i, i) = h;
    s(4 + i, i + 3) = -ih;
  }
  return s;
}

ExactMatrix quaternion_split_conjugation() {
  return ExactMatrix{
      {1, 0, 0, 0},
      {0, 1, 0, 0},
      {0, 0, 0, -1},
      {0, 0, -1, 0},
  };
}

ExactMatrix octonion_split_conjugation() {
  ExactMatrix c(8, 8);
  c(0, 0) = 1;
  c(1, 1) = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    c(2 + i, 5 + i) = -1;
    c(5 + i, 2 + i) = -1;
  }
  return c;
}

ExactMatrix cyclic_conjugation(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cyclic: order must be at least 2");
  ExactMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, (n - i) % n) = 1;
  return c;
}

StructureConstants su2() {
  StructureConstants sc("su2", 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (int e = levi_civita(i, j, k)) sc(i, j, k) = e;
  return sc;
}

StructureConstants cyclic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cyclic: order must be at least 2");
  StructureConstants sc("cyclic_" + std::to_string(n), n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc(i, j, (i + j) % n) = 1;
  return sc;
}

StructureConstants shift(std::size_t n) {
  if (n < 2) throw std::invalid_argument("shift: dimension must be at least 2");
  StructureConstants sc("shift_" + std::to_string(n), n);
  for (std::size_t j = 0; j < n; ++j) sc(0, j, j) = 1;
  return sc;
}

std::vector<std::string> names() {
  return {"grassmann", "paragrassmann", "quaternion", "quaternion_split", "octonion",
          "octonion_split", "su2", "cyclic", "shift"};
}

StructureConstants make(const std::string& name, std::size_t param) {
  if (name == "grassmann") return grassmann(param ? param : 1);
  if (name == "paragrassmann") return paragrassmann(param ? param : 2);
  if (name == "quaternion") return quaternion(Basis::ImaginaryWithUnit);
  if (name == "quaternion_split") return quaternion(Basis::Split);
  if (name == "octonion") return octonion(Basis::ImaginaryWithUnit);
  if (name == "octonion_split") return octonion(Basis::Split);
  if (name == "su2") return su2();
  if (name == "cyclic") return cyclic(param ? param : 8);
  if (name == "shift") return shift(param ? param : 2);
  throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

std::vector<StructureConstants> all() {
  std::vector<StructureConstants> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(grassmann(n));
  for (std::size_t p = 1; p <= 4; ++p) out.push_back(paragrassmann(p));
  out.push_back(quaternion(Basis::ImaginaryWithUnit));
  out.push_back(quaternion(Basis::Split));
  out.push_back(octonion(Basis::ImaginaryWithUnit));
  out.push_back(octonion(Basis::Split));
  out.push_back(su2());
  out.push_back(cyclic(3));
  out.push_back(cyclic(8));
  out.push_back(shift(2));
  out.push_back(shift(3));
  return out;
}

}  // namespace algint::catalog
