#include "algint/symmetry.hpp"

#include <stdexcept>

namespace algint {

namespace {

constexpr std::size_t kMaxViolations = 32;

void require_square(const ExactMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionError(std::string(what) + ": matrix must be " + std::to_string(n) +
                         "x" + std::to_string(n));
}

}  // namespace

SymmetryCheck is_isomorphism(const StructureConstants& from,
                             const StructureConstants& to, const ExactMatrix& s) {
  const std::size_t n = from.dim();
  if (to.dim() != n) throw DimensionError("is_isomorphism: dimension mismatch");
  require_square(s, n, "is_isomorphism");
  SymmetryCheck check;
  std::vector<AlgebraElement> images;
  for (std::size_t i = 0; i < n; ++i) images.emplace_back(s.row(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs = multiply(images[i], images[j], from);
      Vector row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = to(i, j, k);
      Vector rhs = left_multiply(row, s);
      for (std::size_t p = 0; p < n; ++p) {
        if (lhs[p] != rhs[p] && check.violations.size() < kMaxViolations)
          check.violations.push_back({i, j, p});
      }
    }
  }
  check.holds = check.violations.empty();
  if (!check.holds) check.reason = "multiplication rules not preserved";
  return check;
}

SymmetryCheck is_automorphism(const StructureConstants& sc, const ExactMatrix& s) {
  require_square(s, sc.dim(), "is_automorphism");
  if (!invert(s)) return SymmetryCheck{false, "matrix is singular", {}};
  return is_isomorphism(sc, sc, s);
}

KFactorResult schur_k_factor(const StructureConstants& sc,
                             const ConjugationMatrix& conj, const ExactMatrix& s) {
  const std::size_t n = sc.dim();
  require_square(s, n, "schur_k_factor");
  require_square(conj.c, n, "schur_k_factor");
  if (!invert(s)) throw AlgebraError("schur_k_factor: automorphism is singular");
  ExactMatrix m = conj.c_inv * s.transpose() * conj.c * s;
  const GaussScalar k = m(0, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m(r, c) != (r == c ? k : GaussScalar(0)))
        return KFactorResult{NotProportional{{r, c}}};
  return KFactorResult{k};
}

IntegrationFunctional transform_measure(const IntegrationFunctional& fn,
                                        const GaussScalar& k) {
  if (k.is_zero()) throw std::domain_error("transform_measure: k must be nonzero");
  IntegrationFunctional out = fn;
  GaussScalar inv = GaussScalar(1) / k;
  for (auto& v : out.values) v *= inv;
  return out;
}

CompletenessCheck primed_completeness(const StructureConstants& sc,
                                      const ConjugationMatrix& conj,
                                      const ExactMatrix& s,
                                      const IntegrationFunctional& primed) {
  const std::size_t n = sc.dim();
  require_square(s, n, "primed_completeness");
  CompletenessCheck check;
  check.matrix = ExactMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    AlgebraElement bra(left_multiply(conj.c.column(j), s));
    for (std::size_t i = 0; i < n; ++i) {
      AlgebraElement ket(s.row(i));
      check.matrix(i, j) = integrate(primed, multiply(ket, bra, sc));
      if (check.matrix(i, j) != GaussScalar(i == j ? 1 : 0))
        check.failures.emplace_back(i, j);
    }
  }
  check.holds = check.failures.empty();
  return check;
}

SymmetryCheck is_derivation(const StructureConstants& sc, const ExactMatrix& d) {
  const std::size_t n = sc.dim();
  require_square(d, n, "is_derivation");
  SymmetryCheck check;
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraElement di(d.row(i));
    AlgebraElement ei = AlgebraElement::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs = multiply(di, AlgebraElement::basis(n, j), sc) +
                           multiply(ei, AlgebraElement(d.row(j)), sc);
      Vector row(n);
      for (std::size_t m = 0; m < n; ++m) row[m] = sc(i, j, m);
      Vector rhs = left_multiply(row, d);
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != rhs[k] && check.violations.size() < kMaxViolations)
          check.violations.push_back({i, j, k});
    }
  }
  check.holds = check.violations.empty();
  if (!check.holds) check.reason = "Leibniz rule fails";
  return check;
}

ExactMatrix exponentiate_derivation(const ExactMatrix& d, const Rational& alpha) {
  if (!d.is_square()) throw DimensionError("exponentiate_derivation: not square");
  const std::size_t n = d.rows();
  ExactMatrix power = ExactMatrix::identity(n);
  for (std::size_t m = 0; m < n; ++m) power = power * d;
  if (!power.is_zero())
    throw NotExponentiable("exponentiate_derivation: D is not nilpotent, exp(αD) is not exact");

  ExactMatrix s = ExactMatrix::identity(n);
  ExactMatrix term = ExactMatrix::identity(n);
  for (long m = 1; m <= static_cast<long>(n); ++m) {
    term = term * d * GaussScalar(alpha / Rational(m));
    if (term.is_zero()) break;
    s += term;
  }
  return s;
}

bool derivation_annihilation_check(const IntegrationFunctional& fn,
                                   const ExactMatrix& d,
                                   const StructureConstants& sc) {
  require_square(d, sc.dim(), "derivation_annihilation_check");
  if (fn.values.size() != sc.dim())
    throw DimensionError("derivation_annihilation_check: functional length");
  Vector image = d * std::span<const GaussScalar>(fn.values);
  for (const auto& v : image)
    if (!v.is_zero()) return false;
  return true;
}

StructureConstants change_basis(const StructureConstants& sc, const ExactMatrix& t,
                                std::string name) {
  const std::size_t n = sc.dim();
  require_square(t, n, "change_basis");
  auto t_inv = invert(t);
  if (!t_inv) throw AlgebraError("change_basis: basis change is singular");
  StructureConstants g(std::move(name), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement product = multiply(AlgebraElement(t.row(i)), AlgebraElement(t.row(j)), sc);
      Vector coords = left_multiply(product.coeffs(), *t_inv);
      for (std::size_t k = 0; k < n; ++k) g(i, j, k) = coords[k];
    }
  if (auto unit = find_unit(g)) {
    for (std::size_t u = 0; u < n; ++u)
      if (*unit == AlgebraElement::basis(n, u)) g.set_unit_index(u);
  }
  return g;
}

ConjugationMatrix transport_conjugation(const ConjugationMatrix& conj,
                                        const ExactMatrix& t) {
  auto t_inv = invert(t);
  if (!t_inv) throw AlgebraError("transport_conjugation: basis change is singular");
  return make_conjugation(t_inv->transpose() * conj.c * *t_inv);
}

IntegrationFunctional transport_functional(const IntegrationFunctional& fn,
                                           const ExactMatrix& t) {
  return IntegrationFunctional{t * std::span<const GaussScalar>(fn.values)};
}

}  // namespace algint
