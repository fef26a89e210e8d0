#include "algint/integration.hpp"

#include <algorithm>

namespace algint {

ConjugationMatrix make_conjugation(ExactMatrix c) {
  auto inv = invert(c);
  if (!inv) throw AlgebraError("conjugation matrix is singular");
  return ConjugationMatrix{std::move(c), std::move(*inv)};
}

bool is_intertwiner(const MultOperators& ops, const ExactMatrix& c) {
  for (std::size_t i = 0; i < ops.right.size(); ++i)
    if (ops.left[i] * c != c * ops.right[i]) return false;
  return true;
}

std::string to_string(ConjugationFailure reason) {
  switch (reason) {
    case ConjugationFailure::EmptyIntertwinerSpace:
      return "empty_intertwiner_space";
    case ConjugationFailure::NoInvertibleFoundUpToBound:
      return "no_invertible_found_up_to_bound";
  }
  return "unknown";
}

namespace {

void drop_zero_rows(ExactMatrix& m, std::size_t nonzero) {
  ExactMatrix kept(nonzero, m.cols());
  for (std::size_t r = 0; r < nonzero; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) kept(r, c) = std::move(m(r, c));
  m = std::move(kept);
}

ExactMatrix unflatten(const Vector& v, std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
  return m;
}

ExactMatrix normalized(ExactMatrix c) {
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t k = 0; k < c.cols(); ++k)
      if (!c(r, k).is_zero()) {
        GaussScalar scale = GaussScalar(1) / c(r, k);
        return c * scale;
      }
  return c;
}

}  // namespace

std::vector<ExactMatrix> intertwiner_basis(const MultOperators& ops) {
  const std::size_t n = ops.right.size();
  const std::size_t unknowns = n * n;
  // The reduced system is kept between blocks so at most n² rows survive.
  ExactMatrix reduced(0, unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    ExactMatrix system(reduced.rows() + unknowns, unknowns);
    for (std::size_t r = 0; r < reduced.rows(); ++r)
      for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = std::move(reduced(r, c));
    const std::size_t offset = reduced.rows();
    const ExactMatrix& left = ops.left[i];
    const ExactMatrix& right = ops.right[i];
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t row = offset + a * n + b;
        for (std::size_t m = 0; m < n; ++m) {
          // (Π_i C)_ab - (C X_i)_ab
          if (!left(a, m).is_zero()) system(row, m * n + b) += left(a, m);
          if (!right(m, b).is_zero()) system(row, a * n + m) -= right(m, b);
        }
      }
    }
    auto pivots = row_reduce(system);
    drop_zero_rows(system, pivots.size());
    reduced = std::move(system);
  }
  std::vector<ExactMatrix> basis;
  for (const auto& v : nullspace(reduced)) basis.push_back(unflatten(v, n));
  return basis;
}

ConjugationResult find_conjugation_matrix(const StructureConstants& sc,
                                          const MultOperators& ops,
                                          int search_bound) {
  if (ops.right.size() != sc.dim())
    throw DimensionError("operators do not match algebra dimension");
  ConjugationResult result{ConjugationNotFound{ConjugationFailure::EmptyIntertwinerSpace,
                                               search_bound}};
  auto basis = intertwiner_basis(ops);
  result.intertwiner_dimension = basis.size();
  if (basis.empty()) return result;

  auto accept = [&](const ExactMatrix& candidate) {
    ++result.candidates_tried;
    if (!invert(candidate)) return false;
    result.outcome = make_conjugation(normalized(candidate));
    return true;
  };

  for (const auto& b : basis)
    if (accept(b)) return result;

  const std::size_t m = basis.size();
  if (search_bound > 0) {
    std::vector<int> coeffs(m, -search_bound);
    const std::size_t n = sc.dim();
    while (result.candidates_tried < kMaxSearchCandidates) {
      if (std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c != 0; })) {
        ExactMatrix candidate(n, n);
        for (std::size_t t = 0; t < m; ++t)
          if (coeffs[t] != 0) candidate += GaussScalar(coeffs[t]) * basis[t];
        if (accept(candidate)) return result;
      }
      // Odometer step, last coefficient fastest.
      std::size_t pos = m;
      while (pos > 0 && coeffs[pos - 1] == search_bound) {
        coeffs[pos - 1] = -search_bound;
        --pos;
      }
      if (pos == 0) break;
      ++coeffs[pos - 1];
    }
  }
  result.outcome =
      ConjugationNotFound{ConjugationFailure::NoInvertibleFoundUpToBound, search_bound};
  return result;
}

namespace {

struct EchelonRow {
  std::size_t pivot;
  Vector coeffs;  // unknowns followed by the right-hand side
};

// Index of the first equation, in the given order, that makes the prefix
// system inconsistent.
std::optional<std::size_t> first_inconsistent_row(const ExactMatrix& a,
                                                  std::span<const GaussScalar> b) {
  const std::size_t n = a.cols();
  std::vector<EchelonRow> echelon;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector v = a.row(r);
    v.push_back(b[r]);
    for (const auto& e : echelon) {
      if (v[e.pivot].is_zero()) continue;
      GaussScalar factor = v[e.pivot];
      for (std::size_t c = 0; c <= n; ++c)
        if (!e.coeffs[c].is_zero()) v[c] -= factor * e.coeffs[c];
    }
    std::size_t pivot = 0;
    while (pivot < n && v[pivot].is_zero()) ++pivot;
    if (pivot == n) {
      if (!v[n].is_zero()) return r;
      continue;
    }
    GaussScalar inv = GaussScalar(1) / v[pivot];
    for (auto& x : v) x *= inv;
    echelon.push_back({pivot, std::move(v)});
  }
  return std::nullopt;
}

}  // namespace

FirstTypeResult first_type_integral(const StructureConstants& sc,
                                    const ConjugationMatrix& conj) {
  const std::size_t n = sc.dim();
  if (conj.c.rows() != n || !conj.c.is_square())
    throw DimensionError("conjugation matrix does not match algebra dimension");

  ExactMatrix system(n * n, n);
  Vector rhs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) system(i * n + j, k) = sc(i, j, k);
      rhs[i * n + j] = conj.c_inv(i, j);
    }

  FirstTypeResult result{InconsistentIntegral{{0, 0}}, true, std::nullopt};
  auto solved = solve_linear(system, rhs);
  if (std::holds_alternative<NoSolution>(solved)) {
    auto row = first_inconsistent_row(system, rhs);
    std::size_t r = row.value_or(0);
    result.outcome = InconsistentIntegral{{r / n, r % n}};
    result.unique = false;
  } else if (auto* u = std::get_if<UniqueSolution>(&solved)) {
    result.outcome = IntegrationFunctional{std::move(u->value)};
  } else {
    auto& affine = std::get<AffineSolution>(solved);
    result.outcome = IntegrationFunctional{std::move(affine.particular)};
    result.unique = false;
  }

  if (sc.unit_index()) {
    Vector shortcut = conj.c_inv.row(*sc.unit_index());
    result.unital_shortcut_agrees =
        result.exists() && result.functional().values == shortcut;
  }
  return result;
}

GaussScalar integrate(const IntegrationFunctional& fn, const AlgebraElement& a) {
  if (fn.values.size() != a.size())
    throw DimensionError("integrate: element length " + std::to_string(a.size()) +
                         " does not match functional length " +
                         std::to_string(fn.values.size()));
  GaussScalar sum;
  for (std::size_t p = 0; p < a.size(); ++p)
    if (!a[p].is_zero() && !fn.values[p].is_zero()) sum += a[p] * fn.values[p];
  return sum;
}

AlgebraElement bra_component(const ConjugationMatrix& conj, std::size_t j) {
  return AlgebraElement(conj.c.column(j));
}

CompletenessCheck verify_completeness(const StructureConstants& sc,
                                      const ConjugationMatrix& conj,
                                      const IntegrationFunctional& fn) {
  const std::size_t n = sc.dim();
  CompletenessCheck check;
  check.matrix = ExactMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    AlgebraElement bra = bra_component(conj, j);
    for (std::size_t i = 0; i < n; ++i) {
      check.matrix(i, j) =
          integrate(fn, multiply(AlgebraElement::basis(n, i), bra, sc));
      if (check.matrix(i, j) != GaussScalar(i == j ? 1 : 0))
        check.failures.emplace_back(i, j);
    }
  }
  std::sort(check.failures.begin(), check.failures.end());
  check.holds = check.failures.empty();
  return check;
}

AlgebraElement self_scalar_product(const StructureConstants& sc,
                                   const ConjugationMatrix& conj) {
  const std::size_t n = sc.dim();
  AlgebraElement sum(n);
  for (std::size_t j = 0; j < n; ++j)
    sum += multiply(bra_component(conj, j), AlgebraElement::basis(n, j), sc);
  return sum;
}

GaussScalar kernel_delta_check(const StructureConstants& sc,
                               const ConjugationMatrix& conj,
                               const IntegrationFunctional& fn,
                               const AlgebraElement& a) {
  if (a.size() != sc.dim()) throw DimensionError("kernel_delta_check: element length");
  return integrate(fn, AlgebraElement(left_multiply(a.coeffs(), conj.c)));
}

ConjugateTensorAlgebra::ConjugateTensorAlgebra(StructureConstants base)
    : base_(std::move(base)), unit_(find_unit(base_)) {}

AlgebraElement ConjugateTensorAlgebra::multiply(const AlgebraElement& a,
                                                const AlgebraElement& b) const {
  const std::size_t n = base_.dim();
  if (a.size() != dim() || b.size() != dim())
    throw DimensionError("tensor multiply: element length mismatch");
  AlgebraElement out(dim());
  for (std::size_t ia = 0; ia < dim(); ++ia) {
    if (a[ia].is_zero()) continue;
    const std::size_t i = ia / n, j = ia % n;
    for (std::size_t kb = 0; kb < dim(); ++kb) {
      if (b[kb].is_zero()) continue;
      const std::size_t k = kb / n, l = kb % n;
      GaussScalar w = a[ia] * b[kb];
      for (std::size_t p = 0; p < n; ++p) {
        if (base_(i, k, p).is_zero()) continue;
        GaussScalar wp = w * base_(i, k, p);
        for (std::size_t q = 0; q < n; ++q)
          if (!base_(j, l, q).is_zero()) out[index(p, q)] += wp * base_(j, l, q);
      }
    }
  }
  return out;
}

AlgebraElement ConjugateTensorAlgebra::star(const AlgebraElement& a) const {
  const std::size_t n = base_.dim();
  if (a.size() != dim()) throw DimensionError("star: element length mismatch");
  AlgebraElement out(dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[index(j, i)] = a[index(i, j)].conj();
  return out;
}

std::optional<AlgebraElement> ConjugateTensorAlgebra::embed_left(std::size_t i) const {
  if (!unit_) return std::nullopt;
  AlgebraElement out(dim());
  for (std::size_t q = 0; q < base_.dim(); ++q) out[index(i, q)] = (*unit_)[q];
  return out;
}

std::optional<AlgebraElement> ConjugateTensorAlgebra::embed_right(std::size_t j) const {
  if (!unit_) return std::nullopt;
  AlgebraElement out(dim());
  for (std::size_t p = 0; p < base_.dim(); ++p) out[index(p, j)] = (*unit_)[p];
  return out;
}

StructureConstants ConjugateTensorAlgebra::structure_constants() const {
  const std::size_t n = base_.dim();
  std::optional<std::size_t> unit_index;
  if (base_.unit_index()) unit_index = index(*base_.unit_index(), *base_.unit_index());
  StructureConstants f(base_.name() + "_tensor_conjugate", dim(), unit_index);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p) {
        if (base_(i, k, p).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t q = 0; q < n; ++q)
              if (!base_(j, l, q).is_zero())
                f(index(i, j), index(k, l), index(p, q)) = base_(i, k, p) * base_(j, l, q);
      }
  return f;
}

SecondTypeResult second_type_functional(const StructureConstants& sc) {
  ConjugateTensorAlgebra algebra(sc);
  const std::size_t n = sc.dim();
  IntegrationFunctional fn{Vector(algebra.dim())};
  for (std::size_t i = 0; i < n; ++i) fn.values[algebra.index(i, i)] = 1;

  CompletenessCheck check;
  check.matrix = ExactMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto left = algebra.embed_left(i);
      auto right = algebra.embed_right(j);
      AlgebraElement entry = (left && right)
                                 ? algebra.multiply(*left, *right)
                                 : AlgebraElement::basis(algebra.dim(), algebra.index(i, j));
      check.matrix(i, j) = integrate(fn, entry);
      if (check.matrix(i, j) != GaussScalar(i == j ? 1 : 0)) check.failures.emplace_back(i, j);
    }
  }
  check.holds = check.failures.empty();
  return SecondTypeResult{std::move(algebra), std::move(fn), std::move(check)};
}

}  // namespace algint
