#include "algint/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace algint {

StructureConstants::StructureConstants(std::string name, std::size_t dim,
                                       std::optional<std::size_t> unit_index)
    : name_(std::move(name)),
      dim_(dim),
      unit_index_(unit_index),
      f_(dim * dim * dim) {
  if (dim == 0) throw AlgebraError("algebra dimension must be at least 1");
}

void StructureConstants::validate() const {
  if (!unit_index_) return;
  const std::size_t u = *unit_index_;
  if (u >= dim_)
    throw AlgebraError("unit index " + std::to_string(u) + " out of range");
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      GaussScalar delta(j == k ? 1 : 0);
      if ((*this)(u, j, k) != delta || (*this)(j, u, k) != delta) {
        throw AlgebraError("declared unit x" + std::to_string(u) +
                           " fails the unit law at (" + std::to_string(j) +
                           "," + std::to_string(k) + ")");
      }
    }
  }
}

AlgebraElement AlgebraElement::basis(std::size_t dim, std::size_t i) {
  AlgebraElement e(dim);
  e[i] = 1;
  return e;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const GaussScalar& x) { return x.is_zero(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (size() != o.size()) throw DimensionError("element length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (size() != o.size()) throw DimensionError("element length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussScalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string AlgebraElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ")";
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  if (a.size() != n || b.size() != n)
    throw DimensionError("multiply: element length does not match dimension " +
                         std::to_string(n));
  AlgebraElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      GaussScalar w = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!sc(i, j, k).is_zero()) out[k] += w * sc(i, j, k);
    }
  }
  return out;
}

bool is_commutative(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sc(i, j, k) != sc(j, i, k)) return false;
  return true;
}

std::optional<AssociatorWitness> find_associativity_violation(
    const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(AlgebraElement::basis(n, i));

  std::vector<AlgebraElement> products;  // products[i*n+j] = x_i x_j
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products.push_back(multiply(basis[i], basis[j], sc));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = multiply(basis[i], products[j * n + k], sc);
        auto rhs = multiply(products[i * n + j], basis[k], sc);
        if (lhs != rhs) return AssociatorWitness{i, j, k};
      }
  return std::nullopt;
}

MultOperators build_mult_operators(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  MultOperators ops;
  ops.right.assign(n, ExactMatrix(n, n));
  ops.left.assign(n, ExactMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ops.right[i](j, k) = sc(j, i, k);
        ops.left[i](j, k) = sc(i, k, j);
      }
  return ops;
}

namespace {

ExactMatrix structure_combination(const std::vector<ExactMatrix>& mats,
                                  const StructureConstants& sc, std::size_t i,
                                  std::size_t j) {
  const std::size_t n = sc.dim();
  ExactMatrix sum(n, n);
  for (std::size_t k = 0; k < n; ++k)
    if (!sc(i, j, k).is_zero()) sum += sc(i, j, k) * mats[k];
  return sum;
}

}  // namespace

RepIdentityReport rep_identity_report(const StructureConstants& sc,
                                      const MultOperators& ops) {
  const std::size_t n = sc.dim();
  RepIdentityReport report;
  std::vector<ExactMatrix> left_t;
  for (const auto& p : ops.left) left_t.push_back(p.transpose());

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ops.right[i] * ops.right[j] !=
          structure_combination(ops.right, sc, i, j))
        report.x_rep_violations.emplace_back(i, j);
      if (ops.left[i] * ops.left[j] != structure_combination(ops.left, sc, i, j))
        report.pi_rep_violations.emplace_back(i, j);
      if (ops.right[i] * left_t[j] != left_t[j] * ops.right[i])
        report.commute_violations.emplace_back(i, j);
    }
  }
  report.x_rep_holds = report.x_rep_violations.empty();
  report.pi_rep_holds = report.pi_rep_violations.empty();
  report.commute_holds = report.commute_violations.empty();
  return report;
}

std::optional<AlgebraElement> find_unit(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  // Unknown e; rows encode Σ_i e_i f_ijk = δ_jk and Σ_i f_jik e_i = δ_jk.
  ExactMatrix system(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t left_row = j * n + k;
      std::size_t right_row = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        system(left_row, i) = sc(i, j, k);
        system(right_row, i) = sc(j, i, k);
      }
      rhs[left_row] = rhs[right_row] = GaussScalar(j == k ? 1 : 0);
    }
  }
  auto result = solve_linear(system, rhs);
  std::optional<AlgebraElement> unit;
  if (auto* u = std::get_if<UniqueSolution>(&result)) {
    unit = AlgebraElement(u->value);
  } else if (auto* a = std::get_if<AffineSolution>(&result)) {
    // Unreachable: two units coincide (e = e·e' = e').
    unit = AlgebraElement(a->particular);
  }
  if (sc.unit_index()) {
    auto declared = AlgebraElement::basis(n, *sc.unit_index());
    if (!unit || *unit != declared)
      throw AlgebraError("declared unit index " +
                         std::to_string(*sc.unit_index()) +
                         " disagrees with the solved unit");
  }
  return unit;
}

}  // namespace algint
