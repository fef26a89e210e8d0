#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algint/matrix.hpp"
#include "algint/rational.hpp"

namespace algint {

/// Raised when structure constants violate their own declared invariants.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The rank-3 tensor f with x_i x_j = Σ_k f_ijk x_k. Dense storage.
class StructureConstants {
 public:
  StructureConstants(std::string name, std::size_t dim,
                     std::optional<std::size_t> unit_index = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::optional<std::size_t>& unit_index() const { return unit_index_; }
  void set_unit_index(std::optional<std::size_t> u) { unit_index_ = u; }
  void set_name(std::string name) { name_ = std::move(name); }

  const GaussScalar& operator()(std::size_t i, std::size_t j,
                                std::size_t k) const {
    return f_[(i * dim_ + j) * dim_ + k];
  }
  GaussScalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return f_[(i * dim_ + j) * dim_ + k];
  }

  /// Throws AlgebraError if the declared unit does not act as a two-sided
  /// identity on the basis.
  void validate() const;

  friend bool operator==(const StructureConstants&,
                         const StructureConstants&) = default;

 private:
  std::string name_;
  std::size_t dim_;
  std::optional<std::size_t> unit_index_;
  std::vector<GaussScalar> f_;
};

/// Coefficient vector a with a = Σ_i a_i x_i.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : coeffs_(dim) {}
  explicit AlgebraElement(Vector coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraElement basis(std::size_t dim, std::size_t i);

  std::size_t size() const { return coeffs_.size(); }
  const Vector& coeffs() const { return coeffs_; }
  GaussScalar& operator[](std::size_t i) { return coeffs_[i]; }
  const GaussScalar& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussScalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const GaussScalar& s, AlgebraElement a) {
    return a *= s;
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string str() const;

 private:
  Vector coeffs_;
};

/// (a·b)_k = Σ_ij a_i b_j f_ijk.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const StructureConstants& sc);

bool is_commutative(const StructureConstants& sc);

/// Basis triple (i, j, k) with x_i(x_j x_k) ≠ (x_i x_j)x_k.
using AssociatorWitness = std::array<std::size_t, 3>;

std::optional<AssociatorWitness> find_associativity_violation(
    const StructureConstants& sc);
inline bool is_associative(const StructureConstants& sc) {
  return !find_associativity_violation(sc).has_value();
}

/// Right multiplications (X_i)_jk = f_jik and left multiplications
/// (Π_i)_jk = f_ikj, so that X_i|x⟩ = |x⟩x_i and ⟨x̃|Π_i = x_i⟨x̃|.
struct MultOperators {
  std::vector<ExactMatrix> right;
  std::vector<ExactMatrix> left;
};

MultOperators build_mult_operators(const StructureConstants& sc);

using IndexPair = std::pair<std::size_t, std::size_t>;

/// X_iX_j = f_ijk X_k, Π_iΠ_j = f_ijk Π_k and [X_i, Π_jᵀ] = 0, each with the
/// index pairs where it fails.
struct RepIdentityReport {
  bool x_rep_holds = true;
  bool pi_rep_holds = true;
  bool commute_holds = true;
  std::vector<IndexPair> x_rep_violations;
  std::vector<IndexPair> pi_rep_violations;
  std::vector<IndexPair> commute_violations;

  bool all_hold() const { return x_rep_holds && pi_rep_holds && commute_holds; }
};

RepIdentityReport rep_identity_report(const StructureConstants& sc,
                                      const MultOperators& ops);

/// Solves e·x_j = x_j·e = x_j exactly. Cross-checks the declared unit index
/// when one is present.
std::optional<AlgebraElement> find_unit(const StructureConstants& sc);

}  // namespace algint
