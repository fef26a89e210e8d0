#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/matrix.hpp"

namespace algint {

/// Invertible C with Π_i C = C X_i for every i, together with its inverse.
struct ConjugationMatrix {
  ExactMatrix c;
  ExactMatrix c_inv;
};

/// Wraps an explicit C. Throws AlgebraError when C is singular.
ConjugationMatrix make_conjugation(ExactMatrix c);

/// Π_i C = C X_i for every i.
bool is_intertwiner(const MultOperators& ops, const ExactMatrix& c);

/// Basis of the space of all C with Π_i C = C X_i. Each basis matrix
/// comes from one free unknown of the stacked linear system over the
/// row-major entries of C.
std::vector<ExactMatrix> intertwiner_basis(const MultOperators& ops);

enum class ConjugationFailure { EmptyIntertwinerSpace, NoInvertibleFoundUpToBound };

std::string to_string(ConjugationFailure reason);

struct ConjugationNotFound {
  ConjugationFailure reason;
  int search_bound;
};

struct ConjugationResult {
  std::variant<ConjugationMatrix, ConjugationNotFound> outcome;
  std::size_t intertwiner_dimension = 0;
  std::size_t candidates_tried = 0;

  bool found() const { return std::holds_alternative<ConjugationMatrix>(outcome); }
  const ConjugationMatrix& matrix() const { return std::get<ConjugationMatrix>(outcome); }
  const ConjugationNotFound& failure() const {
    return std::get<ConjugationNotFound>(outcome);
  }
};

/// Default half-width of the integer grid used when no single intertwiner
/// basis matrix is invertible.
inline constexpr int kDefaultSearchBound = 2;
/// Upper limit on grid candidates examined before giving up.
inline constexpr std::size_t kMaxSearchCandidates = 200000;

/// Tries each intertwiner basis matrix, then integer combinations with
/// coefficients in [-bound, bound] in lexicographic order; the first
/// invertible candidate is scaled so its first nonzero entry (row-major) is 1.
ConjugationResult find_conjugation_matrix(const StructureConstants& sc,
                                          const MultOperators& ops,
                                          int search_bound = kDefaultSearchBound);

/// The values I_p = ∫x_p; any element integrates by linearity.
struct IntegrationFunctional {
  Vector values;

  friend bool operator==(const IntegrationFunctional&,
                         const IntegrationFunctional&) = default;
};

/// The first equation (i, j), in lexicographic order, that no functional
/// satisfying all earlier equations can satisfy.
struct InconsistentIntegral {
  IndexPair witness;
};

struct FirstTypeResult {
  std::variant<IntegrationFunctional, InconsistentIntegral> outcome;
  /// False when the system leaves free directions; the reported functional
  /// then sets every free unknown to zero.
  bool unique = true;
  /// Whether I_j = (C⁻¹)_uj agrees with the full solve, for a declared unit u.
  std::optional<bool> unital_shortcut_agrees;

  bool exists() const {
    return std::holds_alternative<IntegrationFunctional>(outcome);
  }
  const IntegrationFunctional& functional() const {
    return std::get<IntegrationFunctional>(outcome);
  }
  const IndexPair& witness() const {
    return std::get<InconsistentIntegral>(outcome).witness;
  }
};

/// Solves Σ_k f_ijk I_k = (C⁻¹)_ij over all (i, j).
FirstTypeResult first_type_integral(const StructureConstants& sc,
                                    const ConjugationMatrix& conj);

GaussScalar integrate(const IntegrationFunctional& fn, const AlgebraElement& a);

struct CompletenessCheck {
  bool holds = false;
  /// M_ij = ∫ x_i (x_k C_kj); holds iff M is the identity.
  ExactMatrix matrix;
  std::vector<IndexPair> failures;
};

CompletenessCheck verify_completeness(const StructureConstants& sc,
                                      const ConjugationMatrix& conj,
                                      const IntegrationFunctional& fn);

/// The bra ⟨x|_j = Σ_k x_k C_kj as an algebra element.
AlgebraElement bra_component(const ConjugationMatrix& conj, std::size_t j);

/// ⟨x|x⟩ = Σ_jk C_kj x_k x_j as an algebra element.
AlgebraElement self_scalar_product(const StructureConstants& sc,
                                   const ConjugationMatrix& conj);

/// ∫⟨a|x⟩ where the primed copy is replaced by the coefficients of a:
/// Σ_kj a_k C_kj I_j.
GaussScalar kernel_delta_check(const StructureConstants& sc,
                               const ConjugationMatrix& conj,
                               const IntegrationFunctional& fn,
                               const AlgebraElement& a);

/// The algebra A ⊗ A* with basis x_i ⊗ x*_j at index i·n + j. The two
/// factors commute, so F_(ij)(kl)(pq) = f_ikp f_jlq.
class ConjugateTensorAlgebra {
 public:
  explicit ConjugateTensorAlgebra(StructureConstants base);

  const StructureConstants& base() const { return base_; }
  std::size_t dim() const { return base_.dim() * base_.dim(); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * base_.dim() + j; }

  /// Product on A ⊗ A* computed factorwise; the tensor structure constants
  /// are never materialized.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Antilinear involution x_i ⊗ x*_j ↦ x_j ⊗ x*_i.
  AlgebraElement star(const AlgebraElement& a) const;

  /// x_i ⊗ 1 when A has a unit; nullopt otherwise.
  std::optional<AlgebraElement> embed_left(std::size_t i) const;
  /// 1 ⊗ x*_j when A has a unit; nullopt otherwise.
  std::optional<AlgebraElement> embed_right(std::size_t j) const;

  /// Dense F of dimension n². Intended for small n only.
  StructureConstants structure_constants() const;

 private:
  StructureConstants base_;
  std::optional<AlgebraElement> unit_;
};

struct SecondTypeResult {
  ConjugateTensorAlgebra algebra;
  /// ∫ x_i x*_j = δ_ij on the product basis.
  IntegrationFunctional functional;
  CompletenessCheck completeness;
};

/// Builds A ⊗ A*, assigns ∫ x_i x*_j = δ_ij and verifies ∫|x⟩⟨x̃*| = 1 by
/// expanding each entry x_i x*_j (through the tensor product when A is
/// unital).
SecondTypeResult second_type_functional(const StructureConstants& sc);

}  // namespace algint
