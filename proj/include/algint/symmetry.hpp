#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/integration.hpp"

namespace algint {

using IndexTriple = std::array<std::size_t, 3>;

struct SymmetryCheck {
  bool holds = false;
  std::string reason;
  /// Index triples where the defining identity fails (capped).
  std::vector<IndexTriple> violations;
};

/// S_il S_jm f_lmp = g_ijk S_kp for all i, j, p: the rows of S, read as
/// elements of `from`, multiply with the constants of `to`.
SymmetryCheck is_isomorphism(const StructureConstants& from,
                             const StructureConstants& to, const ExactMatrix& s);

/// x'_i = S_ij x_j is an invertible map preserving f_ijk.
SymmetryCheck is_automorphism(const StructureConstants& sc, const ExactMatrix& s);

struct NotProportional {
  IndexPair witness;
};

struct KFactorResult {
  std::variant<GaussScalar, NotProportional> outcome;

  bool proportional() const { return std::holds_alternative<GaussScalar>(outcome); }
  const GaussScalar& k() const { return std::get<GaussScalar>(outcome); }
};

/// Tests C⁻¹SᵀC·S = k·1 and returns k, or the first entry (row-major)
/// breaking proportionality. Throws AlgebraError when S is singular.
KFactorResult schur_k_factor(const StructureConstants& sc,
                             const ConjugationMatrix& conj, const ExactMatrix& s);

/// ∫' = (1/k)∫. Throws std::domain_error for k = 0.
IntegrationFunctional transform_measure(const IntegrationFunctional& fn,
                                        const GaussScalar& k);

/// Completeness ∫' x'_i (x'_m C_mj) = δ_ij in the basis x'_i = S_ij x_j,
/// with the primed functional applied to the unprimed expansion.
CompletenessCheck primed_completeness(const StructureConstants& sc,
                                      const ConjugationMatrix& conj,
                                      const ExactMatrix& s,
                                      const IntegrationFunctional& primed);

/// Leibniz rule Σ_m (D_im f_mjk + D_jm f_imk) = Σ_m f_ijm D_mk.
SymmetryCheck is_derivation(const StructureConstants& sc, const ExactMatrix& d);

class NotExponentiable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// exp(αD) as the finite sum Σ αᵐDᵐ/m!. Only nilpotent D is accepted.
ExactMatrix exponentiate_derivation(const ExactMatrix& d, const Rational& alpha);

/// ∫D(f) = 0 for every f, i.e. D·I = 0.
bool derivation_annihilation_check(const IntegrationFunctional& fn,
                                   const ExactMatrix& d,
                                   const StructureConstants& sc);

/// Re-expresses the algebra in the basis y_i = T_ij x_j:
/// g_ijk = Σ T_il T_jm f_lmp (T⁻¹)_pk. The unit index is dropped unless the
/// unit stays a basis vector.
StructureConstants change_basis(const StructureConstants& sc, const ExactMatrix& t,
                                std::string name);

/// C in the basis y = T x, chosen so the completeness relation is unchanged:
/// C' = T⁻ᵀ C T⁻¹.
ConjugationMatrix transport_conjugation(const ConjugationMatrix& conj,
                                        const ExactMatrix& t);

/// Functional values on the basis y = T x: I'_i = Σ_j T_ij I_j.
IntegrationFunctional transport_functional(const IntegrationFunctional& fn,
                                           const ExactMatrix& t);

}  // namespace algint
