#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/integration.hpp"
#include "algint/matrix.hpp"

namespace algint {

/// Largest algebra dimension analyze() accepts.
inline constexpr std::size_t kMaxAnalyzeDimension = 64;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassificationSection {
  std::size_t dim = 0;
  bool commutative = false;
  bool associative = false;
  std::optional<AssociatorWitness> associator_witness;
  bool unital = false;
  std::optional<Vector> unit;

  friend bool operator==(const ClassificationSection&, const ClassificationSection&) = default;
};

struct RepIdentitySection {
  bool x_rep_holds = false;
  bool pi_rep_holds = false;
  bool commute_holds = false;

  friend bool operator==(const RepIdentitySection&, const RepIdentitySection&) = default;
};

struct ConjugationSection {
  bool found = false;
  std::optional<ExactMatrix> c;
  /// "empty_intertwiner_space" or "no_invertible_found_up_to_bound".
  std::optional<std::string> failure;
  std::size_t intertwiner_dimension = 0;
  int search_bound = 0;
  std::size_t candidates_tried = 0;
  /// C·C̄ = 1; present only when C was found.
  std::optional<bool> cc_star_is_identity;

  friend bool operator==(const ConjugationSection&, const ConjugationSection&) = default;
};

struct FirstTypeSection {
  /// "exists", "inconsistent" or "no_conjugation".
  std::string status;
  std::optional<Vector> values;
  std::optional<IndexPair> witness;
  std::optional<bool> unique;
  std::optional<bool> unital_shortcut_agrees;
  std::optional<bool> completeness;

  friend bool operator==(const FirstTypeSection&, const FirstTypeSection&) = default;
};

struct SecondTypeSection {
  std::size_t dimension = 0;
  bool completeness = false;

  friend bool operator==(const SecondTypeSection&, const SecondTypeSection&) = default;
};

/// Σ_j C_kj I_j for the basis vector a = x_k.
struct KernelSample {
  std::size_t basis_index = 0;
  GaussScalar value;

  friend bool operator==(const KernelSample&, const KernelSample&) = default;
};

struct AlgebraReport {
  std::string name;
  ClassificationSection classification;
  RepIdentitySection rep_identities;
  ConjugationSection conjugation;
  FirstTypeSection first_type;
  SecondTypeSection second_type;
  /// ⟨x|x⟩, when C was found.
  std::optional<Vector> self_product;
  std::vector<KernelSample> kernel_samples;

  friend bool operator==(const AlgebraReport&, const AlgebraReport&) = default;
};

/// Runs the whole pipeline. Mathematical non-existence is recorded, not
/// thrown. Throws ResourceLimitError above kMaxAnalyzeDimension.
AlgebraReport analyze(const StructureConstants& sc, int search_bound = kDefaultSearchBound);

enum class ReportFormat { Text, Json };

std::string emit_report(const AlgebraReport& report, ReportFormat format);

/// Inverse of the JSON form. Throws std::invalid_argument on malformed input.
AlgebraReport parse_report_json(const std::string& text);

}  // namespace algint
