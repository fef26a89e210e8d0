#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/matrix.hpp"

namespace algint::catalog {

enum class Basis { ImaginaryWithUnit, Split };

/// Grassmann algebra on n generators. Basis index is the bitmask of the
/// generator subset (bit k-1 for θ_k), so index 0 is 1 and index 2ⁿ-1 is
/// θ_1θ_2⋯θ_n. Signs follow the inversion count of the merged subsets.
StructureConstants grassmann(std::size_t n);

/// Single generator with θ^(p+1) = 0; basis 1, θ, …, θ^p.
StructureConstants paragrassmann(std::size_t p);

/// ImaginaryWithUnit: 1, e_1, e_2, e_3 with e_Ae_B = -δ_AB + ε_ABC e_C.
/// Split: u_0, u_0*, u_+, u_-.
StructureConstants quaternion(Basis basis);

/// Rows are the split elements in e-basis coordinates:
/// u_0 = (1+ie_3)/2, u_0* = (1-ie_3)/2, u_± = (e_1±ie_2)/2.
ExactMatrix quaternion_split_change();

/// 2×2 image of an e-basis quaternion under 1 ↦ 1, e_A ↦ -iσ_A.
ExactMatrix pauli_image(const AlgebraElement& a);

/// ImaginaryWithUnit: 1, e_1..e_7 with e_Ae_B = -δ_AB + a_ABC e_C.
/// Split: u_0, u_0*, u_1, u_2, u_3, u_1*, u_2*, u_3*.
StructureConstants octonion(Basis basis);

/// Rows are the split elements in e-basis coordinates:
/// u_0 = (1+ie_7)/2, u_0* = (1-ie_7)/2, u_i = (e_i+ie_{i+3})/2,
/// u_i* = (e_i-ie_{i+3})/2.
ExactMatrix octonion_split_change();

/// Reference conjugation matrices. The intertwiner space of these algebras
/// has dimension above one, so the generic search may settle on a different
/// member; these are the choices matching the conjugation u ↦ u*.
/// Quaternion split: C = [[1,0,0,0],[0,1,0,0],[0,0,0,-1],[0,0,-1,0]].
ExactMatrix quaternion_split_conjugation();
/// Octonion split: 1 on the u_0, u_0* block, -1 pairing u_i with u_i*.
ExactMatrix octonion_split_conjugation();
/// Cyclic: C_ij = δ_((i+j) mod N, 0), the image of z ↦ z⁻¹.
ExactMatrix cyclic_conjugation(std::size_t n = 8);

/// x_i x_j = ε_ijk x_k on three generators; no unit.
StructureConstants su2();

/// Group algebra of Z_N: z^i z^j = z^((i+j) mod N).
StructureConstants cyclic(std::size_t n = 8);

/// One-sided toy with basis e, n_1..n_{N-1}: e is a left unit
/// (e·n_k = n_k), and every other product vanishes (n_k·e = 0). Left and
/// right multiplications are not similar, so no C exists.
StructureConstants shift(std::size_t n);

/// Names accepted by make(): grassmann, paragrassmann, quaternion,
/// quaternion_split, octonion, octonion_split, su2, cyclic, shift.
std::vector<std::string> names();

/// Builds a catalog algebra by name; `param` feeds the size parameter where
/// one exists. Throws std::invalid_argument on unknown names or bad params.
StructureConstants make(const std::string& name, std::size_t param);

/// The default parameterization of every catalog entry, for regression use.
std::vector<StructureConstants> all();

}  // namespace algint::catalog
