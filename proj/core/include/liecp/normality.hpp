#pragma once

#include "liecp/pairs.hpp"

namespace liecp {

/// Associated almost complex structures of a contact pair structure:
///   J = phi - alpha2 ⊗ Z1 + alpha1 ⊗ Z2,
///   T = phi + alpha2 ⊗ Z1 - alpha1 ⊗ Z2.
/// build_J / build_T assert J^2 = T^2 = -Id and J T = T J.
Endo build_J(const ContactPairStructure& S);
Endo build_T(const ContactPairStructure& S);

/// Nijenhuis tensor of J computed term by term from the structure data:
///   N_J(X,Y) = [phi,phi](X,Y) + d(alpha1)(X,Y) Z1 + d(alpha2)(X,Y) Z2
///            + alpha1(X) (L_{Z2} phi)(Y) - alpha1(Y) (L_{Z2} phi)(X)
///            + alpha2(Y) (L_{Z1} phi)(X) - alpha2(X) (L_{Z1} phi)(Y)
///            + [(L_{phi X} alpha1)(Y) - (L_{phi Y} alpha1)(X)] Z2
///            + [(L_{phi Y} alpha2)(X) - (L_{phi X} alpha2)(Y)] Z1.
/// Must agree with nijenhuis_complex(build_J) on every basis pair; the two
/// routes are independent and cross-check each other.
VecValued2Form nj_expanded(const ContactPairStructure& S);

/// Same with the roles of the two forms interchanged (all Lie-derivative
/// correction terms flip sign); cross-checks nijenhuis_complex(build_T).
VecValued2Form nt_expanded(const ContactPairStructure& S);

/// The normality obstruction
///   [phi,phi](X,Y) + d(alpha1)(X,Y) Z1 + d(alpha2)(X,Y) Z2;
/// the structure is normal iff this tensor vanishes identically.
VecValued2Form normality_tensor(const ContactPairStructure& S);

/// The K-contact analogue: does phi commute with the Reeb flows?
struct KContactFlags {
  bool LZ1_phi_zero = false;
  bool LZ2_phi_zero = false;
};
KContactFlags k_contact_flags(const ContactPairStructure& S);

/// Normality of an almost contact structure (alpha, Z, phi):
///   [phi,phi](X,Y) + d(alpha)(X,Y) Z = 0 on all basis pairs.
/// Preconditions phi^2 = -Id + alpha ⊗ Z, phi(Z) = 0, alpha(Z) = 1 are
/// enforced.
VerificationReport almost_contact_normality(const LieAlgebra& L, const AltForm& alpha,
                                            const Vec& Z, const Endo& phi);

/// Aggregated normality verdicts for one contact pair structure. The leaf
/// flags (eq9, eq10, eq11, induced) are only defined for decomposable phi.
struct NormalityReport {
  bool pair_normal = false;
  bool J_integrable = false;
  bool T_integrable = false;
  bool LZ1_phi_zero = false;
  bool LZ2_phi_zero = false;
  bool decomposable = false;
  std::optional<bool> eq9, eq10, eq11;
  std::optional<bool> induced1_normal, induced2_normal;
  /// First failing basis pair (lexicographic) per failed flag.
  std::map<std::string, Violation> witnesses;
};

/// The split system for decomposable phi:
///   eq9:  [phi,phi](X,Y) + d(alpha1)(X,Y) Z1 = 0 on TF2 x TF2,
///   eq10: [phi,phi](X,Y) + d(alpha2)(X,Y) Z2 = 0 on TF1 x TF1,
///   eq11: [phi,phi](X,Y) = 0 on TF1 x TF2.
/// Their conjunction must equal the vanishing of the normality tensor; this
/// is asserted. Throws for non-decomposable phi.
NormalityReport split_system_check(const ContactPairStructure& S, const SplittingBases& B);

/// Normality of the structure induced on the leaves of foliation 2 (which=1,
/// the (alpha1, Z1) structure on TF2) or foliation 1 (which=2). Equals
/// eq9/eq10 of the split system; throws for non-decomposable phi.
VerificationReport induced_normality(const ContactPairStructure& S, const SplittingBases& B,
                                     int which);

/// Full report; computes the splitting and decomposability itself and fills
/// every flag that is defined. Asserts pair_normal == (J and T integrable).
NormalityReport normality_report(const ContactPairStructure& S);

}  // namespace liecp
