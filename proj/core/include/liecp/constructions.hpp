#pragma once

#include "liecp/normality.hpp"

namespace liecp {

/// Re-indexing helpers for direct sums and central extensions.
Vec embed_vec(const Vec& v, int total, int offset);
AltForm embed_form(const AltForm& f, int total, int offset);
Endo embed_endo(const Endo& f, int total, int offset);

/// One almost contact factor: alpha(Z) = 1, phi^2 = -Id + alpha ⊗ Z,
/// phi(Z) = 0.
struct AlmostContactFactor {
  LieAlgebra L;
  AltForm alpha;
  Vec Z;
  Endo phi;
};

VerificationReport verify_almost_contact(const AlmostContactFactor& F);

struct ProductSpec {
  AlmostContactFactor left, right;
};

/// Direct sum of two almost contact factors: block-diagonal algebra, forms
/// extended by zero, phi = phi1 ⊕ phi2. The output passes verify_cps, is
/// decomposable, and classifies as type ((dim_left - 1)/2, (dim_right - 1)/2);
/// all of this is asserted.
ContactPairStructure direct_sum(const ProductSpec& P);

/// Central extension of L by the 2-form eta: one extra basis vector e_{n+1}
/// (central) with [X, Y]_new = [X, Y] - eta(X, Y) e_{n+1}. The extension
/// satisfies the Jacobi identity iff d(eta) = 0; no check here.
LieAlgebra central_extension(const LieAlgebra& L, const AltForm& eta);

/// Result of lifting an almost contact-symplectic structure one dimension up:
/// alpha1 dual to the new central direction, alpha2 the pullback of beta, phi
/// the lift of psi. d(alpha1) equals the pullback of eta by construction.
struct BoothbyWangExtension {
  LieAlgebra algebra{1};
  AltForm alpha1, alpha2;
  Endo phi;
  PairClass cls;                                  // classification of (alpha1, alpha2)
  std::optional<ContactPairStructure> structure;  // present when cls.ok
};

/// Unchecked version: builds the extension for arbitrary (beta, eta, psi)
/// and reports how (alpha1, alpha2) classifies. Degenerate inputs (eta = 0,
/// non-closed eta, ...) surface as classification failures or Jacobi
/// failures downstream.
BoothbyWangExtension boothby_wang_extend_raw(const LieAlgebra& L, const AltForm& beta,
                                             const AltForm& eta, const Endo& psi);

/// Checked version. Asserts: the pair classifies, d(alpha1) = pullback of
/// eta, verify_cps passes, L_{Z1} phi = 0, Z2 is the lift of W, and phi is
/// decomposable whenever psi is.
BoothbyWangExtension boothby_wang_extend(const AlmostContactSymplecticStructure& A);

/// The three base-space conditions equivalent to integrability of J on the
/// extension:
///   (1) eta(X, Y) - eta(psi X, psi Y) - d(beta)(psi X, Y) - d(beta)(X, psi Y) = 0,
///   (2) [psi,psi](X,Y) + [d(beta)(X,Y) + eta(psi X, Y) + eta(X, psi Y)] W = 0,
///   (3) L_W psi = 0.
/// j_integrable_upstairs is computed independently on the actual extension
/// and equivalence_holds records that the conjunction matches it.
struct BwBaseConditions {
  bool eta_compatibility = false;
  bool nijenhuis_compatibility = false;
  bool reeb_invariance = false;
  bool j_integrable_upstairs = false;
  bool equivalence_holds = false;
  std::map<std::string, Violation> witnesses;

  bool all() const { return eta_compatibility && nijenhuis_compatibility && reeb_invariance; }
};

BwBaseConditions bw_base_conditions(const AlmostContactSymplecticStructure& A);

/// eta(psi X, psi Y) = eta(X, Y) on all basis pairs.
VerificationReport eta_invariance(const AlmostContactSymplecticStructure& A);

/// Central extension of a symplectic pair by its first form; the result is a
/// contact-symplectic pair (beta the new covector, eta the pullback of w2).
ContactSymplecticPair extend_symplectic_pair(const LieAlgebra& L, const AltForm& w1,
                                             const AltForm& w2);

/// Convenience pipeline: extend by w1, equip the intermediate
/// contact-symplectic pair with a Darboux-built decomposable psi, extend
/// again. Produces a contact pair structure two dimensions up.
BoothbyWangExtension double_boothby_wang(const LieAlgebra& L, const AltForm& w1,
                                         const AltForm& w2);

}  // namespace liecp
