#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liecp/exterior.hpp"

namespace liecp {

/// Deterministic source of small rationals for randomized constructions.
/// All sampling uses raw engine draws, so sequences are reproducible across
/// platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int int_in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(int max_abs_num = 3, int max_den = 3) {
    const int num = int_in(-max_abs_num, max_abs_num);
    const int den = int_in(1, max_den);
    return Rational(num, den);
  }
  Rational nonzero_rational(int max_abs_num = 3, int max_den = 3) {
    Rational r;
    do { r = rational(max_abs_num, max_den); } while (r.is_zero());
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

/// Outcome of a pair classification: the type (h, k) or a reason why the
/// input is not a pair of the requested kind.
struct PairClass {
  bool ok = false;
  int h = -1, k = -1;
  std::string reason;
};

/// Type (h, k) of a contact pair: alpha1 ∧ (d alpha1)^h ∧ alpha2 ∧
/// (d alpha2)^k is a volume form, with (d alpha_i) vanishing at the next
/// power. h is found as the largest m with alpha1 ∧ (d alpha1)^m != 0.
PairClass classify_contact_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2);

/// Type (h, k) of a symplectic pair (both forms closed, h, k >= 1,
/// w1^h ∧ w2^k a volume form).
PairClass classify_symplectic_pair(const LieAlgebra& L, const AltForm& w1, const AltForm& w2);

/// Reeb vector fields of a contact pair: the unique solution of
///   alpha_i(Z_j) = delta_ij,  i_{Z_j} d(alpha_i) = 0.
/// Assembled as one exact linear system in the 2*dim unknowns; throws when
/// the system is singular or inconsistent (the input is not a contact pair).
std::pair<Vec, Vec> reeb_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2);

/// A verified contact pair: forms, type, Reeb fields and cached
/// differentials. Invariants ([Z1, Z2] = 0, the Reeb equations, the volume
/// condition) are established at construction.
struct ContactPair {
  LieAlgebra L{1};
  AltForm alpha1, alpha2;
  AltForm da1, da2;
  int h = 0, k = 0;
  Vec Z1, Z2;
};

ContactPair make_contact_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2);

/// Bases for the two splittings of the ambient space:
///   TG_i = ker d(alpha_i) ∩ ker alpha1 ∩ ker alpha2  (exact kernels),
///   TF1 = TG1 + span(Z2),  TF2 = TG2 + span(Z1).
/// The Z vector is appended last in each TF basis. Involutivity of TF1 and
/// TF2 is asserted, not assumed.
struct SplittingBases {
  std::vector<Vec> TG1, TG2;
  std::vector<Vec> TF1, TF2;
  Vec Z1, Z2;
};

SplittingBases splitting_bases(const ContactPair& P);

/// Structure tensor checks: phi^2 = -Id + alpha1 ⊗ Z1 + alpha2 ⊗ Z2,
/// phi(Z_i) = 0, and the derived facts alpha_i ∘ phi = 0 and
/// rank phi = dim - 2.
VerificationReport verify_cps(const ContactPair& P, const Endo& phi);

struct ContactPairStructure {
  ContactPair pair;
  Endo phi;
};

/// Builds the structure and throws unless verify_cps passes.
ContactPairStructure make_cps(ContactPair pair, Endo phi);

/// Does phi preserve both characteristic subbundles? Checks membership of
/// phi(b) in span(TF_i) for every basis vector of TF_i, and phi(TG_i) ⊆ TG_i.
VerificationReport is_decomposable(const ContactPair& P, const Endo& phi, const SplittingBases& S);

/// One Darboux plane: sigma(u, v) = 1.
struct DarbouxPair {
  Vec u, v;
};

/// Exact symplectic Gram-Schmidt of sigma restricted to span(basis).
/// Deterministic given the basis order; throws if the restriction is
/// degenerate.
std::vector<DarbouxPair> darboux_basis(const AltForm& sigma, std::vector<Vec> basis);

/// Applies `count` random symplectic transvections x -> x + t sigma(x, a) a
/// to a Darboux family (the result is again a Darboux basis of sigma).
std::vector<DarbouxPair> randomize_darboux(const AltForm& sigma, std::vector<DarbouxPair> pairs,
                                           Rng& rng, int count = 4);

/// Decomposable structure tensor from exact Darboux bases of
/// d(alpha2)|TG1 and d(alpha1)|TG2: the standard rotation in each Darboux
/// plane, zero on the Reeb directions. With an Rng, the Darboux bases are
/// first moved by random symplectic transvections, which samples the family
/// of invariant decomposable tensors.
Endo construct_decomposable_phi(const ContactPair& P, const SplittingBases& S);
Endo construct_decomposable_phi(const ContactPair& P, const SplittingBases& S, Rng& rng);

/// A verified contact-symplectic pair (beta, eta) with its Reeb field W and
/// the splitting ambient = span(W) ⊕ TH ⊕ TF2, where d(beta) is symplectic
/// on TH = ker beta ∩ ker eta and eta is symplectic on
/// TF2 = ker beta ∩ ker d(beta).
struct ContactSymplecticPair {
  LieAlgebra L{1};
  AltForm beta, eta;
  AltForm dbeta;
  int h = 0, k = 0;
  Vec W;
  std::vector<Vec> TH, TF2;
};

struct CspResult {
  bool ok = false;
  std::string reason;
  std::optional<ContactSymplecticPair> value;
};

CspResult classify_contact_symplectic(const LieAlgebra& L, const AltForm& beta, const AltForm& eta);
ContactSymplecticPair make_contact_symplectic(const LieAlgebra& L, const AltForm& beta, const AltForm& eta);

/// psi^2 = -Id + beta ⊗ W and psi(W) = 0.
VerificationReport verify_acss(const ContactSymplecticPair& C, const Endo& psi);

/// Does psi preserve TH and TF2?
VerificationReport psi_decomposable(const ContactSymplecticPair& C, const Endo& psi);

struct AlmostContactSymplecticStructure {
  ContactSymplecticPair csp;
  Endo psi;
};

AlmostContactSymplecticStructure make_acss(ContactSymplecticPair csp, Endo psi);

/// Decomposable psi from Darboux bases of d(beta)|TH and eta|TF2.
Endo construct_decomposable_psi(const ContactSymplecticPair& C);
Endo construct_decomposable_psi(const ContactSymplecticPair& C, Rng& rng);

/// Rows spanning the constraints "w(., e_j) = 0": row j, column i holds
/// w(e_i, e_j). Kernel of this matrix = kernel distribution of the 2-form.
Matrix two_form_rows(const AltForm& w);

}  // namespace liecp
