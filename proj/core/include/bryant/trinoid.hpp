#pragma once

#include "bryant/fuchsian.hpp"
#include "bryant/gauge.hpp"
#include "bryant/minkowski.hpp"
#include "bryant/unitarize.hpp"
#include "bryant/weierstrass.hpp"

namespace bryant {

/// Everything the pointwise trinoid evaluation needs, computed once per
/// dataset and shared read-only afterwards: the data and its derived
/// constants, the monodromy/connection bundle, the unitarizer, and the
/// normalizing scalar making det Psi = 1.  Construction cross-validates
/// the pieces against each other and throws OracleMismatch if any
/// internal consistency check fails.
struct TrinoidBundle {
  TrinoidData data;
  Pairings pair;
  EndExponents exponents;
  GaugeConstants gauge;
  FuchsianParams params;
  MonodromyBundle monodromy;
  UnitarizableDecision decision;
  double r{1.0};             // unitarizer scale, R = diag(r, 1/r)
  Mat2 R;
  cplx det_psi{1.0};         // det of the un-normalized solution (constant)
  cplx inv_sqrt_det{1.0};    // scalar applied to reach det Psi = 1
  double unitary_defect{0.0};     // worst defect of the conjugated group
  double validation_defect{0.0};  // worst cross-representation defect
};

/// Builds the bundle.  Throws NotUnitarizable (with the failing condition
/// and margin in the message) when the monodromy group admits no diagonal
/// unitarizer, ResonantParameters / DegenerateData from the ingredients,
/// and OracleMismatch when internal cross-checks exceed their tolerances
/// (unitary defect 1e-8, determinant constancy and representation
/// agreement 1e-6).
TrinoidBundle make_trinoid_bundle(const TrinoidData& w);

/// Which canonical representation evaluates best at z: the singular point
/// nearest in the sense argmin(|z|, |z-1|, 1/|z|), ties resolved toward
/// 0, then 1, then infinity.
Branch representation_at(cplx z);

/// Normalized dressed solution Psi(z) with det Psi = 1: the gauge times
/// the canonical solution in the chosen representation, carried back to
/// the representation at 0 by the connection constants (below the real
/// axis the constant for the representation at 1 picks up the diagonal
/// monodromy factor of the origin), dressed by R and the det scalar.
/// All representations agree wherever they are defined; the choice only
/// affects conditioning.  z must stay 1e-8 away from the punctures.
Mat2 psi_eval(const TrinoidBundle& tb, cplx z);
Mat2 psi_eval_with_branch(const TrinoidBundle& tb, cplx z, Branch rep);

/// Value and exact z-derivative (no finite differences) of psi_eval.
struct PsiJet {
  Mat2 psi, psi_z;
};
PsiJet psi_jet(const TrinoidBundle& tb, cplx z);
PsiJet psi_jet_with_branch(const TrinoidBundle& tb, cplx z, Branch rep);

/// The immersion F = Psi Psi*: a positive hermitian matrix with
/// det F = 1, i.e. a point of hyperbolic 3-space in the hermitian model.
Herm2 immersion_F(const TrinoidBundle& tb, cplx z);

}  // namespace bryant
