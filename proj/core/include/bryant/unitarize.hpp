#pragma once

#include <array>

#include "bryant/fuchsian.hpp"
#include "bryant/gauge.hpp"
#include "bryant/weierstrass.hpp"

namespace bryant {

/// Real shifted end exponents d_j = 1/4 + c_j and the reduced triple
/// Delta_j = |frac_half(sqrt(d_j))| they induce (each in [0, 1/2]).
struct ModuliPoint {
  double d0{0.0}, d1{0.0}, dinf{0.0};
  double delta1{0.0}, delta2{0.0}, delta3{0.0};
};

/// Outcome of the unitarizability test.  The four margins are the signed
/// slacks of the strict inequalities cutting out the admissible open
/// region: sum - 1/2 and the three of 1/2 - (pairwise sum minus third),
/// all positive exactly on the region.  margin is their minimum.
struct UnitarizableDecision {
  bool unitarizable{false};
  bool exponents_real{false};  // condition (i): d_j real and >= 0
  ModuliPoint moduli;
  std::array<double, 4> margins{0.0, 0.0, 0.0, 0.0};
  double margin{0.0};
  double trig_product{0.0};  // sin(pi a) sin(pi b) sin(pi(a-c)) sin(pi(b-c))
};

/// The product of condition (ii); negative exactly on the admissible
/// region (boundary-band caveats aside).  Requires d_j >= 0.
double trig_product(double d0, double d1, double dinf);

/// Pure decision on a real d-triple.  Cross-checks the reduced-triple
/// region test against the sign of trig_product; a disagreement outside
/// the 1e-9 boundary band throws InconsistentCriteria.
UnitarizableDecision moduli_decision(double d0, double d1, double dinf);

/// Full route from trinoid data: computes the d-triple, requires each to
/// be real within imaginary tolerance 1e-10 (condition (i) fails
/// otherwise, decision false), then applies moduli_decision.
UnitarizableDecision unitarizable(const TrinoidData& w);

/// Closed-form positive scale r of the diagonal unitarizer R = diag(r, 1/r):
/// r^4 balances the off-diagonal entries of the conjugated monodromy at 1
/// through a Gamma-function ratio.  Throws NotUnitarizable when the
/// quantity r^4 must invert fails to be positive real (within 1e-8
/// relative imaginary tolerance), which is exactly the failure of
/// condition (ii).
double unitarizer_r(const FuchsianParams& fp, const GaugeConstants& gc);

/// Worst unitarity defect of R^{-1} M R over the monodromies around 0, 1
/// and infinity, R = diag(r, 1/r).
double unitarity_defect_for_r(const MonodromyBundle& mb, double r);

/// Brute-force oracle for the unitarizer scale: log-spaced scan of
/// r in [1e-3, 1e3] followed by golden-section refinement around the best
/// sample; returns the minimizing r (regardless of how good the minimum
/// is -- callers inspect the defect).
double scan_unitarizer_r(const MonodromyBundle& mb);

}  // namespace bryant
