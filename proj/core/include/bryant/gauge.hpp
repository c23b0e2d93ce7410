#pragma once

#include "bryant/fuchsian.hpp"
#include "bryant/weierstrass.hpp"

namespace bryant {

/// The ten constants of the rational gauge that carries the spinor system
/// Psi_z = [[PQ, P^2], [-Q^2, -PQ]] Psi to the Fuchsian system with residue
/// eigenvalue alpha at 0 and residue [[beta, gamma], [delta, -beta]] at 1.
struct GaugeConstants {
  cplx alpha{0.0}, beta{0.0}, gamma{0.0}, delta{0.0};
  cplx mu{0.0}, k{0.0};
  cplx alpha1{0.0}, alpha2{0.0}, beta1{0.0}, beta2{0.0};
};

/// Evaluates the closed-form gauge constants.  Throws DegenerateData naming
/// the first denominator whose magnitude falls to 1e-12 or below.
GaugeConstants gauge_constants(const TrinoidData& w);

/// The linear-entry factor B(z) = [[P, alpha1 z + beta1],
/// [-Q, alpha2 z + beta2]]; det B = 1 identically by construction.
Mat2 gauge_B(const TrinoidData& w, const GaugeConstants& gc, cplx z);

/// Full gauge D(z) = B(z) C(z) M with the square-root middle factor
/// C = [[s, 0], [k/(z s), 1/s]], s = sqrt(z-1) on the window arg in [0, 2pi)
/// shared with the canonical solutions, and M = [[2 alpha/mu, 0], [1, 1]].
/// Psi = D Phi maps Fuchsian solutions to solutions of the spinor system.
/// det D = 2 alpha / mu, z-independent.  z must stay 1e-8 away from 0 and 1.
Mat2 gauge_D(const TrinoidData& w, const GaugeConstants& gc, cplx z);

/// Exact z-derivative of gauge_D (no finite differences).
Mat2 gauge_D_prime(const TrinoidData& w, const GaugeConstants& gc, cplx z);

/// Fuchsian parameter block (alpha, beta, gamma, delta and the derived
/// tau, rho, a, b, c) matching the gauge.
FuchsianParams fuchsian_from(const GaugeConstants& gc);

}  // namespace bryant
