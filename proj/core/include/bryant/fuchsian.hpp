#pragma once

#include <functional>

#include "bryant/mat2.hpp"
#include "bryant/path.hpp"
#include "bryant/rk45.hpp"

namespace bryant {

/// Square root with nonnegative real part; for purely imaginary results the
/// root with nonnegative imaginary part.
cplx principal_root(cplx w);

/// w^e with arg w taken in [0, 2pi): the power branch on the plane slit
/// along the positive real axis, continuous from the upper side.  All fixed
/// branch choices in the canonical solutions use this window, for both the
/// z and the (z-1) factors.
cplx slit_pow(cplx w, cplx e);

/// Parameters of the rank-2 Fuchsian system
///
///   Phi' = (A0/z + A1/(z-1)) Phi,
///   A0 = diag(alpha, -alpha),   A1 = [[beta, gamma], [delta, -beta]],
///
/// together with the derived local exponent data
///   tau = sqrt(beta^2 + gamma*delta),
///   rho = sqrt((alpha+beta)^2 + gamma*delta)   (principal roots)
/// and the hypergeometric parameters a = alpha+tau+rho, b = alpha+tau-rho,
/// c = 2 alpha.
struct FuchsianParams {
  cplx alpha, beta, gamma, delta;
  cplx tau, rho;
  cplx a, b, c;

  static FuchsianParams from(cplx alpha, cplx beta, cplx gamma, cplx delta);
};

/// Generic means 2*alpha, 2*tau, 2*rho all at distance > 1e-9 from an
/// integer.  The closed-form solutions, connection matrices and monodromies
/// all require this; resonant cases would need logarithmic solutions.
bool is_generic(const FuchsianParams& p, double tol = 1e-9);

/// Throws ResonantParameters when is_generic fails.
void require_generic(const FuchsianParams& p, double tol = 1e-9);

/// Diagonal local exponents at the three singular points: the solutions
/// behave like z^(+-lambda0) at 0, (z-1)^(+-lambda1) at 1, z^(-+lambdainf)
/// at infinity.
struct LocalExponents {
  cplx lambda0;    // = alpha
  cplx lambda1;    // = tau
  cplx lambdainf;  // = rho
};

LocalExponents local_exponents(const FuchsianParams& p);

/// Which singular point a canonical solution is normalized at.
enum class Branch { zero, one, infinity };

/// Coefficient matrix A0/z + A1/(z-1) of the system.
Mat2 fuchsian_rhs(const FuchsianParams& p, cplx z);

/// Canonical fundamental solution normalized at the chosen singular point:
/// entries are fixed-branch powers of z and (z-1) times Gauss hypergeometric
/// functions of z, 1-z or 1/z respectively.  Near its point the solution is
/// (L + o(1)) * diag power of the local exponents, with constant leading
/// coefficient L.  Any two of them differ by a constant right factor (see
/// connection_matrices).
///
/// All three are genuine solutions of the system on both open half planes
/// and on the real segments interior to their arg windows (boundary values
/// are limits from the upper side).  For the solution at 1 this requires a
/// convention below the axis: its rows carry opposite powers of z, so for
/// Im z < 0 the formula is continued through (0, 1) rather than read off
/// the raw arg windows (which would not solve the system there).
///
/// Throws DegenerateData when an entry denominator (gamma, delta, and for
/// the branch at infinity also a, a-c, c-b, beta+tau) is below 1e-12 in
/// magnitude, ResonantParameters when the parameters are non-generic.
Mat2 canonical_phi(const FuchsianParams& p, Branch which, cplx z);

/// Constant right factors relating the canonical solutions:
///   phi0(z) = phi1(z) * E1 = phiinf(z) * Einf
/// on the common domain in the upper half plane (the fixed power branches
/// cut along the positive real axis, so the identities with these constants
/// hold for Im z > 0 and on the upper edge of the cuts).  E0 = I.  Below
/// the axis the right factor for the solution at 1 picks up the diagonal
/// monodromy factor of the origin: phi0 = phi1 * E1 * diag(e^{2 pi i alpha},
/// e^{-2 pi i alpha}) for Im z < 0.
struct ConnectionMatrices {
  Mat2 E1, Einf;
};

ConnectionMatrices connection_matrices(const FuchsianParams& p);

/// Transport loop around one singular point, based at z = 0.2: a circle
/// around 0, a tailed circle around 1, and a tailed big circle around
/// infinity (clockwise in the plane, i.e. positively oriented around
/// infinity).  Traversing the three in the order 0, 1, infinity is
/// null-homotopic in the thrice-punctured sphere, which is what makes the
/// cyclic relation hold for the transported monodromies.
PathSpec monodromy_loop(Branch around);

/// Whether the coefficient matrix acts from the left (Y' = A Y, the Fuchsian
/// frame convention) or from the right (Y' = Y A).
enum class MultSide { left, right };

/// Analytic continuation oracle: integrates Y' = A(z) Y (or Y' = Y A(z))
/// along the polyline, starting from the value `initial` at the first
/// waypoint, with an adaptive embedded Runge-Kutta pair at relative
/// tolerance 1e-10.  `start` must coincide with the first waypoint.
/// Throws StepUnderflow when the step controller collapses below 1e-13.
Mat2 ode_transport(const std::function<Mat2(cplx)>& A, cplx start,
                   const Mat2& initial, const PathSpec& path,
                   MultSide side = MultSide::left,
                   const Rk45Options& opt = {});

/// Monodromy data of the system in the basis of the canonical solution at 0:
/// closed forms for the counterclockwise loops around 0 and 1 (and around
/// infinity via the cyclic relation Minf * M1 * M0 = I), cross-validated
/// against ode_transport around each puncture.  The transport defects are
/// the relative max-abs differences between closed form and continuation;
/// m1_transport_sign records whether the continued monodromy at 1 matched
/// +M1 or -M1 (the closed form is stored as printed, with trace 2cos2pitau).
struct MonodromyBundle {
  Mat2 E1, Einf;
  Mat2 M0, M1, Minf;
  double defect0 = 0.0, defect1 = 0.0, defectinf = 0.0;
  int m1_transport_sign = +1;
};

/// Throws OracleMismatch when a closed-form monodromy and its transported
/// counterpart disagree by more than 1e-6 (relative) after the sign at 1 is
/// resolved; ResonantParameters for non-generic input.
MonodromyBundle monodromy_bundle(const FuchsianParams& p);

}  // namespace bryant
