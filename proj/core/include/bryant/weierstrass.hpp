#pragma once

#include "bryant/mat2.hpp"

namespace bryant {

/// Rational spinor data of a trinoid with catenoidal ends at 0, 1, infinity:
///   P = p0/z + p1/(z-1) + pinf,   Q = q0/z + q1/(z-1) + qinf.
struct TrinoidData {
  cplx p0{0.0}, p1{0.0}, pinf{0.0};
  cplx q0{0.0}, q1{0.0}, qinf{0.0};
};

/// Antisymmetric residue pairings s_ij = p_i q_j - p_j q_i and their
/// symmetric combination delta = s10 s0inf + s10 s1inf + s0inf s1inf.
struct Pairings {
  cplx s10{0.0}, s0inf{0.0}, s1inf{0.0};
  cplx delta{0.0};
};

/// Computes the three pairings and delta.  Throws DegenerateData naming the
/// first quantity whose magnitude falls to 1e-10 or below: every downstream
/// formula divides by each of them.
Pairings pairings(const TrinoidData& w);

/// Per-end exponent data.  c_j is the quadratic coefficient of the local
/// monodromy (c0 = s10 + s0inf and cyclic), d_j = 1/4 + c_j the shifted
/// value, and the end exponent is 1/2 + sqrt(d_j).
struct EndExponents {
  cplx c0{0.0}, c1{0.0}, cinf{0.0};
  cplx d0{0.0}, d1{0.0}, dinf{0.0};
  cplx alpha0{0.0}, alpha1{0.0}, alphainf{0.0};
};

/// Computes the end exponents twice: from the pairings and from the local
/// Laurent coefficients of P, Q at each puncture (r = a_{-1} b_0 - a_0 b_{-1}
/// in local coordinates).  Throws MismatchedExponents if the two routes
/// differ by more than 1e-10.
EndExponents end_exponents(const TrinoidData& w);

/// Reduction of a real number to the half-open window [-1/2, 1/2):
/// returns the unique y in that window with x - y an integer.
double frac_half(double x);

/// Evaluations of the rational data and their exact derivatives.
cplx eval_P(const TrinoidData& w, cplx z);
cplx eval_Q(const TrinoidData& w, cplx z);
cplx eval_P_prime(const TrinoidData& w, cplx z);
cplx eval_Q_prime(const TrinoidData& w, cplx z);

/// Coefficient matrix [[PQ, P^2], [-Q^2, -PQ]] of the left-multiplication
/// linear system Psi_z = A Psi generated by the spinor data.
Mat2 spinor_system(const TrinoidData& w, cplx z);

/// Hopf differential coefficient P'Q - Q'P and hyperbolic Gauss map -P/Q.
/// When Q(z) = 0 the Gauss value is the point at infinity: at_infinity is
/// set and gauss is not meaningful.
struct HopfGauss {
  cplx hopf{0.0};
  cplx gauss{0.0};
  bool at_infinity{false};
};
HopfGauss hopf_and_gauss(const TrinoidData& w, cplx z);

/// Gauss map as a plain value; throws GaussMapPole when Q(z) = 0.
cplx gauss_map(const TrinoidData& w, cplx z);

/// Builds trinoid data whose three ends sit at the fixed ideal points used
/// throughout: p0 = (2-sqrt(3)) q0, p1 = -q1, pinf = (2+sqrt(3)) qinf.
/// Throws DegenerateData when any q vanishes.
TrinoidData normalize_ends(cplx q0, cplx q1, cplx qinf);

/// One-parameter family of end-normalized data with d0 = d1 = dinf: all
/// three pairings equal -(1/4 - d0)/2.  d0 = 1/4 collapses the data to zero
/// (DegenerateData); the construction itself accepts any other real d0 and
/// verifies the achieved d-values to 1e-10 (NotRepresentable otherwise).
TrinoidData symmetric_family(double d0);

/// End-normalized data realizing a prescribed d-triple, via the linear
/// relation between the residue products and the pairings.  Throws
/// DegenerateData when the requested triple forces a vanishing pairing.
TrinoidData trinoid_from_d(double d0, double d1, double dinf);

}  // namespace bryant
