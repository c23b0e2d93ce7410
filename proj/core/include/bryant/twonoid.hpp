#pragma once

#include "bryant/mat2.hpp"
#include "bryant/minkowski.hpp"

namespace bryant {

/// Rational spinor data of a twonoid (catenoid cousin) with catenoidal ends
/// at 0 and infinity:
///   P = p0/z + pinf,  Q = q0/z + qinf,
/// solvable in elementary functions.  The derived quantities are
///   w = p0*qinf - pinf*q0,  lambda = sqrt(1 + 4w)/2,  c = sqrt(w/(2 lambda)),
/// and the frame is Psi = Psi0 * A with a hermitian unit-determinant right
/// factor A (identity unless supplied).
///
/// Construction throws DegenerateData when w is within 1e-12 of 0 or -1/4
/// (the closed form degenerates), and HalfIntegerLambda when 2*lambda is
/// within 1e-9 of an integer on the default path: there the dressing A is
/// genuinely arbitrary and must be chosen by the caller.  A supplied A must
/// be hermitian (NotHermitian) with determinant 1.
struct TwonoidData {
  cplx p0{0.0}, pinf{0.0}, q0{0.0}, qinf{0.0};
  cplx w{0.0};
  cplx lambda{0.0};
  cplx c{0.0};
  Mat2 A = Mat2::identity();

  static TwonoidData from(cplx p0, cplx pinf, cplx q0, cplx qinf);
  static TwonoidData from(cplx p0, cplx pinf, cplx q0, cplx qinf,
                          const Mat2& A);
};

/// Spinor values P, Q and the coefficient matrix of Psi_z = M Psi.
cplx eval_P(const TwonoidData& t, cplx z);
cplx eval_Q(const TwonoidData& t, cplx z);
Mat2 spinor_system(const TwonoidData& t, cplx z);

/// Closed-form frame Psi(z) = c * B * diag(z^1/2, z^-1/2) * C *
/// diag(z^lambda, z^-lambda) * A on the principal branch (cut along the
/// negative real axis); det Psi = 1.  z must stay 1e-8 away from 0.
Mat2 twonoid_psi(const TwonoidData& t, cplx z);

/// Frame together with its exact z-derivative.
struct TwonoidJet {
  Mat2 psi, psi_z;
};
TwonoidJet twonoid_jet(const TwonoidData& t, cplx z);

/// Monodromy of Psi around 0 (counterclockwise, as a right factor):
///   M0 = -A^{-1} diag(e^{2 pi i lambda}, e^{-2 pi i lambda}) A,
/// unitary exactly when lambda is real.
Mat2 twonoid_monodromy(const TwonoidData& t);

/// The immersion F = Psi Psi* into the unit-determinant hyperboloid sheet.
Herm2 immersion_F(const TwonoidData& t, cplx z);

}  // namespace bryant
