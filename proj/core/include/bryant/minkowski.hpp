#pragma once

#include <array>
#include <cmath>

#include "bryant/error.hpp"
#include "bryant/mat2.hpp"

namespace bryant {

/// Point of Minkowski 4-space R^{3,1}, signature (-,+,+,+).
struct LorentzVec {
  double x0{0.0}, x1{0.0}, x2{0.0}, x3{0.0};
};

/// Hermitian 2x2 matrix.  Construction symmetrizes (X + X*)/2 and records
/// the pre-symmetrization defect so downstream invariants stay exactly
/// testable; the stored matrix satisfies m21 == conj(m12) and real diagonal
/// by construction.
struct Herm2 {
  Mat2 m;
  double defect{0.0};  // max-entry magnitude of X - X* before symmetrizing

  static Herm2 from(const Mat2& x) {
    Herm2 h;
    h.defect = max_abs(x - adjoint(x));
    h.m = 0.5 * (x + adjoint(x));
    // Kill roundoff in the parts that must vanish identically.
    h.m.a = cplx(h.m.a.real(), 0.0);
    h.m.d = cplx(h.m.d.real(), 0.0);
    h.m.c = std::conj(h.m.b);
    return h;
  }
};

/// Identification of R^{3,1} with Herm(2):
///   X = [[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]].
inline Herm2 herm_from_lorentz(const LorentzVec& x) {
  Mat2 m{cplx(x.x0 + x.x3, 0.0), cplx(x.x1, x.x2),
         cplx(x.x1, -x.x2), cplx(x.x0 - x.x3, 0.0)};
  return Herm2::from(m);
}

/// Inverse identification.  Accepts a raw matrix; hermiticity defect above
/// 1e-9 throws NotHermitian.
inline LorentzVec lorentz_from_herm(const Mat2& m) {
  const double defect = max_abs(m - adjoint(m));
  if (defect > 1e-9) {
    throw Error(ErrorKind::NotHermitian, "hermiticity defect above 1e-9");
  }
  const Mat2 h = 0.5 * (m + adjoint(m));
  return LorentzVec{0.5 * (h.a.real() + h.d.real()), h.b.real(), h.b.imag(),
                    0.5 * (h.a.real() - h.d.real())};
}

inline LorentzVec lorentz_from_herm(const Herm2& h) {
  return lorentz_from_herm(h.m);
}

/// Minkowski scalar product <X,Y> = -1/2 tr(X sigma2 Y^T sigma2); satisfies
/// <X,X> = -det X.
inline double minkowski_dot(const Herm2& xh, const Herm2& yh) {
  const Mat2& x = xh.m;
  const Mat2& y = yh.m;
  static const Mat2 sigma2{0.0, -kI, kI, 0.0};
  const Mat2 prod = x * sigma2 * transpose(y) * sigma2;
  return -0.5 * trace(prod).real();
}

inline double minkowski_dot(const LorentzVec& x, const LorentzVec& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

/// Projection of the upper unit hyperboloid onto the open unit ball:
/// (x1, x2, x3)/(1 + x0).  Input more than 1e-6 off the hyperboloid (or on
/// the lower sheet) throws NotOnHyperboloid.
inline std::array<double, 3> to_poincare_ball(const LorentzVec& x) {
  const double norm2 = minkowski_dot(x, x);
  if (std::abs(norm2 + 1.0) > 1e-6 || !(x.x0 > 0.0)) {
    throw Error(ErrorKind::NotOnHyperboloid,
                "point off the upper unit hyperboloid beyond 1e-6");
  }
  const double s = 1.0 / (1.0 + x.x0);
  return {x.x1 * s, x.x2 * s, x.x3 * s};
}

}  // namespace bryant
