#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "bryant/error.hpp"

namespace bryant {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// 2x2 complex matrix, row-major: [[a, b], [c, d]].
/// The workhorse carrier for SL(2,C) frames, monodromies and Herm(2) points.
/// Immutable in spirit: all operations return new values.
struct Mat2 {
  cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(cplx p, cplx q) { return {p, 0.0, 0.0, q}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(cplx s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  friend Mat2 operator*(const Mat2& x, cplx s) { return s * x; }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
};

inline cplx det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
inline cplx trace(const Mat2& m) { return m.a + m.d; }

inline Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }
inline Mat2 conj(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d)};
}
/// Conjugate transpose M*.
inline Mat2 adjoint(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

/// Max absolute entry; the norm used in every defect measure.
inline double max_abs(const Mat2& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

/// Closed-form adjugate inverse.  2x2 only, so this is exact up to the
/// final division.  Throws SingularMatrix when |det| <= 1e-300.
inline Mat2 inverse(const Mat2& m) {
  const cplx dt = det(m);
  if (std::abs(dt) <= 1e-300) {
    throw Error(ErrorKind::SingularMatrix, "2x2 inverse with |det| <= 1e-300");
  }
  const cplx s = 1.0 / dt;
  return {s * m.d, -s * m.b, -s * m.c, s * m.a};
}

inline bool is_sl(const Mat2& m, double tol = 1e-10) {
  return std::abs(det(m) - 1.0) <= tol;
}

inline bool all_finite(const Mat2& m) {
  auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(m.a) && ok(m.b) && ok(m.c) && ok(m.d);
}

/// Max-entry magnitude of M M* - I; zero exactly when M is unitary.
inline double unitarity_defect(const Mat2& m) {
  return max_abs(m * adjoint(m) - Mat2::identity());
}

}  // namespace bryant
