#include "bryant/twonoid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bryant/error.hpp"

namespace bryant {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateTol = 1e-12;
constexpr double kHalfIntegerTol = 1e-9;

TwonoidData build(cplx p0, cplx pinf, cplx q0, cplx qinf, const Mat2& A,
                  bool explicit_A) {
  TwonoidData t;
  t.p0 = p0;
  t.pinf = pinf;
  t.q0 = q0;
  t.qinf = qinf;
  t.w = p0 * qinf - pinf * q0;
  if (std::abs(t.w) <= kDegenerateTol) {
    throw Error(ErrorKind::DegenerateData,
                "twonoid pairing p0*qinf - pinf*q0 vanishes");
  }
  if (std::abs(t.w + 0.25) <= kDegenerateTol) {
    throw Error(ErrorKind::DegenerateData,
                "twonoid pairing p0*qinf - pinf*q0 equals -1/4, the end "
                "exponent lambda vanishes");
  }
  t.lambda = 0.5 * std::sqrt(1.0 + 4.0 * t.w);
  const cplx two_lambda = 2.0 * t.lambda;
  const double nearest = std::round(two_lambda.real());
  if (!explicit_A && std::abs(two_lambda.imag()) <= kHalfIntegerTol &&
      std::abs(two_lambda.real() - nearest) <= kHalfIntegerTol) {
    throw Error(ErrorKind::HalfIntegerLambda,
                "twonoid exponent 2*lambda is an integer; the hermitian "
                "dressing is arbitrary there and must be supplied");
  }
  t.c = std::sqrt(t.w / two_lambda);
  if (explicit_A) {
    const double herm =
        max_abs(A - adjoint(A)) / std::max(1.0, max_abs(A));
    if (herm > 1e-12) {
      throw Error(ErrorKind::NotHermitian,
                  "twonoid dressing factor A must be hermitian");
    }
    if (std::abs(det(A) - 1.0) > 1e-10) {
      throw std::invalid_argument(
          "twonoid dressing factor A must have determinant 1");
    }
  }
  t.A = A;
  return t;
}

void require_off_puncture(cplx z) {
  if (std::abs(z) < 1e-8) {
    throw std::invalid_argument(
        "twonoid evaluation too close to the puncture at 0");
  }
}

Mat2 factor_B(const TwonoidData& t, cplx z) {
  return {eval_P(t, z), t.p0 / t.w, -eval_Q(t, z), -t.q0 / t.w};
}

Mat2 factor_C(const TwonoidData& t) {
  return {(2.0 * t.lambda - 1.0) / (2.0 * t.w),
          -(2.0 * t.lambda + 1.0) / (2.0 * t.w), 1.0, 1.0};
}

}  // namespace

TwonoidData TwonoidData::from(cplx p0, cplx pinf, cplx q0, cplx qinf) {
  return build(p0, pinf, q0, qinf, Mat2::identity(), false);
}

TwonoidData TwonoidData::from(cplx p0, cplx pinf, cplx q0, cplx qinf,
                              const Mat2& A) {
  return build(p0, pinf, q0, qinf, A, true);
}

cplx eval_P(const TwonoidData& t, cplx z) { return t.p0 / z + t.pinf; }

cplx eval_Q(const TwonoidData& t, cplx z) { return t.q0 / z + t.qinf; }

Mat2 spinor_system(const TwonoidData& t, cplx z) {
  const cplx P = eval_P(t, z);
  const cplx Q = eval_Q(t, z);
  return {P * Q, P * P, -Q * Q, -P * Q};
}

Mat2 twonoid_psi(const TwonoidData& t, cplx z) {
  require_off_puncture(z);
  const cplx rz = std::sqrt(z);
  const Mat2 mid = Mat2::diag(rz, 1.0 / rz);
  const cplx zl = std::pow(z, t.lambda);
  const Mat2 right = Mat2::diag(zl, 1.0 / zl);
  return t.c * (factor_B(t, z) * mid * factor_C(t) * right) * t.A;
}

TwonoidJet twonoid_jet(const TwonoidData& t, cplx z) {
  require_off_puncture(z);
  const Mat2 B = factor_B(t, z);
  const Mat2 Bp{-t.p0 / (z * z), 0.0, t.q0 / (z * z), 0.0};
  const cplx rz = std::sqrt(z);
  const Mat2 mid = Mat2::diag(rz, 1.0 / rz);
  const Mat2 midp = Mat2::diag(0.5 / rz, -0.5 / (z * rz));
  const Mat2 C = factor_C(t);
  const cplx zl = std::pow(z, t.lambda);
  const Mat2 right = Mat2::diag(zl, 1.0 / zl);
  const Mat2 rightp =
      Mat2::diag(t.lambda * zl / z, -t.lambda / (zl * z));
  const Mat2 psi = t.c * (B * mid * C * right) * t.A;
  const Mat2 psi_z =
      t.c * (Bp * mid * C * right + B * midp * C * right +
             B * mid * C * rightp) *
      t.A;
  return {psi, psi_z};
}

Mat2 twonoid_monodromy(const TwonoidData& t) {
  const cplx ph = std::exp(2.0 * kPi * kI * t.lambda);
  const Mat2 core = Mat2::diag(-ph, -1.0 / ph);
  return inverse(t.A) * core * t.A;
}

Herm2 immersion_F(const TwonoidData& t, cplx z) {
  const Mat2 psi = twonoid_psi(t, z);
  return Herm2::from(psi * adjoint(psi));
}

}  // namespace bryant
