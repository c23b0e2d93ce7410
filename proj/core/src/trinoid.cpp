#include "bryant/trinoid.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bryant/error.hpp"

namespace bryant {
namespace {

constexpr double kPi = std::numbers::pi;

/// Right constant carrying the canonical solution of the representation
/// back to the one normalized at 0, on either side of the real axis.
Mat2 rep_connection(const TrinoidBundle& tb, cplx z, Branch rep) {
  switch (rep) {
    case Branch::zero:
      return Mat2::identity();
    case Branch::one: {
      if (z.imag() < 0.0) {
        const cplx ph = std::exp(2.0 * kPi * kI * tb.params.alpha);
        return tb.monodromy.E1 * Mat2::diag(ph, 1.0 / ph);
      }
      return tb.monodromy.E1;
    }
    case Branch::infinity:
    default:
      // Valid on both sides: this solution and the one at 0 are analytic
      // on the whole plane slit along [0, inf).
      return tb.monodromy.Einf;
  }
}

}  // namespace

Branch representation_at(cplx z) {
  const double d0 = std::abs(z);
  const double d1 = std::abs(z - 1.0);
  const double di = 1.0 / d0;
  if (d0 <= d1 && d0 <= di) return Branch::zero;
  if (d1 <= di) return Branch::one;
  return Branch::infinity;
}

PsiJet psi_jet_with_branch(const TrinoidBundle& tb, cplx z, Branch rep) {
  const Mat2 phi = canonical_phi(tb.params, rep, z);
  const Mat2 D = gauge_D(tb.data, tb.gauge, z);
  const Mat2 Dp = gauge_D_prime(tb.data, tb.gauge, z);
  const Mat2 tail = rep_connection(tb, z, rep) * tb.R * tb.inv_sqrt_det;
  return {D * phi * tail,
          (Dp * phi + D * (fuchsian_rhs(tb.params, z) * phi)) * tail};
}

PsiJet psi_jet(const TrinoidBundle& tb, cplx z) {
  return psi_jet_with_branch(tb, z, representation_at(z));
}

Mat2 psi_eval_with_branch(const TrinoidBundle& tb, cplx z, Branch rep) {
  const Mat2 phi = canonical_phi(tb.params, rep, z);
  return gauge_D(tb.data, tb.gauge, z) * phi * rep_connection(tb, z, rep) *
         tb.R * tb.inv_sqrt_det;
}

Mat2 psi_eval(const TrinoidBundle& tb, cplx z) {
  return psi_eval_with_branch(tb, z, representation_at(z));
}

Herm2 immersion_F(const TrinoidBundle& tb, cplx z) {
  const Mat2 psi = psi_eval(tb, z);
  return Herm2::from(psi * adjoint(psi));
}

TrinoidBundle make_trinoid_bundle(const TrinoidData& w) {
  TrinoidBundle tb;
  tb.data = w;
  tb.pair = pairings(w);
  tb.exponents = end_exponents(w);
  tb.gauge = gauge_constants(w);
  tb.params = fuchsian_from(tb.gauge);
  tb.decision = unitarizable(w);
  if (!tb.decision.unitarizable) {
    char msg[160];
    if (!tb.decision.exponents_real) {
      std::snprintf(msg, sizeof msg,
                    "monodromy group not unitarizable: shifted exponents not "
                    "real and nonnegative (d = %.6g, %.6g, %.6g)",
                    tb.decision.moduli.d0, tb.decision.moduli.d1,
                    tb.decision.moduli.dinf);
    } else {
      std::snprintf(msg, sizeof msg,
                    "monodromy group not unitarizable: reduced exponent "
                    "triple outside the admissible region (margin %.6g)",
                    tb.decision.margin);
    }
    throw Error(ErrorKind::NotUnitarizable, msg);
  }
  tb.monodromy = monodromy_bundle(tb.params);
  tb.r = unitarizer_r(tb.params, tb.gauge);
  tb.R = Mat2::diag(tb.r, 1.0 / tb.r);
  tb.unitary_defect = unitarity_defect_for_r(tb.monodromy, tb.r);
  if (tb.unitary_defect > 1e-8) {
    throw Error(ErrorKind::OracleMismatch,
                "closed-form unitarizer leaves monodromy defect above 1e-8");
  }

  // det(D Phi0) is a global constant; record it from one point, verify at
  // another, and fold its square root into the normalization.
  const cplx z1{0.3, 0.2}, z2{-1.0, 0.8};
  const cplx dd1 = det(gauge_D(w, tb.gauge, z1) *
                       canonical_phi(tb.params, Branch::zero, z1));
  const cplx dd2 = det(gauge_D(w, tb.gauge, z2) *
                       canonical_phi(tb.params, Branch::zero, z2));
  if (std::abs(dd2 - dd1) > 1e-6 * std::abs(dd1)) {
    throw Error(ErrorKind::OracleMismatch,
                "determinant of the dressed solution is not constant");
  }
  tb.det_psi = dd1;
  tb.inv_sqrt_det = 1.0 / std::sqrt(dd1);

  // The three representations must agree as functions on both sides of
  // the axis (seam points of the 0/1 overlap and generic points in the
  // domain of the representation at infinity).
  const double im = std::sqrt(0.3125);  // |z| = |z-1| = 0.75 seam
  const struct {
    cplx z;
    Branch rep;
  } probes[] = {{{0.5, im}, Branch::one},
                {{0.5, -im}, Branch::one},
                {{2.5, 1.5}, Branch::infinity},
                {{2.5, -1.5}, Branch::infinity}};
  for (const auto& p : probes) {
    const Mat2 base = psi_eval_with_branch(tb, p.z, Branch::zero);
    const Mat2 alt = psi_eval_with_branch(tb, p.z, p.rep);
    const double defect = max_abs(alt - base) / max_abs(base);
    tb.validation_defect = std::max(tb.validation_defect, defect);
  }
  if (tb.validation_defect > 1e-6) {
    throw Error(ErrorKind::OracleMismatch,
                "canonical representations disagree after connection");
  }
  return tb;
}

}  // namespace bryant
