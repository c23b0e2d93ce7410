#include "bryant/diagnostics.hpp"

#include <cmath>

#include "bryant/error.hpp"

namespace bryant {
namespace {

LorentzVec sub(const LorentzVec& a, const LorentzVec& b) {
  return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

LorentzVec add(const LorentzVec& a, const LorentzVec& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

LorentzVec scale(const LorentzVec& a, double s) {
  return {a.x0 * s, a.x1 * s, a.x2 * s, a.x3 * s};
}

double det3(double a0, double a1, double a2, double b0, double b1, double b2,
            double c0, double c1, double c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
         a2 * (b0 * c1 - b1 * c0);
}

double euclid(const LorentzVec& a) {
  return std::sqrt(a.x0 * a.x0 + a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3);
}

// Unit spacelike vector Minkowski-orthogonal to a, b, c: the row-expansion
// cofactors of det[v; a; b; c] give the covector <w, .>, and the inverse
// metric diag(-1,1,1,1) raises it.
LorentzVec unit_normal(const LorentzVec& a, const LorentzVec& b,
                       const LorentzVec& c) {
  const double c0 =
      det3(a.x1, a.x2, a.x3, b.x1, b.x2, b.x3, c.x1, c.x2, c.x3);
  const double c1 =
      -det3(a.x0, a.x2, a.x3, b.x0, b.x2, b.x3, c.x0, c.x2, c.x3);
  const double c2 =
      det3(a.x0, a.x1, a.x3, b.x0, b.x1, b.x3, c.x0, c.x1, c.x3);
  const double c3 =
      -det3(a.x0, a.x1, a.x2, b.x0, b.x1, b.x2, c.x0, c.x1, c.x2);
  const LorentzVec w{-c0, c1, c2, c3};
  const double norm2 = minkowski_dot(w, w);
  const double frame_scale = euclid(a) * euclid(b) * euclid(c);
  if (!(norm2 > 0.0) || std::sqrt(norm2) <= 1e-12 * frame_scale) {
    throw Error(ErrorKind::DegenerateStencil,
                "tangent 3-frame is numerically rank-deficient");
  }
  return scale(w, 1.0 / std::sqrt(norm2));
}

struct Stencil {
  LorentzVec Fc, Fx, Fy, lap;  // value, first derivatives, F_xx + F_yy
  double dz_dzbar;             // <F_z, F_zbar> = (<Fx,Fx> + <Fy,Fy>)/4
  cplx dz_dz;                  // <F_z, F_z>
};

Stencil stencil_at(const SurfaceMap& F, cplx z, double h1, double h2) {
  const auto at = [&](cplx p) { return lorentz_from_herm(F(p)); };
  Stencil s;
  s.Fc = at(z);
  const cplx ih1{0.0, h1}, ih2{0.0, h2};
  s.Fx = scale(sub(at(z + h1), at(z - h1)), 0.5 / h1);
  s.Fy = scale(sub(at(z + ih1), at(z - ih1)), 0.5 / h1);
  const LorentzVec fxx =
      scale(add(sub(at(z + h2), scale(s.Fc, 2.0)), at(z - h2)), 1.0 / (h2 * h2));
  const LorentzVec fyy = scale(
      add(sub(at(z + ih2), scale(s.Fc, 2.0)), at(z - ih2)), 1.0 / (h2 * h2));
  s.lap = add(fxx, fyy);
  const double xx = minkowski_dot(s.Fx, s.Fx);
  const double yy = minkowski_dot(s.Fy, s.Fy);
  const double xy = minkowski_dot(s.Fx, s.Fy);
  s.dz_dzbar = 0.25 * (xx + yy);
  s.dz_dz = cplx(0.25 * (xx - yy), -0.5 * xy);
  if (!(s.dz_dzbar > 0.0) || !std::isfinite(s.dz_dzbar)) {
    throw Error(ErrorKind::DegenerateStencil,
                "conformal factor <F_z, F_zbar> is not positive");
  }
  return s;
}

}  // namespace

double mean_curvature_fd(const SurfaceMap& F, cplx z, double h1, double h2) {
  const Stencil s = stencil_at(F, z, h1, h2);
  const LorentzVec N = unit_normal(s.Fc, s.Fx, s.Fy);
  // H e^u = 2 <F_zzbar, N> with e^u = 2 <F_z, F_zbar>, F_zzbar = lap / 4
  return std::abs(minkowski_dot(s.lap, N)) / (4.0 * s.dz_dzbar);
}

double conformality_residual(const SurfaceMap& F, cplx z, double h1) {
  const Stencil s = stencil_at(F, z, h1, h1);
  return std::abs(s.dz_dz) / s.dz_dzbar;
}

DiagnosticsRow diagnostics_at(const SurfaceMap& F, cplx z,
                              double psi_residual, double h1, double h2) {
  const Stencil s = stencil_at(F, z, h1, h2);
  const LorentzVec N = unit_normal(s.Fc, s.Fx, s.Fy);
  DiagnosticsRow row;
  row.detF_err = std::abs(-minkowski_dot(s.Fc, s.Fc) - 1.0);
  row.conformal_resid = std::abs(s.dz_dz) / s.dz_dzbar;
  row.H_abs_err =
      std::abs(std::abs(minkowski_dot(s.lap, N)) / (4.0 * s.dz_dzbar) - 1.0);
  row.psi_residual = psi_residual;
  return row;
}

}  // namespace bryant
