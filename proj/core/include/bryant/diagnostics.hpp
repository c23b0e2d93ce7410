#pragma once

#include <functional>

#include "bryant/minkowski.hpp"

namespace bryant {

/// Immersion into Herm(2), evaluated pointwise (trinoid, twonoid, or any
/// synthetic test surface).
using SurfaceMap = std::function<Herm2(cplx)>;

/// Per-sample geometric residuals; all nonnegative and finite.
struct DiagnosticsRow {
  double detF_err{0.0};         // |det F - 1|
  double conformal_resid{0.0};  // |<F_z,F_z>| / <F_z,F_zbar>
  double H_abs_err{0.0};        // ||H| - 1|
  double psi_residual{0.0};     // frame equation residual (pipeline-supplied)
};

/// |H| from central-difference stencils around z: first derivatives with
/// step h1, the Laplacian with step h2.  The normal is the unit spacelike
/// solution of <N,F> = <N,F_x> = <N,F_y> = 0; a numerically rank-deficient
/// tangent frame throws DegenerateStencil.
double mean_curvature_fd(const SurfaceMap& F, cplx z, double h1 = 1e-4,
                         double h2 = 1e-3);

/// Conformality residual |<F_z,F_z>| / <F_z,F_zbar> by central differences.
double conformality_residual(const SurfaceMap& F, cplx z, double h1 = 1e-4);

/// Full row from one stencil; the frame-equation residual is computed by
/// the caller (it needs the frame, not just F) and passed through.
DiagnosticsRow diagnostics_at(const SurfaceMap& F, cplx z,
                              double psi_residual = 0.0, double h1 = 1e-4,
                              double h2 = 1e-3);

}  // namespace bryant
