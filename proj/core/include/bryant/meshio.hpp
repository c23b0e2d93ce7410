#pragma once

#include <array>
#include <string>
#include <vector>

#include "bryant/diagnostics.hpp"
#include "bryant/patch.hpp"
#include "bryant/trinoid.hpp"
#include "bryant/twonoid.hpp"

namespace bryant {

/// One sampled grid point.  A point whose evaluation failed is kept as a
/// grid hole: valid = false, no ball coordinates, no diagnostics row, and
/// export skips the faces touching it.
struct SurfaceVertex {
  cplx wt{0.0};                      // patch coordinate (= z for annuli)
  cplx z{0.0};                       // domain coordinate
  Herm2 F;                           // immersion value
  std::array<double, 3> ball{};      // Poincare-ball image
  DiagnosticsRow diag;
  bool valid{false};
};

/// Row-major grid (angular index fastest) with the seam column duplicated,
/// so faces never wrap in the angular direction.
struct SurfacePatch {
  std::string group;  // OBJ group name: end0 / end1 / endinf / twonoid
  int n_r{0};
  int n_theta{0};
  std::vector<SurfaceVertex> pts;
};

/// Sample the trinoid immersion over the three patches.  Per-point
/// failures become grid holes rather than aborting the sweep.
std::array<SurfacePatch, 3> sample_surface(
    const TrinoidBundle& tb, const std::array<PatchConfig, 3>& cfgs);

/// Sample a twonoid over a log-spaced annulus eps <= |z| <= 1/eps.
SurfacePatch sample_twonoid(const TwonoidData& t, int n_r, int n_theta,
                            double eps = 0.05);

/// Wavefront OBJ: per patch one "g" line, "v x y z" lines in Poincare-ball
/// coordinates (9 significant digits), quad faces "f i j k l" over each
/// grid cell whose four corners are valid.  Byte-deterministic.
void export_obj(const std::vector<SurfacePatch>& patches,
                const std::string& path);

/// CSV of the diagnostics rows of all valid points, with header
/// re_z,im_z,end,detF_err,conformal_resid,H_abs_err,psi_residual.
void export_csv(const std::vector<SurfacePatch>& patches,
                const std::string& path);

}  // namespace bryant
