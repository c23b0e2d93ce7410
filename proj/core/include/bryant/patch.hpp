#pragma once

#include <vector>

#include "bryant/fuchsian.hpp"
#include "bryant/mat2.hpp"

namespace bryant {

/// Sampling configuration for one coordinate patch around an end.
/// The patch is parameterized by w-tilde in the closed unit disk minus a
/// small disk of radius eps around the puncture preimage at 0; the point
/// w-tilde = 1 is excluded by a half-step angular offset.
struct PatchConfig {
  Branch end{Branch::zero};
  int n_r{32};
  int n_theta{32};
  double eps{0.05};
};

/// Throws std::invalid_argument naming the offending field unless
/// n_r, n_theta >= 4 and 0.01 <= eps < 1.
void validate(const PatchConfig& cfg);

/// The three-patch parameterization of the thrice-punctured sphere: the
/// unit w-tilde disk of patch j covers a neighbourhood of the puncture of
/// end j, the three closed patches tile the sphere, and their boundaries
/// |w-tilde| = 1 meet along shared rays.  w-tilde = 0 maps to the puncture
/// (for the end at infinity the marker (+inf, 0) is returned).
/// Requires |w-tilde| <= 1 and w-tilde != 1.
cplx patch_map(Branch j, cplx wt);

/// Inverse of patch_map on the patch of end j.
cplx patch_unmap(Branch j, cplx z);

/// Grid of w-tilde samples for a validated config, row-major with the
/// angular index fastest: radii eps..1 (n_r linear steps), angles offset
/// by half a step so the excluded point w-tilde = 1 is never hit, with the
/// seam column duplicated exactly (first and last angular samples are the
/// same point, so faces never wrap).
std::vector<cplx> patch_grid(const PatchConfig& cfg);

}  // namespace bryant
