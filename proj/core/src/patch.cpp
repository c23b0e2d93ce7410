#include "bryant/patch.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bryant {
namespace {

constexpr double kPi = std::numbers::pi;

// Fixed ideal images of the three ends: the punctures 0, 1, infinity are
// the Moebius images of three equally spaced points on the unit circle.
const cplx kZ0 = std::polar(1.0, kPi / 6.0);
const cplx kZ1 = std::polar(1.0, 5.0 * kPi / 6.0);
const cplx kZinf = std::polar(1.0, 3.0 * kPi / 2.0);

cplx anchor(Branch j) {
  switch (j) {
    case Branch::zero:
      return kZ0;
    case Branch::one:
      return kZ1;
    case Branch::infinity:
    default:
      return kZinf;
  }
}

}  // namespace

void validate(const PatchConfig& cfg) {
  if (cfg.n_r < 4) {
    throw std::invalid_argument("PatchConfig n_r must be at least 4");
  }
  if (cfg.n_theta < 4) {
    throw std::invalid_argument("PatchConfig n_theta must be at least 4");
  }
  if (!(cfg.eps >= 0.01 && cfg.eps < 1.0)) {
    throw std::invalid_argument("PatchConfig eps must lie in [0.01, 1)");
  }
}

cplx patch_map(Branch j, cplx wt) {
  if (std::abs(wt) > 1.0 + 1e-12) {
    throw std::invalid_argument("patch_map requires |w-tilde| <= 1");
  }
  if (std::abs(wt - 1.0) <= 1e-14) {
    throw std::invalid_argument("patch_map is not defined at w-tilde = 1");
  }
  // principal 2/3 power of -(wt+1)/(wt-1), which has positive real part on
  // the open disk, so the power lands in the wedge |arg| < pi/3
  const cplx b = std::pow(-(wt + 1.0) / (wt - 1.0), 2.0 / 3.0);
  const cplx w = b * anchor(j);
  if (std::abs(w - kZinf) <= 1e-14) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return (kZ1 - kZinf) / (kZ1 - kZ0) * (w - kZ0) / (w - kZinf);
}

cplx patch_unmap(Branch j, cplx z) {
  // invert the Moebius part, then the rotated principal 3/2 power
  const cplx zeta = z * (kZ1 - kZ0) / (kZ1 - kZinf);
  const cplx w = (kZ0 - zeta * kZinf) / (1.0 - zeta);
  const cplx u = std::pow(w / anchor(j), 1.5);
  return (u - 1.0) / (u + 1.0);
}

std::vector<cplx> patch_grid(const PatchConfig& cfg) {
  validate(cfg);
  std::vector<cplx> grid;
  grid.reserve(static_cast<std::size_t>(cfg.n_r) * cfg.n_theta);
  const double step = 2.0 * kPi / (cfg.n_theta - 1);
  for (int i = 0; i < cfg.n_r; ++i) {
    const double r = cfg.eps + (1.0 - cfg.eps) * i / (cfg.n_r - 1);
    const std::size_t row = grid.size();
    for (int k = 0; k + 1 < cfg.n_theta; ++k) {
      grid.push_back(std::polar(r, 0.5 * step + k * step));
    }
    grid.push_back(grid[row]);  // exact duplicate closes the seam
  }
  return grid;
}

}  // namespace bryant
