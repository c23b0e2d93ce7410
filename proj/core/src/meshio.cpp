#include "bryant/meshio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace bryant {
namespace {

bool finite_vertex(const SurfaceVertex& v) {
  for (double x : v.ball) {
    if (!std::isfinite(x)) return false;
  }
  return std::isfinite(v.diag.detF_err) &&
         std::isfinite(v.diag.conformal_resid) &&
         std::isfinite(v.diag.H_abs_err) && std::isfinite(v.diag.psi_residual);
}

// Fill everything derived from the frame jet; any throw leaves the vertex
// a hole.
template <typename Jet, typename System, typename Surface>
SurfaceVertex eval_vertex(cplx wt, cplx z, const Jet& jet,
                          const System& system, const Surface& surface) {
  SurfaceVertex v;
  v.wt = wt;
  v.z = z;
  try {
    const auto j = jet(z);
    v.F = Herm2::from(j.psi * adjoint(j.psi));
    const double resid =
        max_abs(j.psi_z - system(z) * j.psi) / max_abs(j.psi_z);
    v.diag = diagnostics_at(surface, z, resid);
    v.ball = to_poincare_ball(lorentz_from_herm(v.F));
    v.valid = finite_vertex(v);
  } catch (const std::exception&) {
    v.valid = false;
  }
  return v;
}

const char* group_name(Branch end) {
  switch (end) {
    case Branch::zero:
      return "end0";
    case Branch::one:
      return "end1";
    case Branch::infinity:
    default:
      return "endinf";
  }
}

std::string csv_label(const std::string& group) {
  if (group.rfind("end", 0) == 0) return group.substr(3);
  return group;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return out;
}

}  // namespace

std::array<SurfacePatch, 3> sample_surface(
    const TrinoidBundle& tb, const std::array<PatchConfig, 3>& cfgs) {
  std::array<SurfacePatch, 3> patches;
  const auto jet = [&](cplx z) { return psi_jet(tb, z); };
  const auto system = [&](cplx z) { return spinor_system(tb.data, z); };
  const SurfaceMap surface = [&](cplx z) { return immersion_F(tb, z); };
  for (int p = 0; p < 3; ++p) {
    const PatchConfig& cfg = cfgs[p];
    SurfacePatch& patch = patches[p];
    patch.group = group_name(cfg.end);
    patch.n_r = cfg.n_r;
    patch.n_theta = cfg.n_theta;
    const std::vector<cplx> grid = patch_grid(cfg);
    patch.pts.reserve(grid.size());
    for (int i = 0; i < cfg.n_r; ++i) {
      for (int k = 0; k < cfg.n_theta; ++k) {
        if (k + 1 == cfg.n_theta) {
          // seam column repeats the first sample of the row exactly
          patch.pts.push_back(patch.pts[i * cfg.n_theta]);
          continue;
        }
        const cplx wt = grid[i * cfg.n_theta + k];
        patch.pts.push_back(
            eval_vertex(wt, patch_map(cfg.end, wt), jet, system, surface));
      }
    }
  }
  return patches;
}

SurfacePatch sample_twonoid(const TwonoidData& t, int n_r, int n_theta,
                            double eps) {
  if (n_r < 4 || n_theta < 4) {
    throw std::invalid_argument(
        "twonoid sampling needs n_r and n_theta at least 4");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("twonoid annulus eps must lie in (0, 1)");
  }
  SurfacePatch patch;
  patch.group = "twonoid";
  patch.n_r = n_r;
  patch.n_theta = n_theta;
  patch.pts.reserve(static_cast<std::size_t>(n_r) * n_theta);
  const auto jet = [&](cplx z) { return twonoid_jet(t, z); };
  const auto system = [&](cplx z) { return spinor_system(t, z); };
  const SurfaceMap surface = [&](cplx z) { return immersion_F(t, z); };
  const double step = 2.0 * std::numbers::pi / (n_theta - 1);
  for (int i = 0; i < n_r; ++i) {
    // log-spaced radii from eps to 1/eps
    const double r =
        std::exp(std::log(eps) * (1.0 - 2.0 * i / (n_r - 1.0)));
    for (int k = 0; k < n_theta; ++k) {
      if (k + 1 == n_theta) {
        patch.pts.push_back(patch.pts[i * n_theta]);
        continue;
      }
      const cplx z = std::polar(r, 0.5 * step + k * step);
      patch.pts.push_back(eval_vertex(z, z, jet, system, surface));
    }
  }
  return patch;
}

void export_obj(const std::vector<SurfacePatch>& patches,
                const std::string& path) {
  std::ofstream out = open_out(path);
  char line[128];
  long base = 0;
  for (const SurfacePatch& p : patches) {
    out << "g " << p.group << "\n";
    for (const SurfaceVertex& v : p.pts) {
      // holes keep their index slot so face indices stay grid-aligned
      const std::array<double, 3> b = v.valid ? v.ball
                                              : std::array<double, 3>{};
      std::snprintf(line, sizeof line, "v %.9g %.9g %.9g\n", b[0], b[1], b[2]);
      out << line;
    }
    const auto at = [&](int i, int k) -> const SurfaceVertex& {
      return p.pts[static_cast<std::size_t>(i) * p.n_theta + k];
    };
    for (int i = 0; i + 1 < p.n_r; ++i) {
      for (int k = 0; k + 1 < p.n_theta; ++k) {
        if (!at(i, k).valid || !at(i, k + 1).valid || !at(i + 1, k).valid ||
            !at(i + 1, k + 1).valid) {
          continue;
        }
        const long v00 = base + static_cast<long>(i) * p.n_theta + k + 1;
        const long v01 = v00 + 1;
        const long v10 = v00 + p.n_theta;
        const long v11 = v10 + 1;
        std::snprintf(line, sizeof line, "f %ld %ld %ld %ld\n", v00, v01, v11,
                      v10);
        out << line;
      }
    }
    base += static_cast<long>(p.pts.size());
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

void export_csv(const std::vector<SurfacePatch>& patches,
                const std::string& path) {
  std::ofstream out = open_out(path);
  out << "re_z,im_z,end,detF_err,conformal_resid,H_abs_err,psi_residual\n";
  char line[192];
  for (const SurfacePatch& p : patches) {
    const std::string label = csv_label(p.group);
    for (const SurfaceVertex& v : p.pts) {
      if (!v.valid) continue;
      std::snprintf(line, sizeof line, "%.9g,%.9g,%s,%.9g,%.9g,%.9g,%.9g\n",
                    v.z.real(), v.z.imag(), label.c_str(), v.diag.detF_err,
                    v.diag.conformal_resid, v.diag.H_abs_err,
                    v.diag.psi_residual);
      out << line;
    }
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace bryant
