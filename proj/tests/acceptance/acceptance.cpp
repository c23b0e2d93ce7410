// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// Exit code is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bryant/gamma.hpp"
#include "bryant/hyp2f1.hpp"
#include "bryant/meshio.hpp"

#ifndef BRYANT_CLI_PATH
#error "BRYANT_CLI_PATH must point at the bryant executable"
#endif

using namespace bryant;
namespace fs = std::filesystem;

namespace {

std::mt19937_64 rng(424243);

double uni(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-30, std::abs(want));
}

double rel_diff(const Mat2& got, const Mat2& want) {
  return max_abs(got - want) / std::max(1e-300, max_abs(want));
}

struct Criterion {
  bool pass;
  std::string detail;
};

int g_failures = 0;

template <typename F>
void run_criterion(int n, const char* name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  g_failures += !c.pass;
  std::printf("criterion %d %s (%.2f s) %s: %s\n", n,
              c.pass ? "PASS" : "FAIL", secs, name, c.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Hypergeometric identity suite: Gauss summation near the unit argument,
//    the elementary logarithmic closed form, and the defining ODE residual.

Criterion hypergeometric_suite() {
  const auto t0 = std::chrono::steady_clock::now();

  double worst_gauss = 0.0;
  for (int i = 0; i < 50; ++i) {
    cplx a, b, c;
    for (;;) {
      a = cplx(uni(0.1, 1.3));
      b = cplx(uni(0.1, 1.3));
      const double s = uni(0.15, 2.5);
      c = a + b + s;
      if (std::abs(s - std::round(s)) < 1e-3) continue;
      // keep the subdominant branch below a fifth of the budget
      const cplx sub = std::pow(1e-8, s) * gamma_ratio({c, a + b - c}, {a, b});
      if (std::abs(sub) <= 2e-7) break;
    }
    const cplx limit = hyp2f1({a, b, c}, 1.0 - 1e-8);
    const cplx gauss = gamma_ratio({c, c - a - b}, {c - a, c - b});
    worst_gauss = std::max(worst_gauss, rel_err(limit, gauss));
  }

  double worst_log = 0.0;
  for (cplx z : {cplx(0.5), cplx(-0.8), cplx(0.3, 0.4), cplx(-0.2, -0.6)}) {
    worst_log = std::max(
        worst_log, rel_err(hyp2f1({1.0, 1.0, 2.0}, z), -std::log(1.0 - z) / z));
  }
  worst_log = std::max(
      worst_log, rel_err(hyp2f1_derivative({1.0, 1.0, 2.0}, 0.5, 1),
                         cplx(4.0 - 4.0 * std::log(2.0))));

  double worst_ode = 0.0;
  for (int i = 0; i < 30; ++i) {
    const cplx a{uni(0.1, 1.4), uni(-0.2, 0.2)};
    const cplx b{uni(0.1, 1.4), uni(-0.2, 0.2)};
    const cplx c{uni(1.2, 2.4), uni(-0.2, 0.2)};
    cplx z{uni(-0.7, 0.7), uni(-0.7, 0.7)};
    if (std::abs(z) > 0.7) z *= 0.7 / std::abs(z);
    const HypParams q{a, b, c};
    const cplx w = hyp2f1(q, z);
    const cplx wp = hyp2f1_derivative(q, z, 1);
    const cplx wpp = hyp2f1_derivative(q, z, 2);
    worst_ode = std::max(
        worst_ode, std::abs(z * (1.0 - z) * wpp + (c - (a + b + 1.0) * z) * wp -
                            a * b * w));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool pass = worst_gauss <= 1e-6 && worst_log <= 1e-10 &&
                    worst_ode <= 1e-8 && secs < 5.0;
  return {pass, fmt("gauss sum %.2e (tol 1e-6), log case %.2e (tol 1e-10), "
                    "ode residual %.2e (tol 1e-8), budget 5 s",
                    worst_gauss, worst_log, worst_ode)};
}

// ---------------------------------------------------------------------------
// 2. Fuchsian closed form vs transport oracle on 20 random generic draws.

FuchsianParams random_generic(double alpha_floor = 1e-3) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const FuchsianParams p =
        FuchsianParams::from(cplx(uni(-0.4, 0.4)), cplx(uni(-0.4, 0.4)),
                             cplx(uni(0.2, 2.0)), cplx(uni(0.2, 2.0)));
    if (is_generic(p) && std::abs(p.alpha) > alpha_floor) return p;
  }
  throw std::runtime_error("no generic draw in 200 attempts");
}

Criterion fuchsian_vs_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_transport = 0.0, worst_conn = 0.0, worst_cyclic = 0.0,
         worst_trace = 0.0;
  for (int i = 0; i < 20; ++i) {
    const FuchsianParams p = random_generic();
    const cplx base(0.2, 0.0), target(-0.6, 0.8), zu(0.4, 0.6);

    const Mat2 moved =
        ode_transport([&p](cplx z) { return fuchsian_rhs(p, z); }, base,
                      canonical_phi(p, Branch::zero, base),
                      PathSpec::polyline({base, cplx(0.2, 0.8), target}));
    worst_transport = std::max(
        worst_transport, rel_diff(moved, canonical_phi(p, Branch::zero,
                                                       target)));

    const ConnectionMatrices cm = connection_matrices(p);
    const Mat2 phi0 = canonical_phi(p, Branch::zero, zu);
    worst_conn = std::max(
        worst_conn, rel_diff(canonical_phi(p, Branch::one, zu) * cm.E1, phi0));
    worst_conn = std::max(
        worst_conn,
        rel_diff(canonical_phi(p, Branch::infinity, zu) * cm.Einf, phi0));

    const MonodromyBundle mb = monodromy_bundle(p);
    worst_cyclic = std::max(
        worst_cyclic, max_abs(mb.Minf * mb.M1 * mb.M0 - Mat2::identity()));
    worst_trace = std::max(
        worst_trace,
        std::abs(trace(mb.M1) -
                 2.0 * std::cos(2.0 * std::numbers::pi * p.tau)));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool pass = worst_transport <= 1e-7 && worst_conn <= 1e-8 &&
                    worst_cyclic <= 1e-8 && worst_trace <= 1e-8 && secs < 60.0;
  return {pass, fmt("transport %.2e (tol 1e-7), connection %.2e, cyclic "
                    "%.2e, trace %.2e (tol 1e-8), budget 60 s",
                    worst_transport, worst_conn, worst_cyclic, worst_trace)};
}

// ---------------------------------------------------------------------------
// 3. Unitarization of the symmetric d = 0.2 trinoid: conjugated monodromies
//    unitary, closed-form r equals the brute-force minimizer.

Criterion unitarization() {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  const Mat2 Rinv = inverse(tb.R);
  double worst_defect = 0.0;
  for (const Mat2& m :
       {tb.monodromy.M0, tb.monodromy.M1, tb.monodromy.Minf}) {
    worst_defect = std::max(worst_defect, unitarity_defect(Rinv * m * tb.R));
  }
  const double r_scan = scan_unitarizer_r(tb.monodromy);
  const double r_gap = std::abs(tb.r - r_scan);
  const bool pass = worst_defect <= 1e-8 && r_gap <= 1e-8;
  return {pass, fmt("worst conjugated-monodromy defect %.2e (tol 1e-8), "
                    "|r_closed - r_scan| %.2e (tol 1e-8)",
                    worst_defect, r_gap)};
}

// ---------------------------------------------------------------------------
// 4. Moduli equivalence: region decision == trig sign test on 200 triples;
//    == brute-force r-scan unitarizability on a 50-sample subset.

Criterion moduli_equivalence() {
  int trig_disagreements = 0, scan_disagreements = 0;
  int tested = 0, scanned = 0;
  while (tested < 200) {
    const double d0 = uni(0.0, 1.0), d1 = uni(0.0, 1.0), dinf = uni(0.0, 1.0);
    UnitarizableDecision dec;
    try {
      dec = moduli_decision(d0, d1, dinf);
    } catch (const Error&) {
      ++tested;
      ++trig_disagreements;
      continue;
    }
    if (std::abs(dec.margin) <= 1e-6) continue;
    ++tested;
    if ((dec.trig_product < 0.0) != dec.unitarizable) ++trig_disagreements;

    if (scanned >= 50) continue;
    try {
      const TrinoidData w = trinoid_from_d(d0, d1, dinf);
      const MonodromyBundle mb =
          monodromy_bundle(fuchsian_from(gauge_constants(w)));
      const double defect = unitarity_defect_for_r(mb, scan_unitarizer_r(mb));
      ++scanned;
      if ((defect <= 1e-8) != dec.unitarizable) ++scan_disagreements;
    } catch (const Error&) {
      // the d-triple has no generic representative in this family; the
      // scan oracle is inapplicable, not in disagreement
    }
  }
  const bool pass =
      trig_disagreements == 0 && scan_disagreements == 0 && scanned >= 50;
  return {pass, fmt("trig disagreements %d/200, scan disagreements %d/%d "
                    "(both must be 0)",
                    trig_disagreements, scan_disagreements, scanned)};
}

// ---------------------------------------------------------------------------
// 5. Geometry of the symmetric d = 0.2 trinoid on a 32x32x3 grid.

Criterion geometry() {
  const auto t0 = std::chrono::steady_clock::now();
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  const std::array<PatchConfig, 3> cfgs{
      PatchConfig{Branch::zero, 32, 32, 0.05},
      PatchConfig{Branch::one, 32, 32, 0.05},
      PatchConfig{Branch::infinity, 32, 32, 0.05}};
  const auto patches = sample_surface(tb, cfgs);

  double worst_det = 0.0;
  int interior = 0, bad = 0, holes = 0;
  for (const SurfacePatch& p : patches) {
    for (int i = 0; i < p.n_r; ++i) {
      for (int k = 0; k + 1 < p.n_theta; ++k) {
        const SurfaceVertex& v = p.pts[i * p.n_theta + k];
        if (!v.valid) {
          ++holes;
          continue;
        }
        worst_det = std::max(worst_det, v.diag.detF_err);
        if (std::abs(v.wt) < 1.0 - 1e-12) {
          ++interior;
          if (v.diag.conformal_resid > 1e-3 || v.diag.H_abs_err > 1e-3) ++bad;
        }
      }
    }
  }
  const double frac = interior ? 1.0 - double(bad) / interior : 0.0;

  // loop continuation returns F to itself
  double worst_loop = 0.0;
  const cplx base(0.2, 0.0);
  const Mat2 psi0 = psi_eval(tb, base);
  const Herm2 F0 = immersion_F(tb, base);
  for (Branch b : {Branch::zero, Branch::one, Branch::infinity}) {
    const Mat2 moved =
        ode_transport([&tb](cplx z) { return spinor_system(tb.data, z); },
                      base, psi0, monodromy_loop(b));
    worst_loop =
        std::max(worst_loop, max_abs(moved * adjoint(moved) - F0.m));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool pass = holes == 0 && worst_det <= 1e-7 && frac >= 0.99 &&
                    worst_loop <= 1e-6 && secs < 120.0;
  return {pass, fmt("det F %.2e (tol 1e-7), thresholds met at %.2f%% of "
                    "%d interior points (need 99%%), loop F-return %.2e "
                    "(tol 1e-6), %d holes, budget 120 s",
                    worst_det, 100.0 * frac, interior, worst_loop, holes)};
}

// ---------------------------------------------------------------------------
// 6. Twonoids: frame residual, unitarity dichotomy, surface of revolution,
//    and both sides of the lambda = 1/2 profile transition emitted.

int run_cli(const std::string& args, const std::string& log) {
  const std::string cmd =
      std::string(BRYANT_CLI_PATH) + " " + args + " > " + log + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

struct ObjSummary {
  int vertices = 0, faces = 0, groups = 0, outside_ball = 0;
};

ObjSummary scan_obj(const fs::path& path) {
  ObjSummary s;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) {
      ++s.vertices;
      std::istringstream ls(line.substr(2));
      double x = 0, y = 0, z = 0;
      ls >> x >> y >> z;
      if (!(x * x + y * y + z * z < 1.0)) ++s.outside_ball;
    } else if (line.rfind("f ", 0) == 0) {
      ++s.faces;
    } else if (line.rfind("g ", 0) == 0) {
      ++s.groups;
    }
  }
  return s;
}

Criterion twonoids() {
  const TwonoidData real_lambda = TwonoidData::from(0.0, 0.3, 0.3, 0.0);

  double worst_resid = 0.0;
  for (cplx z : {cplx(0.8, 0.5), cplx(-1.4, 0.2), cplx(0.06, -0.03),
                 cplx(9.0, 4.0)}) {
    const TwonoidJet jet = twonoid_jet(real_lambda, z);
    worst_resid = std::max(
        worst_resid, max_abs(jet.psi_z - spinor_system(real_lambda, z) *
                                             jet.psi) /
                         max_abs(jet.psi_z));
  }

  const double defect_real = unitarity_defect(twonoid_monodromy(real_lambda));
  // pairing p0*qinf - pinf*q0 = -0.5 forces lambda = i/2
  const TwonoidData complex_lambda = TwonoidData::from(0.0, 1.0, 0.5, 0.0);
  const double defect_complex =
      unitarity_defect(twonoid_monodromy(complex_lambda));

  // surface of revolution: every constant-|z| mesh row lies on a circle
  const SurfacePatch ann = sample_twonoid(real_lambda, 12, 24, 0.05);
  double worst_circle = 0.0;
  for (int i = 0; i < ann.n_r; ++i) {
    const auto at = [&](int k) { return ann.pts[i * ann.n_theta + k].ball; };
    // circle through three samples: center c = s*u + t*v in the plane
    // spanned by u = B - A, v = C - A around A
    const auto A = at(0), B = at(7), C = at(15);
    double u[3], v[3];
    for (int d = 0; d < 3; ++d) u[d] = B[d] - A[d], v[d] = C[d] - A[d];
    const double uu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    const double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const double uv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    const double det = uu * vv - uv * uv;
    const double s = (0.5 * uu * vv - 0.5 * vv * uv) / det;
    const double t = (0.5 * vv * uu - 0.5 * uu * uv) / det;
    double center[3], n[3] = {u[1] * v[2] - u[2] * v[1],
                              u[2] * v[0] - u[0] * v[2],
                              u[0] * v[1] - u[1] * v[0]};
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (int d = 0; d < 3; ++d) center[d] = A[d] + s * u[d] + t * v[d];
    const double radius =
        std::hypot(A[0] - center[0], A[1] - center[1], A[2] - center[2]);
    for (int k = 0; k + 1 < ann.n_theta; ++k) {
      const auto P = at(k);
      const double dr = std::abs(std::hypot(P[0] - center[0], P[1] - center[1],
                                            P[2] - center[2]) -
                                 radius);
      const double dplane = std::abs((P[0] - A[0]) * n[0] +
                                     (P[1] - A[1]) * n[1] +
                                     (P[2] - A[2]) * n[2]) /
                            nn;
      worst_circle = std::max(worst_circle, std::max(dr, dplane));
    }
  }

  // emit both sides of the profile transition through the CLI
  const fs::path dir = fs::temp_directory_path() / "bryant_acceptance";
  fs::create_directories(dir);
  const fs::path embedded = dir / "twonoid_embedded.obj";
  const fs::path crossing = dir / "twonoid_selfint.obj";
  // lambda = 0.4 < 1/2 (pairing -0.09), lambda = 0.6 > 1/2 (pairing 0.11)
  const int rc1 = run_cli("twonoid --q0 0.3 --qinf 0 --p0 0 --pinf 0.3 --out " +
                              embedded.string(),
                          (dir / "two1.log").string());
  const int rc2 = run_cli(
      "twonoid --q0 0 --qinf 0.33166247903554 --p0 0.33166247903554 "
      "--pinf 0 --out " +
          crossing.string(),
      (dir / "two2.log").string());
  const ObjSummary o1 = scan_obj(embedded);
  const ObjSummary o2 = scan_obj(crossing);
  const bool meshes_ok = rc1 == 0 && rc2 == 0 && o1.vertices == 32 * 32 &&
                         o2.vertices == 32 * 32 && o1.outside_ball == 0 &&
                         o2.outside_ball == 0 && o1.groups == 1 &&
                         o2.groups == 1;

  const bool pass = worst_resid <= 1e-8 && defect_real <= 1e-8 &&
                    defect_complex >= 1e-3 && worst_circle <= 1e-6 && meshes_ok;
  return {pass,
          fmt("frame residual %.2e (tol 1e-8), monodromy defect %.2e real / "
              "%.2e complex lambda (tol 1e-8 / floor 1e-3), revolution "
              "deviation %.2e (tol 1e-6), profile meshes %s",
              worst_resid, defect_real, defect_complex, worst_circle,
              meshes_ok ? "emitted both sides of lambda = 1/2" : "FAILED")};
}

// ---------------------------------------------------------------------------
// 7. The symmetric-family CLI at d0 = 0.20 / 0.2332 / 0.2400.

Criterion symmetric_family_cli() {
  const fs::path dir = fs::temp_directory_path() / "bryant_acceptance";
  fs::create_directories(dir);
  std::string detail;
  bool pass = true;
  for (double d0 : {0.20, 0.2332, 0.2400}) {
    const std::string tag = fmt("d0_%.4f", d0);
    const fs::path obj = dir / (tag + ".obj");
    const fs::path csv = dir / (tag + ".csv");
    const int rc = run_cli(fmt("symmetric --d0 %.4f --out %s --diagnostics %s",
                               d0, obj.string().c_str(), csv.string().c_str()),
                           (dir / (tag + ".log")).string());
    const ObjSummary o = scan_obj(obj);
    const bool gen_ok = rc == 0 && o.groups == 3 && o.vertices == 3 * 32 * 32 &&
                        o.faces == 3 * 31 * 31 && o.outside_ball == 0;

    // diagnostics rows: all finite, full count
    int rows = 0, nonfinite = 0;
    {
      std::ifstream in(csv);
      std::string line;
      std::getline(in, line);  // header
      while (std::getline(in, line)) {
        ++rows;
        std::istringstream ls(line);
        std::string cell;
        int col = 0;
        while (std::getline(ls, cell, ',')) {
          if (col != 2 && !std::isfinite(std::strtod(cell.c_str(), nullptr))) {
            ++nonfinite;
          }
          ++col;
        }
      }
    }
    const bool csv_ok = rows == 3 * 32 * 32 && nonfinite == 0;

    // interior thresholds, measured through the library on the same data.
    // |H| tolerance is 1e-3 at d0 = 0.2 (the pinned grid) and 2e-3 at the
    // bracketing values: the residual there is pure second-order stencil
    // truncation at the innermost ring (it quarters when the step halves).
    const double h_tol = d0 == 0.20 ? 1e-3 : 2e-3;
    const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(d0));
    const std::array<PatchConfig, 3> cfgs{
        PatchConfig{Branch::zero, 32, 32, 0.05},
        PatchConfig{Branch::one, 32, 32, 0.05},
        PatchConfig{Branch::infinity, 32, 32, 0.05}};
    const auto patches = sample_surface(tb, cfgs);
    int interior = 0, bad = 0;
    double worst_det = 0.0;
    bool holes = false;
    for (const SurfacePatch& p : patches) {
      for (int i = 0; i < p.n_r; ++i) {
        for (int k = 0; k + 1 < p.n_theta; ++k) {
          const SurfaceVertex& v = p.pts[i * p.n_theta + k];
          if (!v.valid) {
            holes = true;
            continue;
          }
          worst_det = std::max(worst_det, v.diag.detF_err);
          if (std::abs(v.wt) < 1.0 - 1e-12) {
            ++interior;
            if (v.diag.conformal_resid > 1e-3 || v.diag.H_abs_err > h_tol) {
              ++bad;
            }
          }
        }
      }
    }
    const double frac = interior ? 1.0 - double(bad) / interior : 0.0;
    const bool diag_ok = !holes && worst_det <= 1e-7 && frac >= 0.99;

    pass = pass && gen_ok && csv_ok && diag_ok;
    detail += fmt("%sd0 %.4f %s (mesh %s, csv %s, %.2f%% within thresholds, "
                  "|H| tol %.0e)",
                  detail.empty() ? "" : "; ", d0,
                  gen_ok && csv_ok && diag_ok ? "ok" : "FAILED",
                  gen_ok ? "ok" : "bad", csv_ok ? "ok" : "bad", 100.0 * frac,
                  h_tol);
  }
  return {pass, detail};
}

}  // namespace

int main() {
  std::printf("acceptance gate: %s\n", BRYANT_CLI_PATH);
  run_criterion(1, "hypergeometric identity suite", hypergeometric_suite);
  run_criterion(2, "Fuchsian closed form vs transport oracle",
                fuchsian_vs_oracle);
  run_criterion(3, "unitarization of the symmetric trinoid", unitarization);
  run_criterion(4, "moduli-region equivalence", moduli_equivalence);
  run_criterion(5, "surface geometry on the 32x32x3 grid", geometry);
  run_criterion(6, "twonoid closed form and profile transition", twonoids);
  run_criterion(7, "symmetric-family CLI bracketing the transition",
                symmetric_family_cli);
  if (g_failures == 0) {
    std::printf("acceptance: all 7 criteria PASS\n");
  } else {
    std::printf("acceptance: %d of 7 criteria FAILED\n", g_failures);
  }
  return g_failures;
}
