// bryant: construct CMC-1 surfaces in hyperbolic 3-space from rational
// spinor data and export them as Poincare-ball meshes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bryant/hyp2f1.hpp"
#include "bryant/meshio.hpp"
#include "json.hpp"

using namespace bryant;
using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx read_complex(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw ConfigError("config key \"" + key + "\" is missing");
  }
  const json& v = j.at(key);
  if (v.is_number()) return cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return cplx(v[0].get<double>(), v[1].get<double>());
  }
  throw ConfigError("config key \"" + key +
                    "\" must be a number or a two-element array [re, im]");
}

PatchConfig read_patch(const json& p, const std::string& where, Branch end) {
  PatchConfig cfg;
  cfg.end = end;
  if (!p.is_object()) {
    throw ConfigError("config key \"" + where + "\" must be an object");
  }
  for (const auto& item : p.items()) {
    const std::string& key = item.key();
    if (key == "n_r" || key == "n_theta") {
      if (!item.value().is_number_integer()) {
        throw ConfigError("config key \"" + where + "." + key +
                          "\" must be an integer");
      }
      (key == "n_r" ? cfg.n_r : cfg.n_theta) = item.value().get<int>();
    } else if (key == "eps") {
      if (!item.value().is_number()) {
        throw ConfigError("config key \"" + where + ".eps\" must be a number");
      }
      cfg.eps = item.value().get<double>();
    } else {
      throw ConfigError("config key \"" + where + "." + key +
                        "\" is not recognized");
    }
  }
  return cfg;
}

struct TrinoidConfig {
  TrinoidData data;
  std::array<PatchConfig, 3> patches;
};

TrinoidConfig read_trinoid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "p0" && key != "p1" && key != "pinf" && key != "q0" &&
        key != "q1" && key != "qinf" && key != "patches") {
      throw ConfigError("config key \"" + key + "\" is not recognized");
    }
  }
  TrinoidConfig cfg;
  cfg.data.p0 = read_complex(j, "p0");
  cfg.data.p1 = read_complex(j, "p1");
  cfg.data.pinf = read_complex(j, "pinf");
  cfg.data.q0 = read_complex(j, "q0");
  cfg.data.q1 = read_complex(j, "q1");
  cfg.data.qinf = read_complex(j, "qinf");
  cfg.patches = {PatchConfig{Branch::zero, 32, 32, 0.05},
                 PatchConfig{Branch::one, 32, 32, 0.05},
                 PatchConfig{Branch::infinity, 32, 32, 0.05}};
  if (j.contains("patches")) {
    const json& p = j.at("patches");
    if (p.is_array()) {
      if (p.size() != 3) {
        throw ConfigError(
            "config key \"patches\" must be an object or an array of three "
            "objects (ends 0, 1, infinity)");
      }
      const Branch ends[3] = {Branch::zero, Branch::one, Branch::infinity};
      for (int i = 0; i < 3; ++i) {
        cfg.patches[i] =
            read_patch(p[i], "patches[" + std::to_string(i) + "]", ends[i]);
      }
    } else {
      for (int i = 0; i < 3; ++i) {
        const Branch end = cfg.patches[i].end;
        cfg.patches[i] = read_patch(p, "patches", end);
      }
    }
  }
  return cfg;
}

void print_decision(const UnitarizableDecision& dec) {
  std::printf("d = (%.6f, %.6f, %.6f)\n", dec.moduli.d0, dec.moduli.d1,
              dec.moduli.dinf);
  if (!dec.exponents_real) {
    std::printf("NOT UNITARIZABLE: an end exponent is negative or complex\n");
    return;
  }
  std::printf("reduced triple = (%.6f, %.6f, %.6f)\n", dec.moduli.delta1,
              dec.moduli.delta2, dec.moduli.delta3);
  std::printf("margins: sum %+.6f, pairs %+.6f %+.6f %+.6f (min %+.6f)\n",
              dec.margins[0], dec.margins[1], dec.margins[2], dec.margins[3],
              dec.margin);
  std::printf("%s\n", dec.unitarizable ? "UNITARIZABLE" : "NOT UNITARIZABLE");
}

struct MeshStats {
  size_t vertices = 0;
  size_t holes = 0;
  double worst_detF = 0.0, worst_conformal = 0.0, worst_H = 0.0;
};

MeshStats mesh_stats(const std::vector<SurfacePatch>& patches) {
  MeshStats s;
  for (const SurfacePatch& p : patches) {
    for (const SurfaceVertex& v : p.pts) {
      ++s.vertices;
      if (!v.valid) {
        ++s.holes;
        continue;
      }
      s.worst_detF = std::max(s.worst_detF, v.diag.detF_err);
      s.worst_conformal = std::max(s.worst_conformal, v.diag.conformal_resid);
      s.worst_H = std::max(s.worst_H, v.diag.H_abs_err);
    }
  }
  return s;
}

void print_stats(const MeshStats& s) {
  std::printf("sampled %zu vertices (%zu holes)\n", s.vertices, s.holes);
  std::printf("worst residuals: det %.3e, conformal %.3e, |H|-1 %.3e\n",
              s.worst_detF, s.worst_conformal, s.worst_H);
}

int emit_trinoid_mesh(const TrinoidBundle& tb,
                      const std::array<PatchConfig, 3>& cfgs,
                      const std::string& out_path,
                      const std::string& diag_path) {
  print_decision(tb.decision);
  std::printf("unitarizer r = %.9f (defect %.3e)\n", tb.r, tb.unitary_defect);
  const auto patches = sample_surface(tb, cfgs);
  const std::vector<SurfacePatch> all{patches[0], patches[1], patches[2]};
  print_stats(mesh_stats(all));
  export_obj(all, out_path);
  std::printf("wrote %s\n", out_path.c_str());
  if (!diag_path.empty()) {
    export_csv(all, diag_path);
    std::printf("wrote %s\n", diag_path.c_str());
  }
  return 0;
}

int cmd_trinoid(const std::string& config_path, const std::string& out_path,
                const std::string& diag_path) {
  const TrinoidConfig cfg = read_trinoid_config(config_path);
  for (const PatchConfig& p : cfg.patches) validate(p);
  const TrinoidBundle tb = make_trinoid_bundle(cfg.data);
  return emit_trinoid_mesh(tb, cfg.patches, out_path, diag_path);
}

int cmd_symmetric(double d0, int n_r, int n_theta, double eps,
                  const std::string& out_path, const std::string& diag_path) {
  std::array<PatchConfig, 3> cfgs{
      PatchConfig{Branch::zero, n_r, n_theta, eps},
      PatchConfig{Branch::one, n_r, n_theta, eps},
      PatchConfig{Branch::infinity, n_r, n_theta, eps}};
  for (const PatchConfig& p : cfgs) validate(p);
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(d0));
  return emit_trinoid_mesh(tb, cfgs, out_path, diag_path);
}

int cmd_twonoid(double q0, double qinf, double p0, double pinf, int n_r,
                int n_theta, double eps, const std::string& out_path,
                const std::string& diag_path) {
  const TwonoidData t = TwonoidData::from(p0, pinf, q0, qinf);
  std::printf("pairing w = %.6f %+.6fi, exponent lambda = %.6f %+.6fi\n",
              t.w.real(), t.w.imag(), t.lambda.real(), t.lambda.imag());
  if (std::abs(t.lambda.imag()) > 1e-12) {
    throw Error(ErrorKind::NotUnitarizable,
                "twonoid monodromy is not unitary: the end exponent lambda "
                "is not real");
  }
  std::printf("profile: %s\n", t.lambda.real() < 0.5
                                   ? "embedded (lambda < 1/2)"
                                   : "self-intersecting (lambda > 1/2)");
  const SurfacePatch ann = sample_twonoid(t, n_r, n_theta, eps);
  const std::vector<SurfacePatch> all{ann};
  print_stats(mesh_stats(all));
  export_obj(all, out_path);
  std::printf("wrote %s\n", out_path.c_str());
  if (!diag_path.empty()) {
    export_csv(all, diag_path);
    std::printf("wrote %s\n", diag_path.c_str());
  }
  return 0;
}

int cmd_moduli(double d0, double d1, double dinf) {
  const UnitarizableDecision dec = moduli_decision(d0, d1, dinf);
  print_decision(dec);
  if (!dec.unitarizable) return 2;
  const TrinoidBundle tb = make_trinoid_bundle(trinoid_from_d(d0, d1, dinf));
  std::printf("unitarizer r = %.9f (defect %.3e)\n", tb.r, tb.unitary_defect);
  return 0;
}

// ---------------------------------------------------------------------------
// validate: cross-checks of the closed forms against independent oracles.

struct CheckRow {
  std::string name;
  double value;
  double tol;
};

class CheckTable {
 public:
  void add(const std::string& name, double value, double tol) {
    rows_.push_back({name, value, tol});
  }

  int print() const {
    std::printf("%-58s %11s %8s %s\n", "check", "value", "tol", "result");
    int failures = 0;
    for (const CheckRow& r : rows_) {
      const bool pass = std::isfinite(r.value) && r.value <= r.tol;
      failures += !pass;
      std::printf("%-58s %11.3e %8.0e %s\n", r.name.c_str(), r.value, r.tol,
                  pass ? "PASS" : "FAIL");
    }
    if (failures == 0) {
      std::printf("all %zu checks passed\n", rows_.size());
    } else {
      std::printf("%d of %zu checks FAILED\n", failures, rows_.size());
    }
    return failures == 0 ? 0 : 1;
  }

 private:
  std::vector<CheckRow> rows_;
};

double rel_diff(const Mat2& a, const Mat2& b) {
  return max_abs(a - b) / std::max(1e-300, max_abs(b));
}

FuchsianParams random_generic_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> small(-0.4, 0.4);
  std::uniform_real_distribution<double> pos(0.2, 2.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const FuchsianParams p = FuchsianParams::from(
        cplx(small(rng)), cplx(small(rng)), cplx(pos(rng)), cplx(pos(rng)));
    if (is_generic(p) && std::abs(p.alpha) > 1e-3) return p;
  }
  throw std::runtime_error("could not draw generic Fuchsian parameters");
}

int cmd_validate(unsigned seed) {
  std::mt19937 rng(seed);
  CheckTable table;

  {  // hypergeometric evaluation against the Euler transformation identity
    std::uniform_real_distribution<double> ab(-1.5, 1.5);
    std::uniform_real_distribution<double> cr(0.3, 2.5);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      const HypParams hp{cplx(ab(rng)), cplx(ab(rng)), cplx(cr(rng))};
      const cplx z = std::polar(0.1 + 0.5 * ur(rng),
                                2.0 * std::numbers::pi * ur(rng));
      const cplx lhs = hyp2f1(hp, z);
      const HypParams flipped{hp.c - hp.a, hp.c - hp.b, hp.c};
      const cplx rhs =
          std::pow(1.0 - z, hp.c - hp.a - hp.b) * hyp2f1(flipped, z);
      worst = std::max(worst, std::abs(lhs - rhs) /
                                  std::max(1.0, std::abs(rhs)));
    }
    table.add("hypergeometric vs Euler transformation (20 draws)", worst,
              1e-10);
  }

  {  // closed-form canonical solutions against path-transport
    double worst_transport = 0.0, worst_cyclic = 0.0, worst_trace = 0.0;
    for (int n = 0; n < 5; ++n) {
      const FuchsianParams p = random_generic_params(rng);
      const cplx base(0.2, 0.0), target(-0.6, 0.8);
      const auto path = PathSpec::polyline({base, cplx(0.2, 0.8), target});
      const Mat2 moved = ode_transport(
          [&p](cplx z) { return fuchsian_rhs(p, z); }, base,
          canonical_phi(p, Branch::zero, base), path);
      worst_transport = std::max(
          worst_transport, rel_diff(moved, canonical_phi(p, Branch::zero,
                                                         target)));
      const MonodromyBundle mb = monodromy_bundle(p);
      worst_cyclic = std::max(
          worst_cyclic, max_abs(mb.Minf * mb.M1 * mb.M0 - Mat2::identity()));
      const cplx tr_expect = 2.0 * std::cos(2.0 * std::numbers::pi * p.tau);
      worst_trace = std::max(worst_trace, std::abs(trace(mb.M1) - tr_expect));
    }
    table.add("canonical solution vs path transport (5 draws)",
              worst_transport, 1e-7);
    table.add("monodromy cyclic relation (5 draws)", worst_cyclic, 1e-8);
    table.add("monodromy trace vs 2cos(2 pi tau) (5 draws)", worst_trace,
              1e-8);
  }

  {  // moduli-region decision against the trigonometric sign test
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    int disagreements = 0, tested = 0;
    while (tested < 200) {
      const double d0 = ur(rng), d1 = ur(rng), dinf = ur(rng);
      try {
        const UnitarizableDecision dec = moduli_decision(d0, d1, dinf);
        if (std::abs(dec.margin) <= 1e-6) continue;
        ++tested;
        if ((dec.trig_product < 0.0) != dec.unitarizable) ++disagreements;
      } catch (const Error&) {
        ++tested;
        ++disagreements;
      }
    }
    table.add("moduli region vs trig sign test (200 d-triples)",
              double(disagreements), 0.0);
  }

  {  // the symmetric trinoid pipeline against brute-force oracles
    const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
    table.add("closed-form unitarizer vs brute-force scan",
              std::abs(tb.r - scan_unitarizer_r(tb.monodromy)), 1e-8);
    table.add("conjugated monodromy unitarity defect", tb.unitary_defect,
              1e-8);
    double worst_det = 0.0;
    for (cplx z : {cplx(0.5, 0.6), cplx(-1.1, 0.4), cplx(2.3, -0.8)}) {
      const Herm2 F = immersion_F(tb, z);
      worst_det = std::max(worst_det, std::abs(det(F.m) - 1.0));
    }
    table.add("immersion determinant == 1 (3 points)", worst_det, 1e-9);
    const Herm2 above = immersion_F(tb, cplx(2.2, 1e-9));
    const Herm2 below = immersion_F(tb, cplx(2.2, -1e-9));
    table.add("immersion continuity across the branch cut",
              max_abs(above.m - below.m), 1e-8);
  }

  {  // the twonoid closed form against the transport oracle
    const TwonoidData t = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
    const cplx base(0.5, 0.0);
    const Mat2 start = twonoid_psi(t, base);
    const Mat2 moved = ode_transport(
        [&t](cplx z) { return spinor_system(t, z); }, base, start,
        PathSpec::circle_loop(cplx(0.0), 0.5, base, 1, 16, {cplx(0.0)}));
    table.add("twonoid monodromy vs transported loop",
              rel_diff(moved, start * twonoid_monodromy(t)), 1e-6);
    double worst_resid = 0.0;
    for (cplx z : {cplx(0.8, 0.5), cplx(-1.4, 0.2)}) {
      const TwonoidJet jet = twonoid_jet(t, z);
      worst_resid = std::max(
          worst_resid, max_abs(jet.psi_z - spinor_system(t, z) * jet.psi) /
                           max_abs(jet.psi_z));
    }
    table.add("twonoid frame solves its linear system (2 points)",
              worst_resid, 1e-10);
  }

  {  // mean-curvature stencil calibrated on a geodesic sphere
    const double rho = 1.0;
    const SurfaceMap sphere = [rho](cplx z) {
      const double s = 1.0 / (1.0 + std::norm(z));
      Herm2 out;
      out.m = std::cosh(rho) * Mat2::identity() +
              std::sinh(rho) *
                  Mat2{cplx(2.0 * z.real() * s),
                       cplx(2.0 * z.imag() * s, (1.0 - std::norm(z)) * s),
                       cplx(2.0 * z.imag() * s, -(1.0 - std::norm(z)) * s),
                       cplx(-2.0 * z.real() * s)};
      return out;
    };
    const double h = mean_curvature_fd(sphere, cplx(0.3, 0.1));
    table.add("mean-curvature stencil vs geodesic sphere coth",
              std::abs(h - 1.0 / std::tanh(rho)), 1e-4);
  }

  return table.print();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "constructs constant-mean-curvature-1 surfaces in hyperbolic 3-space "
      "from rational spinor data"};
  app.require_subcommand(1);

  std::string config_path, out_path, diag_path;
  double q0 = 0.0, qinf = 0.0, p0 = 0.0, pinf = 0.0;
  double d0 = 0.0, d1 = 0.0, dinf = 0.0;
  int n_r = 32, n_theta = 32;
  double eps = 0.05;
  unsigned seed = 12345;

  CLI::App* tri = app.add_subcommand(
      "trinoid", "build a three-ended surface from a JSON config");
  tri->add_option("--config", config_path, "JSON spinor-data config")
      ->required();
  tri->add_option("--out", out_path, "output OBJ path")->required();
  tri->add_option("--diagnostics", diag_path, "also write a residual CSV");

  CLI::App* two = app.add_subcommand(
      "twonoid", "build a two-ended surface from real spinor coefficients");
  two->add_option("--q0", q0, "residue of Q at 0")->required();
  two->add_option("--qinf", qinf, "value of Q at infinity")->required();
  two->add_option("--p0", p0, "residue of P at 0")->required();
  two->add_option("--pinf", pinf, "value of P at infinity")->required();
  two->add_option("--out", out_path, "output OBJ path")->required();
  two->add_option("--diagnostics", diag_path, "also write a residual CSV");
  two->add_option("--nr", n_r, "radial samples (default 32)");
  two->add_option("--ntheta", n_theta, "angular samples (default 32)");
  two->add_option("--eps", eps, "annulus eps <= |z| <= 1/eps (default 0.05)");

  CLI::App* mod = app.add_subcommand(
      "moduli", "test a d-triple for unitarizability and print the margins");
  mod->add_option("--d0", d0, "shifted end exponent at 0")->required();
  mod->add_option("--d1", d1, "shifted end exponent at 1")->required();
  mod->add_option("--dinf", dinf, "shifted end exponent at infinity")
      ->required();

  CLI::App* sym = app.add_subcommand(
      "symmetric", "build the equilateral three-ended surface for a d value");
  sym->add_option("--d0", d0, "common shifted end exponent")->required();
  sym->add_option("--out", out_path, "output OBJ path")->required();
  sym->add_option("--diagnostics", diag_path, "also write a residual CSV");
  sym->add_option("--nr", n_r, "radial samples per patch (default 32)");
  sym->add_option("--ntheta", n_theta, "angular samples per patch (default 32)");
  sym->add_option("--eps", eps, "inner patch radius (default 0.05)");

  CLI::App* val = app.add_subcommand(
      "validate", "cross-check the closed forms against independent oracles");
  val->add_option("--seed", seed, "random seed (default 12345)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (tri->parsed()) return cmd_trinoid(config_path, out_path, diag_path);
    if (two->parsed()) {
      return cmd_twonoid(q0, qinf, p0, pinf, n_r, n_theta, eps, out_path,
                         diag_path);
    }
    if (mod->parsed()) return cmd_moduli(d0, d1, dinf);
    if (sym->parsed()) {
      return cmd_symmetric(d0, n_r, n_theta, eps, out_path, diag_path);
    }
    if (val->parsed()) return cmd_validate(seed);
  } catch (const Error& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n", e.what());
    switch (e.kind()) {
      case ErrorKind::NotUnitarizable:
        return 2;
      case ErrorKind::DegenerateData:
      case ErrorKind::ResonantParameters:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
