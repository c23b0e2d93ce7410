#include "bryant/fuchsian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bryant/gamma.hpp"
#include "bryant/hyp2f1.hpp"

namespace bryant {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDenomFloor = 1e-12;

double dist_to_int(cplx w) {
  return std::hypot(w.real() - std::round(w.real()), w.imag());
}

/// Side flag for a hypergeometric argument that may sit on the cut [1, inf).
/// A resolvable imaginary part decides; an exact real argument takes the
/// branch-specific fallback (the limit consistent with Im z -> 0+).
CutSide cut_side(cplx u, CutSide fallback) {
  const EvalSettings& s = default_eval_settings();
  if (std::abs(u.imag()) <= s.cut_tol && u.real() > 1.0 + s.cut_tol) {
    if (u.imag() > 0.0) return CutSide::above;
    if (u.imag() < 0.0) return CutSide::below;
    return fallback;
  }
  return CutSide::none;
}

void require_denominator(cplx v, const char* what) {
  if (std::abs(v) < kDenomFloor) {
    throw Error(ErrorKind::DegenerateData,
                std::string("canonical solution denominator ") + what +
                    " below 1e-12");
  }
}

}  // namespace

cplx principal_root(cplx w) {
  cplx r = std::sqrt(w);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

cplx slit_pow(cplx w, cplx e) {
  double th = std::arg(w);
  if (th < 0.0) th += 2.0 * kPi;
  return std::exp(e * cplx(std::log(std::abs(w)), th));
}

FuchsianParams FuchsianParams::from(cplx alpha, cplx beta, cplx gamma,
                                    cplx delta) {
  FuchsianParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = delta;
  p.tau = principal_root(beta * beta + gamma * delta);
  p.rho = principal_root((alpha + beta) * (alpha + beta) + gamma * delta);
  p.a = alpha + p.tau + p.rho;
  p.b = alpha + p.tau - p.rho;
  p.c = 2.0 * alpha;
  return p;
}

bool is_generic(const FuchsianParams& p, double tol) {
  return dist_to_int(2.0 * p.alpha) > tol && dist_to_int(2.0 * p.tau) > tol &&
         dist_to_int(2.0 * p.rho) > tol;
}

void require_generic(const FuchsianParams& p, double tol) {
  if (!is_generic(p, tol)) {
    throw Error(ErrorKind::ResonantParameters,
                "2*alpha, 2*tau, 2*rho must stay away from the integers");
  }
}

LocalExponents local_exponents(const FuchsianParams& p) {
  return {p.alpha, p.tau, p.rho};
}

Mat2 fuchsian_rhs(const FuchsianParams& p, cplx z) {
  const cplx u = 1.0 / z;
  const cplx v = 1.0 / (z - 1.0);
  return {p.alpha * u + p.beta * v, p.gamma * v, p.delta * v,
          -p.alpha * u - p.beta * v};
}

Mat2 canonical_phi(const FuchsianParams& p, Branch which, cplx z) {
  require_generic(p);
  if (std::abs(z) < 1e-8 || std::abs(z - 1.0) < 1e-8) {
    throw std::invalid_argument(
        "canonical_phi: z within 1e-8 of a singular point");
  }
  require_denominator(p.gamma, "gamma");
  require_denominator(p.delta, "delta");

  const cplx a = p.a, b = p.b, c = p.c;
  const cplx al = p.alpha, ta = p.tau, ro = p.rho;
  const cplx ap = 2.0 * p.alpha + 1.0;  // 2 alpha + 1
  const cplx am = 2.0 * p.alpha - 1.0;  // 2 alpha - 1
  const cplx bt = p.beta + p.tau;

  switch (which) {
    case Branch::zero: {
      const cplx u = z;
      const CutSide s = cut_side(u, CutSide::above);
      const cplx w1 = slit_pow(z - 1.0, ta);
      return {-ap / p.delta * slit_pow(z, al) * w1 * hyp2f1({a, b, c}, u, s),
              slit_pow(z, 1.0 - al) * w1 *
                  hyp2f1({a - c + 1.0, b - c + 1.0, 2.0 - c}, u, s),
              slit_pow(z, 1.0 + al) * w1 *
                  hyp2f1({a + 1.0, b + 1.0, c + 2.0}, u, s),
              am / p.gamma * slit_pow(z, -al) * w1 *
                  hyp2f1({a - c, b - c, -c}, u, s)};
    }
    case Branch::one: {
      const cplx u = 1.0 - z;
      const CutSide s = cut_side(u, CutSide::below);
      const cplx w1p = slit_pow(z - 1.0, ta);
      const cplx w1m = slit_pow(z - 1.0, -ta);
      const Mat2 m{bt / p.delta * slit_pow(z, al) * w1p *
                       hyp2f1({a, b, a + b - c + 1.0}, u, s),
                   slit_pow(z, al) * w1m *
                       hyp2f1({c - a, c - b, c - a - b + 1.0}, u, s),
                   slit_pow(z, -al) * w1p *
                       hyp2f1({a - c, b - c, a + b - c + 1.0}, u, s),
                   -bt / p.gamma * slit_pow(z, -al) * w1m *
                       hyp2f1({-a, -b, c - a - b + 1.0}, u, s)};
      if (z.imag() >= 0.0) return m;
      // The rows of this solution carry opposite powers of z, so crossing
      // the arg-window cut on (0, 1) scales them by opposite phases -- a
      // left diagonal factor, which would break the solution property below
      // the axis.  Undo it there: the result is the analytic continuation
      // of the upper-half formula through (0, 1), a solution on both open
      // half planes and continuous across (0, 1).
      const cplx ph = std::exp(-2.0 * kPi * kI * al);
      return Mat2::diag(ph, 1.0 / ph) * m;
    }
    case Branch::infinity: {
      require_denominator(a, "a");
      require_denominator(a - c, "a-c");
      require_denominator(c - b, "c-b");
      require_denominator(bt, "beta+tau");
      const cplx u = 1.0 / z;
      const CutSide s = cut_side(u, CutSide::below);
      const cplx w1 = slit_pow(z - 1.0, ta);
      const cplx zm = slit_pow(z, -ta - ro);
      const cplx zp = slit_pow(z, -ta + ro);
      return {p.gamma * (c - a) / (a * bt) * zm * w1 *
                  hyp2f1({a, a - c + 1.0, a - b + 1.0}, u, s),
              zp * w1 * hyp2f1({b, b - c + 1.0, b - a + 1.0}, u, s),
              zm * w1 * hyp2f1({a + 1.0, a - c, a - b + 1.0}, u, s),
              b * bt / (p.gamma * (c - b)) * zp * w1 *
                  hyp2f1({b + 1.0, b - c, b - a + 1.0}, u, s)};
    }
  }
  throw std::logic_error("unreachable branch");
}

ConnectionMatrices connection_matrices(const FuchsianParams& p) {
  require_generic(p);
  require_denominator(p.gamma, "gamma");
  require_denominator(p.delta, "delta");
  const cplx a = p.a, b = p.b, c = p.c;
  const cplx ap = 2.0 * p.alpha + 1.0;
  const cplx am = 2.0 * p.alpha - 1.0;
  const cplx bt = p.beta + p.tau;
  require_denominator(bt, "beta+tau");
  require_denominator(a - c, "a-c");

  const cplx tau_phase = std::exp(2.0 * kPi * kI * p.tau);
  const Mat2 e1{
      -ap / bt * gamma_ratio({c, c - a - b}, {c - a, c - b}),
      am / p.gamma * gamma_ratio({-c, c - a - b}, {-a, -b}),
      -ap / p.delta * gamma_ratio({c, a + b - c}, {a, b}) * tau_phase,
      -am / bt * gamma_ratio({-c, a + b - c}, {a - c, b - c}) * tau_phase};

  const cplx pref = a * bt / (p.gamma * (a - c));
  const Mat2 einf{
      ap / p.delta * pref * gamma_ratio({c, b - a}, {b, c - a}) *
          std::exp(kI * kPi * a),
      pref * gamma_ratio({2.0 - c, b - a}, {b - c + 1.0, 1.0 - a}) *
          std::exp(kI * kPi * (a - c)),
      -ap / p.delta * gamma_ratio({c, a - b}, {a, c - b}) *
          std::exp(kI * kPi * b),
      -gamma_ratio({2.0 - c, a - b}, {a - c + 1.0, 1.0 - b}) *
          std::exp(kI * kPi * (b - c))};
  return {e1, einf};
}

PathSpec monodromy_loop(Branch around) {
  const cplx base(0.2, 0.0);
  switch (around) {
    case Branch::zero:
      return PathSpec::circle_loop(cplx(0.0), 0.2, base);
    case Branch::one: {
      const PathSpec circ = PathSpec::circle_loop(cplx(1.0), 0.45, cplx(0.55));
      std::vector<cplx> corners{base};
      corners.insert(corners.end(), circ.waypoints.begin(),
                     circ.waypoints.end());
      corners.push_back(base);
      return PathSpec::polyline(corners);
    }
    case Branch::infinity: {
      // Clockwise in the plane = positively oriented around infinity; the
      // tail leaves the basepoint toward the upper left so that the
      // composite 0-then-1-then-infinity traversal is null-homotopic.
      const cplx far = 3.0 * std::exp(kI * (3.0 * kPi / 4.0));
      const PathSpec circ = PathSpec::circle_loop(cplx(0.0), 3.0, far, -1, 48);
      std::vector<cplx> corners{base};
      corners.insert(corners.end(), circ.waypoints.begin(),
                     circ.waypoints.end());
      corners.push_back(base);
      return PathSpec::polyline(corners);
    }
  }
  throw std::logic_error("unreachable branch");
}

Mat2 ode_transport(const std::function<Mat2(cplx)>& A, cplx start,
                   const Mat2& initial, const PathSpec& path, MultSide side,
                   const Rk45Options& opt) {
  if (path.waypoints.size() < 2) {
    throw std::invalid_argument("ode_transport: path needs two waypoints");
  }
  if (std::abs(start - path.waypoints.front()) > 1e-9) {
    throw std::invalid_argument(
        "ode_transport: start must be the first waypoint");
  }
  Mat2 y = initial;
  const auto nrm = [](const Mat2& m) { return max_abs(m); };
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    const cplx w0 = path.waypoints[i];
    const cplx d = path.waypoints[i + 1] - w0;
    if (std::abs(d) == 0.0) continue;
    const auto f = [&](double t, const Mat2& m) {
      const Mat2 coeff = A(w0 + t * d);
      return side == MultSide::left ? d * (coeff * m) : d * (m * coeff);
    };
    y = rk45_integrate(f, 0.0, 1.0, y, nrm, opt);
  }
  return y;
}

MonodromyBundle monodromy_bundle(const FuchsianParams& p) {
  require_generic(p);
  MonodromyBundle bundle;
  const ConnectionMatrices conn = connection_matrices(p);
  bundle.E1 = conn.E1;
  bundle.Einf = conn.Einf;

  const cplx a = p.a, b = p.b, c = p.c;
  const cplx ap = 2.0 * p.alpha + 1.0;
  const cplx am = 2.0 * p.alpha - 1.0;
  const cplx e0 = std::exp(2.0 * kPi * kI * p.alpha);
  const cplx e1 = std::exp(2.0 * kPi * kI * p.tau);
  const cplx sc = std::sin(kPi * c);

  bundle.M0 = Mat2::diag(e0, 1.0 / e0);
  bundle.M1 = {
      e1 - 2.0 * kI * std::sin(kPi * a) * std::sin(kPi * b) / sc,
      (2.0 * kPi * kI / p.gamma) * (am / ap) *
          gamma_ratio({-c, -c}, {-a, -b, a - c, b - c}),
      (2.0 * kPi * kI / p.delta) * (ap / am) *
          gamma_ratio({c, c}, {a, b, c - a, c - b}),
      e1 + 2.0 * kI * std::sin(kPi * (c - a)) * std::sin(kPi * (c - b)) / sc};
  bundle.Minf = inverse(bundle.M1 * bundle.M0);

  // Cross-validate each closed form against analytic continuation around
  // the corresponding puncture, in the basis of the canonical solution at 0.
  const cplx base(0.2, 0.0);
  const Mat2 phi_b = canonical_phi(p, Branch::zero, base);
  const Mat2 phi_b_inv = inverse(phi_b);
  const auto rhs = [&p](cplx z) { return fuchsian_rhs(p, z); };
  const auto transported = [&](Branch around) {
    return phi_b_inv *
           ode_transport(rhs, base, phi_b, monodromy_loop(around));
  };
  const Mat2 t0 = transported(Branch::zero);
  const Mat2 t1 = transported(Branch::one);
  const Mat2 tinf = transported(Branch::infinity);

  bundle.defect0 = max_abs(bundle.M0 - t0) / max_abs(bundle.M0);
  const double plus = max_abs(bundle.M1 - t1);
  const double minus = max_abs(bundle.M1 + t1);
  bundle.m1_transport_sign = plus <= minus ? +1 : -1;
  bundle.defect1 = std::min(plus, minus) / max_abs(bundle.M1);
  const Mat2 minf_expected =
      bundle.m1_transport_sign > 0 ? bundle.Minf : -bundle.Minf;
  bundle.defectinf = max_abs(minf_expected - tinf) / max_abs(bundle.Minf);

  if (bundle.defect0 > 1e-6 || bundle.defect1 > 1e-6 ||
      bundle.defectinf > 1e-6) {
    throw Error(ErrorKind::OracleMismatch,
                "closed-form monodromy disagrees with transported monodromy");
  }
  return bundle;
}

}  // namespace bryant
