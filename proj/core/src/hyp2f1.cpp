#include "bryant/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bryant/error.hpp"
#include "bryant/gamma.hpp"
#include "bryant/rk45.hpp"

namespace bryant {
namespace {

bool near_integer(cplx z, double tol) {
  return std::abs(z - cplx(std::round(z.real()), 0.0)) <= tol;
}

bool near_nonpositive_integer(cplx z, double tol) {
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z - cplx(r, 0.0)) <= tol;
}

// (w, w') state for continuing the hypergeometric ODE.
struct Vec2c {
  cplx u, v;
  friend Vec2c operator+(Vec2c x, Vec2c y) { return {x.u + y.u, x.v + y.v}; }
  friend Vec2c operator-(Vec2c x, Vec2c y) { return {x.u - y.u, x.v - y.v}; }
  friend Vec2c operator*(cplx s, Vec2c x) { return {s * x.u, s * x.v}; }
};

double vec2c_norm(const Vec2c& x) {
  return std::max(std::abs(x.u), std::abs(x.v));
}

// True when z sits on the cut [1, inf) to within tolerance, excluding the
// immediate neighborhood of z = 1 where both side limits coincide.
bool on_cut(cplx z, double tol) {
  return std::abs(z.imag()) <= tol && z.real() > 1.0 + tol;
}

cplx series_impl(cplx a, cplx b, cplx c, cplx z, const EvalSettings& s) {
  if (near_nonpositive_integer(c, s.integer_tol)) {
    throw Error(ErrorKind::DegenerateC,
                "series parameter c within 1e-9 of a nonpositive integer");
  }
  // Compensated (Kahan) summation keeps the tail rounding below the
  // 1e-12 relative target even near |z| = 0.8.
  cplx sum = 1.0, comp = 0.0, term = 1.0;
  int small_run = 0;
  for (int n = 0; n < s.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < s.series_term_tol * std::abs(sum)) {
      if (++small_run >= s.consecutive_small) return sum;
    } else {
      small_run = 0;
    }
  }
  throw Error(ErrorKind::SeriesDiverged,
              "hypergeometric series did not converge in 10000 terms");
}

cplx eval_one_minus_z(const HypParams& p, cplx z, const EvalSettings& s) {
  const cplx a = p.a, b = p.b, c = p.c;
  if (near_integer(c - a - b, s.integer_tol)) {
    throw Error(ErrorKind::ResonantParameters,
                "connection z -> 1-z requires c-a-b away from the integers");
  }
  const cplx w = 1.0 - z;
  const cplx first =
      gamma_ratio({c, c - a - b}, {c - a, c - b}) *
      series_impl(a, b, a + b - c + 1.0, w, s);
  const cplx second =
      std::pow(w, c - a - b) * gamma_ratio({c, a + b - c}, {a, b}) *
      series_impl(c - a, c - b, c - a - b + 1.0, w, s);
  return first + second;
}

cplx eval_reciprocal_z(const HypParams& p, cplx z, const EvalSettings& s) {
  const cplx a = p.a, b = p.b, c = p.c;
  if (near_integer(a - b, s.integer_tol)) {
    throw Error(ErrorKind::ResonantParameters,
                "connection z -> 1/z requires a-b away from the integers");
  }
  const cplx w = 1.0 / z;
  const cplx first = gamma_ratio({c, b - a}, {b, c - a}) *
                     std::pow(-z, -a) *
                     series_impl(a, a - c + 1.0, a - b + 1.0, w, s);
  const cplx second = gamma_ratio({c, a - b}, {a, c - b}) *
                      std::pow(-z, -b) *
                      series_impl(b, b - c + 1.0, b - a + 1.0, w, s);
  return first + second;
}

double segment_distance_to(cplx p0, cplx p1, cplx s) {
  const cplx d = p1 - p0;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(s - p0);
  const double t = std::clamp(((s - p0) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(s - (p0 + t * d));
}

// Continue the hypergeometric ODE
//   z(1-z) w'' + [c - (a+b+1) z] w' - a b w = 0
// from a series anchor at 0.5 exp(i arg z) to z.  The anchor-to-z segment is
// radial; if it passes too close to the singularity at 1 (resonant reroutes
// near the positive real axis), a rectangular detour through the half-plane
// matching sign(Im z) is inserted.
cplx eval_ode_fallback(const HypParams& p, cplx z, const EvalSettings& s) {
  const cplx a = p.a, b = p.b, c = p.c;
  const cplx z0 = 0.5 * std::exp(cplx(0.0, std::arg(z)));
  std::vector<cplx> waypoints{z0};
  if (segment_distance_to(z0, z, cplx(1.0)) < 0.1) {
    const double sigma = z.imag() < 0.0 ? -1.0 : 1.0;
    waypoints.push_back(z0 + cplx(0.0, 0.7 * sigma));
    waypoints.push_back(z + cplx(0.0, 0.7 * sigma));
  }
  waypoints.push_back(z);

  Vec2c y{series_impl(a, b, c, z0, s),
          (a * b / c) * series_impl(a + 1.0, b + 1.0, c + 1.0, z0, s)};
  Rk45Options opt;
  opt.rtol = s.ode_rtol;
  opt.atol = 1e-14;
  for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
    const cplx seg0 = waypoints[k];
    const cplx dir = waypoints[k + 1] - seg0;
    if (std::abs(dir) == 0.0) continue;
    auto rhs = [&](double t, const Vec2c& v) -> Vec2c {
      const cplx zeta = seg0 + t * dir;
      const cplx wpp =
          (a * b * v.u - (c - (a + b + 1.0) * zeta) * v.v) /
          (zeta * (1.0 - zeta));
      return {dir * v.v, dir * wpp};
    };
    y = rk45_integrate(rhs, 0.0, 1.0, y, vec2c_norm, opt);
  }
  return y.u;
}

bool one_minus_resonant(const HypParams& p, const EvalSettings& s) {
  return near_integer(p.c - p.a - p.b, s.integer_tol);
}

bool reciprocal_resonant(const HypParams& p, const EvalSettings& s) {
  return near_integer(p.a - p.b, s.integer_tol);
}

}  // namespace

const EvalSettings& default_eval_settings() {
  static const EvalSettings s{};
  return s;
}

EvalPlan plan_for(cplx z, const EvalSettings& s) {
  const double m_direct = std::abs(z);
  const double m_one_minus = std::abs(1.0 - z);
  const double m_reciprocal =
      m_direct == 0.0 ? std::numeric_limits<double>::infinity()
                      : 1.0 / m_direct;
  PlanTag tag;
  cplx eff;
  double mag;
  if (m_direct <= m_one_minus && m_direct <= m_reciprocal) {
    tag = PlanTag::direct_z, eff = z, mag = m_direct;
  } else if (m_one_minus <= m_reciprocal) {
    tag = PlanTag::one_minus_z, eff = 1.0 - z, mag = m_one_minus;
  } else {
    tag = PlanTag::reciprocal_z, eff = 1.0 / z, mag = m_reciprocal;
  }
  if (mag > s.series_radius) return {PlanTag::ode_fallback, z};
  return {tag, eff};
}

cplx hyp2f1_series(const HypParams& p, cplx z, const EvalSettings& s) {
  return series_impl(p.a, p.b, p.c, z, s);
}

cplx hyp2f1_with_plan(const HypParams& p, cplx z, PlanTag tag, CutSide side,
                      const EvalSettings& s) {
  if (on_cut(z, s.cut_tol)) {
    if (side == CutSide::none) {
      throw std::invalid_argument(
          "hyp2f1 on the cut [1, inf): side flag required");
    }
    z = cplx(z.real(), side == CutSide::above ? 1e-300 : -1e-300);
  }
  switch (tag) {
    case PlanTag::direct_z:
      return series_impl(p.a, p.b, p.c, z, s);
    case PlanTag::one_minus_z:
      return eval_one_minus_z(p, z, s);
    case PlanTag::reciprocal_z:
      return eval_reciprocal_z(p, z, s);
    case PlanTag::ode_fallback:
      return eval_ode_fallback(p, z, s);
  }
  throw std::logic_error("unreachable plan tag");
}

cplx hyp2f1(const HypParams& p, cplx z, CutSide side, const EvalSettings& s) {
  PlanTag tag = plan_for(z, s).tag;
  // A transformation blocked by resonant parameters is not "required":
  // the ODE continuation reaches the same point without one.
  if ((tag == PlanTag::one_minus_z && one_minus_resonant(p, s)) ||
      (tag == PlanTag::reciprocal_z && reciprocal_resonant(p, s))) {
    tag = PlanTag::ode_fallback;
  }
  return hyp2f1_with_plan(p, z, tag, side, s);
}

cplx hyp2f1_derivative(const HypParams& p, cplx z, int n, CutSide side,
                       const EvalSettings& s) {
  if (n < 0) throw std::invalid_argument("derivative order must be >= 0");
  cplx factor = 1.0;
  for (int k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    factor *= (p.a + dk) * (p.b + dk) / (p.c + dk);
  }
  const double dn = static_cast<double>(n);
  return factor * hyp2f1({p.a + dn, p.b + dn, p.c + dn}, z, side, s);
}

namespace {

// Walker state: F and F' at the current parameter triple.
struct ContigState {
  cplx a, b, c, z;
  cplx f, fp;
};

cplx second_derivative(const ContigState& st) {
  const cplx denom = st.z * (1.0 - st.z);
  if (std::abs(denom) < 1e-14) {
    throw Error(ErrorKind::DegenerateC,
                "contiguous walk needs z away from 0 and 1");
  }
  return (st.a * st.b * st.f - (st.c - (st.a + st.b + 1.0) * st.z) * st.fp) /
         denom;
}

void guard_small(cplx denom, const char* what) {
  if (std::abs(denom) < 1e-9) {
    throw Error(ErrorKind::DegenerateC, what);
  }
}

// a -> a+1 using F(a+1) = F + (z/a) F'.
void step_a_up(ContigState& st) {
  guard_small(st.a, "contiguous step divides by a near 0");
  const cplx fpp = second_derivative(st);
  const cplx f_new = st.f + (st.z / st.a) * st.fp;
  const cplx fp_new = (1.0 + 1.0 / st.a) * st.fp + (st.z / st.a) * fpp;
  st.a += 1.0;
  st.f = f_new;
  st.fp = fp_new;
}

// a -> a-1: invert the up-step from a-1, a 2x2 linear solve in (G, G').
void step_a_down(ContigState& st) {
  const cplx ap = st.a - 1.0;
  guard_small(ap, "contiguous step divides by a-1 near 0");
  const cplx one_minus_z = 1.0 - st.z;
  guard_small(one_minus_z, "contiguous walk needs z away from 1");
  // F  = G + (z/ap) G'
  // F' = (b/(1-z)) G + [(1 + 1/ap) - (c-(ap+b+1)z)/(ap(1-z))] G'
  const cplx m11 = 1.0, m12 = st.z / ap;
  const cplx m21 = st.b / one_minus_z;
  const cplx m22 = (1.0 + 1.0 / ap) -
                   (st.c - (ap + st.b + 1.0) * st.z) / (ap * one_minus_z);
  const cplx det = m11 * m22 - m12 * m21;
  guard_small(det, "contiguous down-step became singular");
  const cplx g = (m22 * st.f - m12 * st.fp) / det;
  const cplx gp = (m11 * st.fp - m21 * st.f) / det;
  st.a = ap;
  st.f = g;
  st.fp = gp;
}

void swap_ab(ContigState& st) { std::swap(st.a, st.b); }

// c -> c+1 using F(c+1) = c[(c-a-b) F + (1-z) F'] / ((c-a)(c-b)).
void step_c_up(ContigState& st) {
  const cplx denom = (st.c - st.a) * (st.c - st.b);
  guard_small(denom, "contiguous step divides by (c-a)(c-b) near 0");
  const cplx fpp = second_derivative(st);
  const cplx f_new =
      st.c * ((st.c - st.a - st.b) * st.f + (1.0 - st.z) * st.fp) / denom;
  const cplx fp_new =
      st.c * ((st.c - st.a - st.b - 1.0) * st.fp + (1.0 - st.z) * fpp) / denom;
  st.c += 1.0;
  st.f = f_new;
  st.fp = fp_new;
}

// c -> c-1 using F(c-1) = F + z F' / (c-1).
void step_c_down(ContigState& st) {
  const cplx cm = st.c - 1.0;
  guard_small(cm, "contiguous step divides by c-1 near 0");
  const cplx fpp = second_derivative(st);
  const cplx f_new = st.f + st.z * st.fp / cm;
  const cplx fp_new = (1.0 + 1.0 / cm) * st.fp + st.z * fpp / cm;
  st.c = cm;
  st.f = f_new;
  st.fp = fp_new;
}

void check_c(cplx c, double tol) {
  if (near_nonpositive_integer(c, tol)) {
    throw Error(ErrorKind::DegenerateC,
                "intermediate c within 1e-9 of a nonpositive integer");
  }
}

}  // namespace

cplx contiguous_reduce(const HypParams& p, cplx z, int l, int m, int n,
                       const EvalSettings& s) {
  if (std::abs(l) > 4 || std::abs(m) > 4 || std::abs(n) > 4) {
    throw std::invalid_argument("contiguous shifts limited to |shift| <= 4");
  }
  if (l == 0 && m == 0 && n == 0) return hyp2f1(p, z, CutSide::none, s);
  if (std::abs(z) <= 1e-14) return 1.0;  // every 2F1 equals 1 at z = 0

  // The two displayed one-shot ladders.
  if (l == 1 && m == 1 && n == 1) {
    guard_small(p.a * p.b * (1.0 - z), "ladder (1,1,1) divides by ab(1-z)");
    check_c(p.c + 1.0, s.integer_tol);
    const cplx f_c = hyp2f1(p, z, CutSide::none, s);
    const cplx f_c1 = hyp2f1({p.a, p.b, p.c + 1.0}, z, CutSide::none, s);
    return (p.c * (p.a + p.b - p.c) * f_c +
            (p.c - p.a) * (p.c - p.b) * f_c1) /
           (p.a * p.b * (1.0 - z));
  }
  if (l == 1 && m == 1 && n == 2) {
    guard_small(p.a * p.b * z, "ladder (1,1,2) divides by abz");
    check_c(p.c + 1.0, s.integer_tol);
    const cplx f_c = hyp2f1(p, z, CutSide::none, s);
    const cplx f_c1 = hyp2f1({p.a, p.b, p.c + 1.0}, z, CutSide::none, s);
    return p.c * (p.c + 1.0) / (p.a * p.b * z) * (f_c - f_c1);
  }

  // General walk: two base evaluations give (F, F'), then first-order
  // parameter steps carry the pair to the target triple.
  ContigState st{p.a, p.b, p.c, z, hyp2f1(p, z, CutSide::none, s),
                 hyp2f1_derivative(p, z, 1, CutSide::none, s)};
  for (int k = 0; k < std::abs(l); ++k) {
    l > 0 ? step_a_up(st) : step_a_down(st);
  }
  swap_ab(st);  // reuse the a-steps for b
  for (int k = 0; k < std::abs(m); ++k) {
    m > 0 ? step_a_up(st) : step_a_down(st);
  }
  swap_ab(st);
  for (int k = 0; k < std::abs(n); ++k) {
    check_c(st.c + (n > 0 ? 1.0 : -1.0), s.integer_tol);
    n > 0 ? step_c_up(st) : step_c_down(st);
  }
  return st.f;
}

}  // namespace bryant
