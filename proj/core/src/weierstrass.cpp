#include "bryant/weierstrass.hpp"

#include <cmath>
#include <string>

#include "bryant/error.hpp"
#include "bryant/fuchsian.hpp"

namespace bryant {

namespace {

constexpr double kPairingFloor = 1e-10;
constexpr double kRouteTol = 1e-10;

const double kSqrt3 = std::sqrt(3.0);

void require_magnitude(cplx value, const char* name) {
  if (std::abs(value) <= kPairingFloor) {
    throw Error(ErrorKind::DegenerateData,
                std::string("pairing ") + name + " has magnitude <= 1e-10");
  }
}

}  // namespace

Pairings pairings(const TrinoidData& w) {
  Pairings pr;
  pr.s10 = w.p1 * w.q0 - w.p0 * w.q1;
  pr.s0inf = w.p0 * w.qinf - w.pinf * w.q0;
  pr.s1inf = w.p1 * w.qinf - w.pinf * w.q1;
  pr.delta = pr.s10 * pr.s0inf + pr.s10 * pr.s1inf + pr.s0inf * pr.s1inf;
  require_magnitude(pr.s10, "s10");
  require_magnitude(pr.s0inf, "s0inf");
  require_magnitude(pr.s1inf, "s1inf");
  require_magnitude(pr.delta, "delta");
  return pr;
}

EndExponents end_exponents(const TrinoidData& w) {
  const Pairings pr = pairings(w);
  EndExponents e;
  e.c0 = pr.s10 + pr.s0inf;
  e.c1 = pr.s10 + pr.s1inf;
  e.cinf = pr.s0inf + pr.s1inf;

  // Independent route: r = a_{-1} b_0 - a_0 b_{-1} from the Laurent
  // coefficients of P, Q in a local coordinate centered at the puncture.
  const cplx r0 = w.p0 * (-w.q1 + w.qinf) - (-w.p1 + w.pinf) * w.q0;
  const cplx r1 = w.p1 * (w.q0 + w.qinf) - (w.p0 + w.pinf) * w.q1;
  const cplx rinf = (w.p0 + w.p1) * w.qinf - w.pinf * (w.q0 + w.q1);
  const double miss = std::max(
      {std::abs(r0 - e.c0), std::abs(r1 - e.c1), std::abs(rinf - e.cinf)});
  if (miss > kRouteTol) {
    throw Error(ErrorKind::MismatchedExponents,
                "pairing route and local-expansion route differ by " +
                    std::to_string(miss));
  }

  e.d0 = 0.25 + e.c0;
  e.d1 = 0.25 + e.c1;
  e.dinf = 0.25 + e.cinf;
  e.alpha0 = 0.5 + principal_root(e.d0);
  e.alpha1 = 0.5 + principal_root(e.d1);
  e.alphainf = 0.5 + principal_root(e.dinf);
  return e;
}

double frac_half(double x) { return x - std::floor(x + 0.5); }

cplx eval_P(const TrinoidData& w, cplx z) {
  return w.p0 / z + w.p1 / (z - 1.0) + w.pinf;
}

cplx eval_Q(const TrinoidData& w, cplx z) {
  return w.q0 / z + w.q1 / (z - 1.0) + w.qinf;
}

cplx eval_P_prime(const TrinoidData& w, cplx z) {
  return -w.p0 / (z * z) - w.p1 / ((z - 1.0) * (z - 1.0));
}

cplx eval_Q_prime(const TrinoidData& w, cplx z) {
  return -w.q0 / (z * z) - w.q1 / ((z - 1.0) * (z - 1.0));
}

Mat2 spinor_system(const TrinoidData& w, cplx z) {
  const cplx P = eval_P(w, z);
  const cplx Q = eval_Q(w, z);
  return {P * Q, P * P, -Q * Q, -P * Q};
}

HopfGauss hopf_and_gauss(const TrinoidData& w, cplx z) {
  const cplx P = eval_P(w, z);
  const cplx Q = eval_Q(w, z);
  HopfGauss hg;
  hg.hopf = eval_P_prime(w, z) * Q - eval_Q_prime(w, z) * P;
  if (std::abs(Q) == 0.0) {
    hg.at_infinity = true;
  } else {
    hg.gauss = -P / Q;
  }
  return hg;
}

cplx gauss_map(const TrinoidData& w, cplx z) {
  const HopfGauss hg = hopf_and_gauss(w, z);
  if (hg.at_infinity) {
    throw Error(ErrorKind::GaussMapPole, "Q vanishes; Gauss map at infinity");
  }
  return hg.gauss;
}

TrinoidData normalize_ends(cplx q0, cplx q1, cplx qinf) {
  if (std::abs(q0) <= kPairingFloor || std::abs(q1) <= kPairingFloor ||
      std::abs(qinf) <= kPairingFloor) {
    throw Error(ErrorKind::DegenerateData,
                "end normalization needs all q coefficients nonzero");
  }
  TrinoidData w;
  w.q0 = q0;
  w.q1 = q1;
  w.qinf = qinf;
  w.p0 = (2.0 - kSqrt3) * q0;
  w.p1 = -q1;
  w.pinf = (2.0 + kSqrt3) * qinf;
  return w;
}

TrinoidData symmetric_family(double d0) {
  // For q = t (2+sqrt(3), 1+sqrt(3), 1) all three pairings equal
  // -(6+4 sqrt(3)) t^2, so d_j = 1/4 - 2 (6+4 sqrt(3)) t^2 at every end.
  const double x = 0.5 * (0.25 - d0);
  if (std::abs(x) <= kPairingFloor) {
    throw Error(ErrorKind::DegenerateData,
                "d0 = 1/4 collapses the symmetric family to zero data");
  }
  const cplx t = std::sqrt(cplx(x / (6.0 + 4.0 * kSqrt3), 0.0));
  const TrinoidData w =
      normalize_ends((2.0 + kSqrt3) * t, (1.0 + kSqrt3) * t, t);
  const EndExponents e = end_exponents(w);
  const double achieved = std::max({std::abs(e.d0 - d0), std::abs(e.d1 - d0),
                                    std::abs(e.dinf - d0)});
  if (achieved > 1e-10) {
    throw Error(ErrorKind::NotRepresentable,
                "symmetric family missed the requested d0 by " +
                    std::to_string(achieved));
  }
  return w;
}

TrinoidData trinoid_from_d(double d0, double d1, double dinf) {
  // With the end normalization the pairings are fixed multiples of the
  // products q0 q1, q0 qinf, q1 qinf; the requested c-values determine the
  // pairings linearly, hence the products, hence the q themselves.
  const double c0 = d0 - 0.25;
  const double c1 = d1 - 0.25;
  const double cinf = dinf - 0.25;
  const cplx s10 = 0.5 * (c0 + c1 - cinf);
  const cplx s0inf = 0.5 * (c0 - c1 + cinf);
  const cplx s1inf = 0.5 * (-c0 + c1 + cinf);
  require_magnitude(s10, "s10");
  require_magnitude(s0inf, "s0inf");
  require_magnitude(s1inf, "s1inf");
  const cplx u = s10 / cplx(-(3.0 - kSqrt3));    // q0 q1
  const cplx v = s0inf / cplx(-2.0 * kSqrt3);    // q0 qinf
  const cplx ww = s1inf / cplx(-(3.0 + kSqrt3)); // q1 qinf
  const cplx q0 = std::sqrt(u * v / ww);
  return normalize_ends(q0, u / q0, v / q0);
}

}  // namespace bryant
