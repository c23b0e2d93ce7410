#include "bryant/gauge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bryant/error.hpp"

namespace bryant {
namespace {

constexpr double kDenomFloor = 1e-12;

void require_denominator(cplx v, const char* name) {
  if (std::abs(v) <= kDenomFloor) {
    throw Error(ErrorKind::DegenerateData,
                std::string("gauge denominator ") + name +
                    " has magnitude <= 1e-12");
  }
}

void require_interior(cplx z) {
  if (std::abs(z) < 1e-8 || std::abs(z - 1.0) < 1e-8) {
    throw std::invalid_argument("gauge evaluation too close to a puncture");
  }
}

}  // namespace

GaugeConstants gauge_constants(const TrinoidData& w) {
  const Pairings pr = pairings(w);
  const cplx s10 = pr.s10, s0i = pr.s0inf, s1i = pr.s1inf;
  const cplx delta_sym = pr.delta;
  require_denominator(delta_sym, "s10*s0inf + s10*s1inf + s0inf*s1inf");

  GaugeConstants gc;
  gc.alpha = 0.5 * (1.0 - principal_root(1.0 + 4.0 * s0i + 4.0 * s10));
  require_denominator(gc.alpha, "alpha");

  require_denominator(s0i + s10, "s0inf + s10");
  gc.beta = 0.5 * (s10 * (1.0 - 2.0 * gc.alpha) - s0i) / (s0i + s10);
  gc.gamma = s0i * (s1i / delta_sym + 1.0 / gc.alpha);

  const cplx delta_den =
      delta_sym - s0i * s10 + (delta_sym + s1i) * gc.alpha;
  require_denominator(delta_den,
                      "delta - s0inf*s10 + (delta + s1inf)*alpha");
  require_denominator(s0i, "s0inf");
  gc.delta = (delta_sym / s0i) * (delta_sym + s1i * gc.alpha) / delta_den;

  const cplx k_den = delta_sym * delta_sym + s10 * s0i * s1i;
  require_denominator(k_den, "delta^2 + s10*s0inf*s1inf");
  gc.k = delta_sym * (s0i * s10 - delta_sym * gc.alpha) / k_den;

  gc.mu = 2.0 * s0i * (1.0 - gc.k * s1i / delta_sym);
  require_denominator(gc.mu, "mu");

  gc.alpha1 = -w.pinf * s10 / delta_sym;
  gc.alpha2 = w.qinf * s10 / delta_sym;
  gc.beta1 = w.p0 * s1i / delta_sym;
  gc.beta2 = -w.q0 * s1i / delta_sym;
  return gc;
}

Mat2 gauge_B(const TrinoidData& w, const GaugeConstants& gc, cplx z) {
  return Mat2{eval_P(w, z), gc.alpha1 * z + gc.beta1, -eval_Q(w, z),
              gc.alpha2 * z + gc.beta2};
}

Mat2 gauge_D(const TrinoidData& w, const GaugeConstants& gc, cplx z) {
  require_interior(z);
  const cplx s = slit_pow(z - 1.0, 0.5);
  const Mat2 C{s, 0.0, gc.k / (z * s), 1.0 / s};
  const Mat2 M{2.0 * gc.alpha / gc.mu, 0.0, 1.0, 1.0};
  return gauge_B(w, gc, z) * C * M;
}

Mat2 gauge_D_prime(const TrinoidData& w, const GaugeConstants& gc, cplx z) {
  require_interior(z);
  const cplx s = slit_pow(z - 1.0, 0.5);
  const cplx sp = 0.5 / s;
  const Mat2 B = gauge_B(w, gc, z);
  const Mat2 C{s, 0.0, gc.k / (z * s), 1.0 / s};
  const Mat2 M{2.0 * gc.alpha / gc.mu, 0.0, 1.0, 1.0};
  // B' has the exact rational derivatives of P and Q in its first column.
  const Mat2 Bp{eval_P_prime(w, z), gc.alpha1, -eval_Q_prime(w, z),
                gc.alpha2};
  const Mat2 Cp{sp, 0.0, -gc.k / (z * z * s) - gc.k / (2.0 * z * s * s * s),
                -sp / (s * s)};
  return (Bp * C + B * Cp) * M;
}

FuchsianParams fuchsian_from(const GaugeConstants& gc) {
  return FuchsianParams::from(gc.alpha, gc.beta, gc.gamma, gc.delta);
}

}  // namespace bryant
