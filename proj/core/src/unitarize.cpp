#include "bryant/unitarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bryant/error.hpp"
#include "bryant/gamma.hpp"

namespace bryant {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-9;
constexpr double kImagTol = 1e-10;

}  // namespace

double trig_product(double d0, double d1, double dinf) {
  const double r0 = std::sqrt(d0), r1 = std::sqrt(d1), ri = std::sqrt(dinf);
  const double a = 0.5 - r0 + r1 + ri;
  const double b = 0.5 - r0 + r1 - ri;
  const double c = 1.0 - 2.0 * r0;
  return std::sin(kPi * a) * std::sin(kPi * b) * std::sin(kPi * (a - c)) *
         std::sin(kPi * (b - c));
}

UnitarizableDecision moduli_decision(double d0, double d1, double dinf) {
  UnitarizableDecision dec;
  dec.moduli.d0 = d0;
  dec.moduli.d1 = d1;
  dec.moduli.dinf = dinf;
  dec.exponents_real = d0 >= 0.0 && d1 >= 0.0 && dinf >= 0.0;
  if (!dec.exponents_real) {
    dec.unitarizable = false;
    return dec;
  }
  const double x = std::abs(frac_half(std::sqrt(d0)));
  const double y = std::abs(frac_half(std::sqrt(d1)));
  const double z = std::abs(frac_half(std::sqrt(dinf)));
  dec.moduli.delta1 = x;
  dec.moduli.delta2 = y;
  dec.moduli.delta3 = z;
  dec.margins = {x + y + z - 0.5, 0.5 - (x + y - z), 0.5 - (x + z - y),
                 0.5 - (y + z - x)};
  dec.margin = *std::min_element(dec.margins.begin(), dec.margins.end());
  dec.unitarizable = dec.margin > 0.0;
  dec.trig_product = trig_product(d0, d1, dinf);
  // The sign of the product and the region test must agree away from the
  // boundary of the region.
  if (std::abs(dec.margin) > kBoundaryTol &&
      (dec.trig_product < 0.0) != dec.unitarizable) {
    throw Error(ErrorKind::InconsistentCriteria,
                "trigonometric and moduli-region unitarizability tests "
                "disagree away from the region boundary");
  }
  return dec;
}

UnitarizableDecision unitarizable(const TrinoidData& w) {
  const EndExponents ee = end_exponents(w);
  const double scale =
      std::max({1.0, std::abs(ee.d0), std::abs(ee.d1), std::abs(ee.dinf)});
  if (std::abs(ee.d0.imag()) > kImagTol * scale ||
      std::abs(ee.d1.imag()) > kImagTol * scale ||
      std::abs(ee.dinf.imag()) > kImagTol * scale) {
    UnitarizableDecision dec;
    dec.exponents_real = false;
    dec.unitarizable = false;
    dec.moduli.d0 = ee.d0.real();
    dec.moduli.d1 = ee.d1.real();
    dec.moduli.dinf = ee.dinf.real();
    return dec;
  }
  return moduli_decision(ee.d0.real(), ee.d1.real(), ee.dinf.real());
}

double unitarizer_r(const FuchsianParams& fp, const GaugeConstants& gc) {
  const cplx a = fp.a, b = fp.b, c = fp.c;
  cplx x;
  try {
    const cplx ratio = gamma_ratio({c, c, -a, -b, a - c, b - c},
                                   {-c, -c, a, b, c - a, c - b});
    const cplx pre = (2.0 * fp.alpha + 1.0) * (2.0 * fp.alpha + 1.0) *
                     gc.gamma /
                     ((2.0 * fp.alpha - 1.0) * (2.0 * fp.alpha - 1.0) *
                      gc.delta);
    x = pre * ratio;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GammaPole) {
      throw Error(ErrorKind::NotUnitarizable,
                  "unitarizer relation degenerates at a pole of the "
                  "Gamma-function ratio");
    }
    throw;
  }
  if (!(x.real() > 0.0) || std::abs(x.imag()) > 1e-8 * std::abs(x)) {
    throw Error(ErrorKind::NotUnitarizable,
                "the quantity the fourth power of the unitarizer scale "
                "must invert is not positive real");
  }
  return std::pow(x.real(), -0.25);
}

double unitarity_defect_for_r(const MonodromyBundle& mb, double r) {
  const Mat2 R = Mat2::diag(r, 1.0 / r);
  const Mat2 Rinv = Mat2::diag(1.0 / r, r);
  return std::max({unitarity_defect(Rinv * mb.M0 * R),
                   unitarity_defect(Rinv * mb.M1 * R),
                   unitarity_defect(Rinv * mb.Minf * R)});
}

double scan_unitarizer_r(const MonodromyBundle& mb) {
  // Coarse log-spaced scan.
  const int n = 601;
  const double lo = std::log(1e-3), hi = std::log(1e3);
  int best = 0;
  double best_defect = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double r = std::exp(lo + (hi - lo) * i / (n - 1));
    const double d = unitarity_defect_for_r(mb, r);
    if (d < best_defect) {
      best_defect = d;
      best = i;
    }
  }
  // Golden-section refinement in log space around the best bracket.
  const double step = (hi - lo) / (n - 1);
  double a = lo + step * std::max(0, best - 1);
  double b = lo + step * std::min(n - 1, best + 1);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = unitarity_defect_for_r(mb, std::exp(c));
  double fd = unitarity_defect_for_r(mb, std::exp(d));
  for (int it = 0; it < 120 && (b - a) > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = unitarity_defect_for_r(mb, std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = unitarity_defect_for_r(mb, std::exp(d));
    }
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace bryant
