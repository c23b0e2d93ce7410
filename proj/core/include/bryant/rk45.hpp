#pragma once

#include <algorithm>
#include <cmath>

#include "bryant/error.hpp"

namespace bryant {

/// Settings for the adaptive embedded Runge-Kutta integrator.
struct Rk45Options {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-2;
  double h_min = 1e-13;  // controller below this -> StepUnderflow
};

/// Dormand-Prince 5(4) with PI step-size control.
///
/// Integrates y' = f(t, y) from t0 to t1 (t0 < t1).  State must support
/// State+State, State-State and scalar*State; norm(State) -> double supplies
/// the max-abs measure used by the error controller.  Used for analytic
/// continuation of frames along paths, so t is always a real path parameter.
template <class State, class Rhs, class Norm>
State rk45_integrate(Rhs&& f, double t0, double t1, State y0, Norm&& norm,
                     const Rk45Options& opt = {}) {
  // Butcher tableau (Dormand-Prince), 5th-order propagation, FSAL.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // y5 - y4 error weights.
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double t = t0;
  State y = y0;
  State k1 = f(t, y);
  double h = std::min(opt.h_init, t1 - t0);
  double err_prev = 1.0;
  bool rejected = false;

  while (t < t1) {
    if (h < opt.h_min) {
      throw Error(ErrorKind::StepUnderflow,
                  "integrator step fell below 1e-13");
    }
    h = std::min(h, t1 - t);

    const State k2 = f(t + c2 * h, y + (h * a21) * k1);
    const State k3 = f(t + c3 * h, y + (h * a31) * k1 + (h * a32) * k2);
    const State k4 =
        f(t + c4 * h, y + (h * a41) * k1 + (h * a42) * k2 + (h * a43) * k3);
    const State k5 = f(t + c5 * h, y + (h * a51) * k1 + (h * a52) * k2 +
                                       (h * a53) * k3 + (h * a54) * k4);
    const State k6 = f(t + h, y + (h * a61) * k1 + (h * a62) * k2 +
                                  (h * a63) * k3 + (h * a64) * k4 +
                                  (h * a65) * k5);
    const State y_new = y + (h * b1) * k1 + (h * b3) * k3 + (h * b4) * k4 +
                        (h * b5) * k5 + (h * b6) * k6;
    const State k7 = f(t + h, y_new);  // FSAL stage

    const State err_vec = (h * e1) * k1 + (h * e3) * k3 + (h * e4) * k4 +
                          (h * e5) * k5 + (h * e6) * k6 + (h * e7) * k7;
    const double scale =
        opt.atol + opt.rtol * std::max(norm(y), norm(y_new));
    const double err = norm(err_vec) / scale;

    if (err <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;
      // PI controller (Hairer): alpha = 1/5 - 0.75*beta, beta = 0.04.
      const double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.17) *
                         std::pow(err_prev, 0.04);
      double grow = std::clamp(fac, 0.2, 10.0);
      if (rejected) grow = std::min(grow, 1.0);
      h *= grow;
      err_prev = std::max(err, 1e-16);
      rejected = false;
    } else {
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      rejected = true;
    }
  }
  return y;
}

}  // namespace bryant
