#include "bryant/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bryant/error.hpp"

namespace bryant {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 607/128, 15 terms.  Good for ~1e-13 relative
// accuracy over the half-plane Re z >= 1/2 in double precision.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool near_nonpositive_integer(cplx z, double tol) {
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z - cplx(r, 0.0)) <= tol;
}

// Core Lanczos evaluation, valid for Re z >= 1/2.
cplx log_gamma_half_plane(cplx z) {
  const cplx x = z - 1.0;
  cplx s = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    s += kLanczos[k] / (x + static_cast<double>(k));
  }
  const cplx t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(s);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z, 1e-12)) {
    throw Error(ErrorKind::GammaPole,
                "Gamma argument within 1e-12 of a nonpositive integer");
  }
  if (z.real() >= 0.5) {
    return log_gamma_half_plane(z);
  }
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(kPi) - std::log(std::sin(kPi * z)) -
         log_gamma_half_plane(1.0 - z);
}

cplx gamma_complex(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (near_nonpositive_integer(z, 1e-12)) {
    return cplx(0.0);
  }
  if (z.real() >= 0.5) {
    return std::exp(-log_gamma_half_plane(z));
  }
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi.
  return std::sin(kPi * z) * std::exp(log_gamma_half_plane(1.0 - z)) / kPi;
}

cplx gamma_ratio(const std::vector<cplx>& numerator,
                 const std::vector<cplx>& denominator) {
  cplx log_acc = 0.0;
  for (cplx z : numerator) {
    log_acc += log_gamma(z);  // throws GammaPole at numerator poles
  }
  for (cplx z : denominator) {
    if (near_nonpositive_integer(z, 1e-12)) {
      return cplx(0.0);  // denominator pole: the ratio vanishes
    }
    log_acc -= log_gamma(z);
  }
  return std::exp(log_acc);
}

}  // namespace bryant
