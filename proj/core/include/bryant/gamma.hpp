#pragma once

#include <vector>

#include "bryant/mat2.hpp"

namespace bryant {

/// log Gamma(z) by the Lanczos approximation, reflection for Re z < 1/2.
/// The returned value is a logarithm of Gamma(z) (not necessarily the
/// principal one); exp() of sums/differences of these is exact for
/// products and ratios of Gamma values.  Relative error of exp(log_gamma)
/// is <= 1e-12 for |z| <= 50.  Arguments within 1e-12 of a nonpositive
/// integer throw GammaPole.
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)).
cplx gamma_complex(cplx z);

/// 1/Gamma(z), entire: returns exactly 0 at nonpositive integers
/// (within 1e-12), never throws for finite input.
cplx rgamma(cplx z);

/// exp(sum log Gamma(num) - sum log Gamma(den)): a product of Gamma values
/// divided by another, computed pole-safely.  A pole among the numerator
/// arguments throws GammaPole; a pole among the denominator arguments makes
/// the result 0 (handled via rgamma).
cplx gamma_ratio(const std::vector<cplx>& numerator,
                 const std::vector<cplx>& denominator);

}  // namespace bryant
