#pragma once

#include "bryant/mat2.hpp"

namespace bryant {

/// Parameters (a, b; c) of the Gauss hypergeometric function 2F1.
struct HypParams {
  cplx a, b, c;
};

/// Which representation the evaluation planner selected.
enum class PlanTag { direct_z, one_minus_z, reciprocal_z, ode_fallback };

/// Side flag for evaluation on the principal branch cut [1, inf).
enum class CutSide { none, above, below };

struct EvalPlan {
  PlanTag tag;
  cplx effective_argument;  // the series argument; |.| <= 0.8 unless fallback
};

/// Default tolerances; every entry point takes an optional override.
struct EvalSettings {
  double series_term_tol = 1e-17;  // term < tol * |partial sum| ...
  int consecutive_small = 3;       // ... this many consecutive times
  int max_terms = 10000;           // beyond this -> SeriesDiverged
  double series_radius = 0.8;      // planner switch radius
  double integer_tol = 1e-9;       // resonance / degenerate-c detection
  double cut_tol = 1e-12;          // distance treated as "on the cut"
  double ode_rtol = 1e-10;         // fallback continuation tolerance
};

const EvalSettings& default_eval_settings();

/// Representation choice for argument z: smallest of |z|, |1-z|, |1/z|
/// (ties broken in that order); ode_fallback when all exceed 0.8.
EvalPlan plan_for(cplx z, const EvalSettings& s = default_eval_settings());

/// Power series sum_{n} (a)_n (b)_n / (c)_n z^n / n!.  Caller keeps
/// |z| <= 0.8; c within 1e-9 of a nonpositive integer throws DegenerateC,
/// failure to converge in max_terms throws SeriesDiverged.
cplx hyp2f1_series(const HypParams& p, cplx z,
                   const EvalSettings& s = default_eval_settings());

/// 2F1(a, b; c; z) on the cut plane C \ [1, inf).  On the cut a side flag
/// is required; the value is the limit from that side.  Throws
/// ResonantParameters when the selected transformation needs c-a-b or a-b
/// away from the integers and they are not.
cplx hyp2f1(const HypParams& p, cplx z, CutSide side = CutSide::none,
            const EvalSettings& s = default_eval_settings());

/// Force a specific representation (for cross-representation consistency
/// tests); tag ode_fallback continues the hypergeometric ODE from a series
/// anchor at 0.5 * exp(i arg z).
cplx hyp2f1_with_plan(const HypParams& p, cplx z, PlanTag tag,
                      CutSide side = CutSide::none,
                      const EvalSettings& s = default_eval_settings());

/// n-th derivative: (a)_n (b)_n / (c)_n * 2F1(a+n, b+n; c+n; z).
cplx hyp2f1_derivative(const HypParams& p, cplx z, int n,
                       CutSide side = CutSide::none,
                       const EvalSettings& s = default_eval_settings());

/// 2F1(a+l, b+m; c+n; z) from at most two base evaluations of 2F1 at
/// (a, b; c), moved by contiguous steps.  The one-step ladder relations
/// for (+1,+1,+1) and (+1,+1,+2) are applied as single closed formulas.
/// |l|, |m|, |n| <= 4; intermediate parameter degeneracies throw
/// DegenerateC.
cplx contiguous_reduce(const HypParams& p, cplx z, int l, int m, int n,
                       const EvalSettings& s = default_eval_settings());

}  // namespace bryant
