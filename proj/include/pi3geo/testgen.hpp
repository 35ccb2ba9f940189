#pragma once

// Deterministic generators of random-but-reproducible expressions, curves and
// surfaces. They back the numerical verification suite and the property
// tests: every draw comes from an explicitly seeded generator, so equal seeds
// give byte-identical behavior.
//
// All generated objects are safe on their stated evaluation domains
// (logarithms shifted positive, divisors bounded away from zero, graph slopes
// bounded away from degeneracy).

#include <cstdint>
#include <random>
#include <string>

#include "pi3geo/curve.hpp"
#include "pi3geo/expr.hpp"
#include "pi3geo/surface.hpp"

namespace pi3::testgen {

/// Seeded random source. uniform() maps raw 64-bit draws through a fixed
/// 53-bit scaling, so sequences depend only on the seed (not on library
/// distribution internals).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform magnitude in [lo, hi) with a random sign.
  double coef(double lo, double hi);

  /// Uniform integer in [0, n).
  int pick(int n);

  /// True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 gen_;
};

/// Random univariate expression over `var`, smooth and finite on [-1, 1]
/// (also on [1, 2]); amp scales all term coefficients.
std::string random_expr_string1(Rng& rng, const std::string& var,
                                double amp = 1.0);

/// Random bivariate expression over (v1, v2), smooth and finite on [-1, 1]^2.
std::string random_expr_string2(Rng& rng, const std::string& v1,
                                const std::string& v2, double amp = 1.0);

ExprAst random_smooth1(Rng& rng, const std::string& var, double amp = 1.0);
ExprAst random_smooth2(Rng& rng, const std::string& v1, const std::string& v2,
                       double amp = 1.0);

/// Arc-length curve of the requested class (spacelike or timelike) with
/// non-constant curvature, admissible on the whole range, with a random
/// smooth height. Tangent top views come from (w + 1/w, w - 1/w)/2 with
/// w(s) = beta s + gamma kept above 0.25.
CurveJet random_arclength_curve(Rng& rng, CausalClass cls, Interval range);

/// Lightlike curve lying in the plane x + sign*y = c0 by construction; the
/// chosen sign and constant are reported through the out-parameters.
CurveJet random_lightlike_curve(Rng& rng, Interval range, int* plane_sign,
                                double* plane_c0);

/// Admissible surface patch on the domain: a graph-like immersion whose
/// top-view Jacobian stays above 0.3.
SurfaceJet random_admissible_surface(Rng& rng, Rect domain);

/// Random revolution-profile height, smooth on [1, 2].
ExprAst random_profile_height(Rng& rng);

}  // namespace pi3::testgen
