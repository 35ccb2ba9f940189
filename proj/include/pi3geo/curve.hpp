#pragma once

// Curves in the pseudo-isotropic space: causal classification, arc-length and
// admissibility checks, curvature/torsion/Frenet frames, the derivative system
// of the moving frame, reconstruction from invariants, and the hyperbolic
// cylindrical family.
//
// Conventions used throughout:
//   - A curve is "admissible" when the top views of its first two derivatives
//     are linearly independent (the osculating plane is nowhere isotropic).
//   - All curvature-type operations assume an arc-length parameterization
//     (|<a',a'>| = 1) and validate it pointwise instead of reparameterizing.
//   - kappa is reported nonnegative (square-root form); the signed 2x2
//     determinant det(top a', top a'') is exposed separately and satisfies
//     |signed_det| = kappa for arc-length curves.

#include <functional>
#include <vector>

#include "pi3geo/core.hpp"
#include "pi3geo/error.hpp"
#include "pi3geo/expr.hpp"
#include "pi3geo/jet.hpp"

namespace pi3 {

/// Position and first three derivatives of a curve at one parameter value.
struct CurvePoint {
  Vec3 p;
  Vec3 d1;
  Vec3 d2;
  Vec3 d3;
};

/// Evaluator s -> (alpha, alpha', alpha'', alpha''') over a closed interval.
class CurveJet {
 public:
  CurveJet(std::function<CurvePoint(double)> eval, Interval param_range);

  /// Builds the evaluator from three univariate expressions sharing one
  /// variable; derivatives come from third-order jet evaluation.
  static CurveJet from_exprs(const ExprAst& x, const ExprAst& y, const ExprAst& z,
                             Interval param_range);

  CurvePoint operator()(double s) const;
  const Interval& param_range() const { return range_; }

 private:
  std::function<CurvePoint(double)> eval_;
  Interval range_;
};

/// Moving frame; B is always the isotropic direction (0,0,1).
struct FrenetFrame {
  Vec3 T;
  Vec3 N;
  Vec3 B;
};

/// kappa (nonnegative), tau, and the signed top-view determinant
/// det(top a', top a''), whose absolute value equals kappa for arc-length
/// curves.
struct CurveInvariants {
  double kappa = 0.0;
  double tau = 0.0;
  double signed_det = 0.0;
};

/// Isotropic plane x + sign*y = c0 containing a lightlike curve.
struct LightlikePlane {
  int sign = 1;  // +1 or -1
  double c0 = 0.0;
};

/// Curve and frame samples produced by reconstruct_from_invariants.
struct ReconstructedCurve {
  std::vector<double> s;
  std::vector<Vec3> p;
  std::vector<FrenetFrame> frame;
};

/// Common causal class of the tangent on a uniform n_samples grid.
/// Errors: invalid_params (n_samples < 2), irregular (zero tangent),
/// mixed_causality (names the first two disagreeing samples).
CausalClass classify_curve(const CurveJet& c, int n_samples);

/// True iff |x'^2 - y'^2| = 1 within tol at all samples. Requires the curve to
/// classify spacelike or timelike (classification errors propagate).
bool is_arclength(const CurveJet& c, int n_samples, double tol = 1e-8);

/// True iff |det(top a', top a'')| stays above the degeneracy threshold
/// (1e-12) at all samples. Errors: irregular.
bool is_admissible(const CurveJet& c, int n_samples);

/// Nonnegative curvature at s: sqrt(y''^2 - x''^2) for spacelike tangents,
/// sqrt(x''^2 - y''^2) for timelike ones (radicand clamped at zero).
/// Errors: not_admissible (tangent (nearly) lightlike or isotropic at s),
/// not_arc_length (unit-speed violated beyond arc_tol).
double curvature(const CurveJet& c, double s, double arc_tol = 1e-8);

/// Signed top-view determinant det(top a', top a'') at s, same preconditions
/// as curvature.
double signed_curvature_det(const CurveJet& c, double s, double arc_tol = 1e-8);

/// tau = det(a', a'', a''') / kappa^2. Errors: zero_curvature when
/// kappa(s) < 1e-12, plus the curvature preconditions.
double torsion(const CurveJet& c, double s, double arc_tol = 1e-8);

/// kappa, tau and signed_det together. Errors as torsion.
CurveInvariants curve_invariants(const CurveJet& c, double s,
                                 double arc_tol = 1e-8);

/// T = a', N = a''/kappa, B = (0,0,1). Errors as torsion.
FrenetFrame frenet_frame(const CurveJet& c, double s, double arc_tol = 1e-8);

/// Right-hand side of the moving-frame system:
///   T' = kappa N,   N' = kappa T + eps tau B,   B' = 0,
/// where eps = sign(T1 N2 - T2 N1) is the orientation of the frame's top
/// view, a first integral of the system (it stays +-1 along any solution).
/// The same system serves both supported classes; cls only validates support.
/// Errors: unsupported_class unless cls is spacelike or timelike.
FrenetFrame frenet_rhs(CausalClass cls, double kappa, double tau,
                       const FrenetFrame& frame);

/// Integrates p' = T together with frenet_rhs by classical fixed-step RK4 from
/// the given initial point and frame, sampling every node of the range.
/// Errors: invalid_params (step <= 0 or empty range), unsupported_class,
/// zero_curvature if kappa_fn drops below 1e-12 during integration.
ReconstructedCurve reconstruct_from_invariants(
    CausalClass cls, const std::function<double(double)>& kappa_fn,
    const std::function<double(double)>& tau_fn, const Vec3& p0,
    const FrenetFrame& f0, const Interval& range, double step);

/// Finds the isotropic plane x + sign*y = c0 containing a lightlike curve,
/// trying sign = +1 first. Errors: not_lightlike, no_such_plane when neither
/// sign keeps the residual within tol (this would contradict the planarity
/// property of lightlike curves and must not occur).
LightlikePlane lightlike_plane(const CurveJet& c, int n_samples,
                               double tol = 1e-10);

/// Builds (cosh s, sinh s, z(s)) from a univariate height expression.
CurveJet hyperbolic_cylindrical(const ExprAst& z_ast,
                                Interval param_range = {-1.0, 1.0});

/// Hyperbolic cylindrical curve with constant torsion tau0:
/// z(s) = tau0*s + c1*e^s - c2*e^{-s} + c3.
CurveJet constant_torsion_cylindrical(double tau0, double c1, double c2,
                                      double c3,
                                      Interval param_range = {-1.0, 1.0});

/// The image curve under a motion: positions are mapped by m, derivatives by
/// its linear part.
CurveJet transformed(const CurveJet& c, const PiMotion& m);

}  // namespace pi3
