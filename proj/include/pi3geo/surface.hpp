#pragma once

// Admissible (timelike) surfaces: fundamental forms, Gaussian and mean
// curvature, the two graph specializations with their closed-form curvature
// formulas, the flat-graph Laplacian, and the decomposition of a surface
// curve's acceleration into side-tangential and normal parts.
//
// Conventions:
//   - The metric determinant satisfies det g = -J^2 where J is the top-view
//     Jacobian x_{u1} y_{u2} - x_{u2} y_{u1}; |J| < 1e-12 counts as a
//     degenerate (lightlike) tangent plane.
//   - h_ij use the parameter order (r_{u1}, r_{u2}) in the 3x3 determinants;
//     swapping the parameters flips the sign of H but not of K.
//   - Graphs x = u(y,z) are parameterized in the order (z, y) so that the
//     closed-form curvature expressions match the general formulas wherever
//     u_z > 0.

#include <functional>
#include <utility>

#include "pi3geo/core.hpp"
#include "pi3geo/error.hpp"
#include "pi3geo/expr.hpp"
#include "pi3geo/jet.hpp"

namespace pi3 {

/// Position and first/second partials of a surface patch at one parameter
/// pair.
struct SurfacePoint {
  Vec3 r;
  Vec3 ru;
  Vec3 rv;
  Vec3 ruu;
  Vec3 ruv;
  Vec3 rvv;
};

/// Evaluator (u1,u2) -> (r, r_{u1}, r_{u2}, second partials) over a closed
/// rectangle.
class SurfaceJet {
 public:
  SurfaceJet(std::function<SurfacePoint(double, double)> eval, Rect param_domain);

  /// Builds the evaluator from three expressions in at most two shared
  /// variables; partials come from second-order jet evaluation.
  static SurfaceJet from_exprs(const ExprAst& x, const ExprAst& y,
                               const ExprAst& z, Rect param_domain);

  SurfacePoint operator()(double u, double v) const;
  const Rect& param_domain() const { return domain_; }

 private:
  std::function<SurfacePoint(double, double)> eval_;
  Rect domain_;
};

/// First and second fundamental form coefficients at a point, plus det g.
struct FundamentalForms {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;
  double det_g = 0.0;
};

/// Acceleration split r'' = kappa_g * sigma + kappa_n * xi for a unit-speed
/// surface curve, with xi = (0,0,1). residual is the max-norm defect of that
/// vector equation (diagnostic; values >= 1e-8 raise an error).
struct AccelDecomposition {
  double kappa_g = 0.0;
  double kappa_n = 0.0;
  Vec3 sigma = Vec3::Zero();
  double residual = 0.0;
};

/// Parameter curve s -> (u1(s), u2(s)) with two derivatives, used to trace
/// curves inside a surface patch.
struct SurfaceParamCurve {
  std::function<Jet1(double)> u1;
  std::function<Jet1(double)> u2;

  static SurfaceParamCurve from_exprs(const ExprAst& u1_ast,
                                      const ExprAst& u2_ast);
};

/// g_ij from the scalar product of first partials and h_ij from
/// det(r_{u1}, r_{u2}, r_{u_i u_j}) / sqrt(|det g|).
/// Errors: degenerate_metric when |J| < 1e-12.
FundamentalForms fundamental_forms(const SurfaceJet& sj, double u, double v);

/// K = det h / det g. Errors: degenerate_metric.
double gauss_curvature(const SurfaceJet& sj, double u, double v);

/// H = (g11 h22 - 2 g12 h12 + g22 h11) / (2 det g). Errors: degenerate_metric.
double mean_curvature(const SurfaceJet& sj, double u, double v);

/// Graph z = u(x,y): returns (K, H) from the closed forms
/// K = -u_xx u_yy + u_xy^2 and H = (u_xx - u_yy)/2.
std::pair<double, double> graph_xy_curvatures(const ExprAst& u_ast, double x,
                                              double y);

/// Graph x = u(y,z): returns (K, H) from the closed forms
/// K = -(u_yy u_zz - u_yz^2)/u_z^4 and
/// H = (u_z^2 u_yy - 2 u_y u_z u_yz + (u_y^2 - 1) u_zz) / (2 u_z^3).
/// Errors: singular_graph when u_z = 0 at the point.
std::pair<double, double> graph_yz_curvatures(const ExprAst& u_ast, double y,
                                              double z);

/// The wave-operator Laplacian of a graph height: u_xx - u_yy (equals 2H).
double laplacian_graph(const ExprAst& u_ast, double x, double y);

/// Surface patch (x, y, u(x,y)) over the given rectangle; u_ast must use at
/// most two variables, ordered (x, y).
SurfaceJet xy_graph_surface(const ExprAst& u_ast, Rect domain);

/// Surface patch (u(y,z), y, z) with parameters ordered (z, y): the first
/// parameter sweeps z. domain.u is the z-interval, domain.v the y-interval.
/// u_ast's variables are ordered (y, z).
SurfaceJet yz_graph_surface(const ExprAst& u_ast, Rect domain);

/// Decomposes the acceleration of the composed curve s -> r(u1(s), u2(s)):
///   sigma  = -(1/sqrt|det g|) [ (g12 u1' + g22 u2') r_{u1}
///                             - (g11 u1' + g12 u2') r_{u2} ],
///   kappa_n = sum h_ij u_i' u_j',
///   kappa_g from least squares of r'' - kappa_n xi = kappa_g sigma.
/// Errors: not_arc_length (composed curve not unit speed at s),
/// degenerate_metric, domain_error if the decomposition residual reaches 1e-8
/// (which would contradict the tangential/normal split and must not occur).
AccelDecomposition acceleration_decomposition(const SurfaceJet& sj,
                                              const SurfaceParamCurve& pc,
                                              double s, double arc_tol = 1e-8);

/// The image surface under a motion: positions mapped by m, partials by its
/// linear part.
SurfaceJet transformed(const SurfaceJet& sj, const PiMotion& m);

}  // namespace pi3
