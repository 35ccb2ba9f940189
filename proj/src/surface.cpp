#include "pi3geo/surface.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "pi3geo/format.hpp"

namespace pi3 {

namespace {

// Top-view Jacobian magnitude below which the tangent plane is treated as
// lightlike and the metric as degenerate.
constexpr double kDegenerateJacobian = 1e-12;

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  Eigen::Matrix3d m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return m.determinant();
}

}  // namespace

SurfaceJet::SurfaceJet(std::function<SurfacePoint(double, double)> eval,
                       Rect param_domain)
    : eval_(std::move(eval)), domain_(param_domain) {
  if (!eval_) throw Error(Errc::invalid_params, "surface evaluator is empty");
  for (const Interval* iv : {&domain_.u, &domain_.v})
    if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi) || !(iv->lo < iv->hi))
      throw Error(Errc::invalid_params,
                  "surface parameter intervals must satisfy lo < hi");
}

SurfaceJet SurfaceJet::from_exprs(const ExprAst& x, const ExprAst& y,
                                  const ExprAst& z, Rect param_domain) {
  for (const ExprAst* ast : {&x, &y, &z})
    if (ast->empty() || ast->vars().size() > 2)
      throw Error(Errc::invalid_params,
                  "surface components must use at most two variables");
  auto eval = [x, y, z](double u, double v) {
    const Jet2 jx = x.eval_jet2(u, v);
    const Jet2 jy = y.eval_jet2(u, v);
    const Jet2 jz = z.eval_jet2(u, v);
    SurfacePoint sp;
    sp.r = Vec3(jx.value, jy.value, jz.value);
    sp.ru = Vec3(jx.du, jy.du, jz.du);
    sp.rv = Vec3(jx.dv, jy.dv, jz.dv);
    sp.ruu = Vec3(jx.duu, jy.duu, jz.duu);
    sp.ruv = Vec3(jx.duv, jy.duv, jz.duv);
    sp.rvv = Vec3(jx.dvv, jy.dvv, jz.dvv);
    return sp;
  };
  return SurfaceJet(eval, param_domain);
}

SurfacePoint SurfaceJet::operator()(double u, double v) const {
  SurfacePoint sp = eval_(u, v);
  detail::require_finite3(sp.r, "surface position");
  detail::require_finite3(sp.ru, "surface du partial");
  detail::require_finite3(sp.rv, "surface dv partial");
  detail::require_finite3(sp.ruu, "surface duu partial");
  detail::require_finite3(sp.ruv, "surface duv partial");
  detail::require_finite3(sp.rvv, "surface dvv partial");
  return sp;
}

SurfaceParamCurve SurfaceParamCurve::from_exprs(const ExprAst& u1_ast,
                                                const ExprAst& u2_ast) {
  for (const ExprAst* ast : {&u1_ast, &u2_ast})
    if (ast->empty() || ast->vars().size() > 1)
      throw Error(Errc::invalid_params,
                  "parameter-curve components must be univariate");
  SurfaceParamCurve pc;
  pc.u1 = [a = u1_ast](double s) { return a.eval_jet1(s, 2); };
  pc.u2 = [a = u2_ast](double s) { return a.eval_jet1(s, 2); };
  return pc;
}

FundamentalForms fundamental_forms(const SurfaceJet& sj, double u, double v) {
  const SurfacePoint sp = sj(u, v);
  const double jac = sp.ru.x() * sp.rv.y() - sp.rv.x() * sp.ru.y();
  if (std::abs(jac) < kDegenerateJacobian)
    throw Error(Errc::degenerate_metric,
                "tangent plane is (nearly) isotropic at (u,v)=(" +
                    fmt_shortest(u) + "," + fmt_shortest(v) + ")");
  FundamentalForms ff;
  ff.g11 = pi_dot(sp.ru, sp.ru);
  ff.g12 = pi_dot(sp.ru, sp.rv);
  ff.g22 = pi_dot(sp.rv, sp.rv);
  ff.det_g = ff.g11 * ff.g22 - ff.g12 * ff.g12;
  if (ff.det_g >= 0.0)
    throw Error(Errc::degenerate_metric,
                "metric determinant is not negative at (u,v)=(" +
                    fmt_shortest(u) + "," + fmt_shortest(v) + ")");
  const double root = std::sqrt(std::abs(ff.det_g));
  ff.h11 = det3(sp.ru, sp.rv, sp.ruu) / root;
  ff.h12 = det3(sp.ru, sp.rv, sp.ruv) / root;
  ff.h22 = det3(sp.ru, sp.rv, sp.rvv) / root;
  return ff;
}

double gauss_curvature(const SurfaceJet& sj, double u, double v) {
  const FundamentalForms ff = fundamental_forms(sj, u, v);
  return (ff.h11 * ff.h22 - ff.h12 * ff.h12) / ff.det_g;
}

double mean_curvature(const SurfaceJet& sj, double u, double v) {
  const FundamentalForms ff = fundamental_forms(sj, u, v);
  return (ff.g11 * ff.h22 - 2.0 * ff.g12 * ff.h12 + ff.g22 * ff.h11) /
         (2.0 * ff.det_g);
}

std::pair<double, double> graph_xy_curvatures(const ExprAst& u_ast, double x,
                                              double y) {
  if (u_ast.empty() || u_ast.vars().size() > 2)
    throw Error(Errc::invalid_params,
                "graph height must use at most two variables");
  const Jet2 j = u_ast.eval_jet2(x, y);
  const double K = -j.duu * j.dvv + j.duv * j.duv;
  const double H = 0.5 * (j.duu - j.dvv);
  return {K, H};
}

std::pair<double, double> graph_yz_curvatures(const ExprAst& u_ast, double y,
                                              double z) {
  if (u_ast.empty() || u_ast.vars().size() > 2)
    throw Error(Errc::invalid_params,
                "graph height must use at most two variables");
  const Jet2 j = u_ast.eval_jet2(y, z);  // du = u_y, dv = u_z
  if (j.dv == 0.0)
    throw Error(Errc::singular_graph,
                "u_z = 0 at (y,z)=(" + fmt_shortest(y) + "," + fmt_shortest(z) +
                    "); the graph formulas divide by u_z");
  const double uz2 = j.dv * j.dv;
  const double K = -(j.duu * j.dvv - j.duv * j.duv) / (uz2 * uz2);
  const double H = (uz2 * j.duu - 2.0 * j.du * j.dv * j.duv +
                    (j.du * j.du - 1.0) * j.dvv) /
                   (2.0 * uz2 * j.dv);
  return {K, H};
}

double laplacian_graph(const ExprAst& u_ast, double x, double y) {
  if (u_ast.empty() || u_ast.vars().size() > 2)
    throw Error(Errc::invalid_params,
                "graph height must use at most two variables");
  const Jet2 j = u_ast.eval_jet2(x, y);
  return j.duu - j.dvv;
}

SurfaceJet xy_graph_surface(const ExprAst& u_ast, Rect domain) {
  if (u_ast.empty() || u_ast.vars().size() > 2)
    throw Error(Errc::invalid_params,
                "graph height must use at most two variables");
  auto eval = [u_ast](double x, double y) {
    const Jet2 j = u_ast.eval_jet2(x, y);
    SurfacePoint sp;
    sp.r = Vec3(x, y, j.value);
    sp.ru = Vec3(1.0, 0.0, j.du);
    sp.rv = Vec3(0.0, 1.0, j.dv);
    sp.ruu = Vec3(0.0, 0.0, j.duu);
    sp.ruv = Vec3(0.0, 0.0, j.duv);
    sp.rvv = Vec3(0.0, 0.0, j.dvv);
    return sp;
  };
  return SurfaceJet(eval, domain);
}

SurfaceJet yz_graph_surface(const ExprAst& u_ast, Rect domain) {
  if (u_ast.empty() || u_ast.vars().size() > 2)
    throw Error(Errc::invalid_params,
                "graph height must use at most two variables");
  // First parameter is z, second is y; u_ast's variables are (y, z).
  auto eval = [u_ast](double z, double y) {
    const Jet2 j = u_ast.eval_jet2(y, z);  // du = u_y, dv = u_z
    SurfacePoint sp;
    sp.r = Vec3(j.value, y, z);
    sp.ru = Vec3(j.dv, 0.0, 1.0);
    sp.rv = Vec3(j.du, 1.0, 0.0);
    sp.ruu = Vec3(j.dvv, 0.0, 0.0);
    sp.ruv = Vec3(j.duv, 0.0, 0.0);
    sp.rvv = Vec3(j.duu, 0.0, 0.0);
    return sp;
  };
  return SurfaceJet(eval, domain);
}

AccelDecomposition acceleration_decomposition(const SurfaceJet& sj,
                                              const SurfaceParamCurve& pc,
                                              double s, double arc_tol) {
  if (!pc.u1 || !pc.u2)
    throw Error(Errc::invalid_params, "parameter curve is empty");
  const Jet1 j1 = pc.u1(s);
  const Jet1 j2 = pc.u2(s);
  const SurfacePoint sp = sj(j1.value, j2.value);
  const FundamentalForms ff = fundamental_forms(sj, j1.value, j2.value);

  // Composed-curve derivatives via the chain rule.
  const Vec3 rp = sp.ru * j1.d1 + sp.rv * j2.d1;
  const Vec3 rpp = sp.ru * j1.d2 + sp.rv * j2.d2 + sp.ruu * (j1.d1 * j1.d1) +
                   2.0 * sp.ruv * (j1.d1 * j2.d1) + sp.rvv * (j2.d1 * j2.d1);

  const double speed2 = pi_dot(rp, rp);
  if (std::abs(std::abs(speed2) - 1.0) > arc_tol)
    throw Error(Errc::not_arc_length,
                "composed curve is not unit speed at s=" + fmt_shortest(s) +
                    " (<r',r'> = " + fmt_shortest(speed2) + ")");

  AccelDecomposition out;
  const double root = std::sqrt(std::abs(ff.det_g));
  out.sigma = -(1.0 / root) * ((ff.g12 * j1.d1 + ff.g22 * j2.d1) * sp.ru -
                               (ff.g11 * j1.d1 + ff.g12 * j2.d1) * sp.rv);
  out.kappa_n = ff.h11 * j1.d1 * j1.d1 + 2.0 * ff.h12 * j1.d1 * j2.d1 +
                ff.h22 * j2.d1 * j2.d1;

  const Vec3 v = rpp - out.kappa_n * Vec3(0.0, 0.0, 1.0);
  const double denom = out.sigma.dot(out.sigma);
  out.kappa_g = denom > 0.0 ? v.dot(out.sigma) / denom : 0.0;
  out.residual = (v - out.kappa_g * out.sigma).cwiseAbs().maxCoeff();
  if (out.residual >= 1e-8)
    throw Error(Errc::domain_error,
                "acceleration decomposition residual " +
                    fmt_shortest(out.residual) +
                    " at s=" + fmt_shortest(s) +
                    " exceeds 1e-8; the tangential/normal split failed");
  return out;
}

SurfaceJet transformed(const SurfaceJet& sj, const PiMotion& m) {
  const Eigen::Matrix3d lin = m.linear();
  auto eval = [sj, m, lin](double u, double v) {
    SurfacePoint sp = sj(u, v);
    sp.r = m(sp.r);
    sp.ru = lin * sp.ru;
    sp.rv = lin * sp.rv;
    sp.ruu = lin * sp.ruu;
    sp.ruv = lin * sp.ruv;
    sp.rvv = lin * sp.rvv;
    return sp;
  };
  return SurfaceJet(eval, sj.param_domain());
}

}  // namespace pi3
