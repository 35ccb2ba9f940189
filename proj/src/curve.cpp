#include "pi3geo/curve.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "pi3geo/format.hpp"

namespace pi3 {

namespace {

// Top-view determinant threshold below which the osculating plane counts as
// isotropic; matches the surface module's metric-degeneracy threshold.
constexpr double kDegenerateDet = 1e-12;

// Below this the curvature counts as zero and tau/N are undefined.
constexpr double kZeroKappa = 1e-12;

// Validates unit speed and a non-lightlike tangent at one point; returns the
// causal class of the tangent.
CausalClass point_class(const CurvePoint& cp, double s, double arc_tol) {
  const double w = cp.d1.x() * cp.d1.x() - cp.d1.y() * cp.d1.y();
  if (std::abs(w) < 0.5)
    throw Error(Errc::not_admissible,
                "tangent is (nearly) lightlike or isotropic at s=" +
                    fmt_shortest(s));
  if (std::abs(std::abs(w) - 1.0) > arc_tol)
    throw Error(Errc::not_arc_length,
                "curve is not arc-length at s=" + fmt_shortest(s) +
                    " (<a',a'> = " + fmt_shortest(w) + ")");
  return w > 0.0 ? CausalClass::spacelike : CausalClass::timelike;
}

double kappa_at(const CurvePoint& cp, CausalClass cls) {
  const double xpp = cp.d2.x(), ypp = cp.d2.y();
  const double radicand = cls == CausalClass::spacelike ? ypp * ypp - xpp * xpp
                                                        : xpp * xpp - ypp * ypp;
  return std::sqrt(std::max(0.0, radicand));
}

double det2_at(const CurvePoint& cp) {
  return cp.d1.x() * cp.d2.y() - cp.d1.y() * cp.d2.x();
}

double det3_at(const CurvePoint& cp) {
  Eigen::Matrix3d m;
  m.col(0) = cp.d1;
  m.col(1) = cp.d2;
  m.col(2) = cp.d3;
  return m.determinant();
}

}  // namespace

CurveJet::CurveJet(std::function<CurvePoint(double)> eval, Interval param_range)
    : eval_(std::move(eval)), range_(param_range) {
  if (!eval_) throw Error(Errc::invalid_params, "curve evaluator is empty");
  if (!std::isfinite(range_.lo) || !std::isfinite(range_.hi) ||
      !(range_.lo < range_.hi))
    throw Error(Errc::invalid_params, "curve parameter range must satisfy lo < hi");
}

CurveJet CurveJet::from_exprs(const ExprAst& x, const ExprAst& y, const ExprAst& z,
                              Interval param_range) {
  for (const ExprAst* ast : {&x, &y, &z})
    if (ast->empty() || ast->vars().size() > 1)
      throw Error(Errc::invalid_params,
                  "curve components must be univariate expressions");
  auto eval = [x, y, z](double s) {
    const Jet1 jx = x.eval_jet1(s, 3);
    const Jet1 jy = y.eval_jet1(s, 3);
    const Jet1 jz = z.eval_jet1(s, 3);
    CurvePoint cp;
    cp.p = Vec3(jx.value, jy.value, jz.value);
    cp.d1 = Vec3(jx.d1, jy.d1, jz.d1);
    cp.d2 = Vec3(jx.d2, jy.d2, jz.d2);
    cp.d3 = Vec3(jx.d3, jy.d3, jz.d3);
    return cp;
  };
  return CurveJet(eval, param_range);
}

CurvePoint CurveJet::operator()(double s) const {
  CurvePoint cp = eval_(s);
  detail::require_finite3(cp.p, "curve position");
  detail::require_finite3(cp.d1, "curve first derivative");
  detail::require_finite3(cp.d2, "curve second derivative");
  detail::require_finite3(cp.d3, "curve third derivative");
  return cp;
}

CausalClass classify_curve(const CurveJet& c, int n_samples) {
  const std::vector<double> grid = linspace(c.param_range(), n_samples);
  CausalClass common = CausalClass::spacelike;
  double first_s = grid.front();
  bool have_first = false;
  for (double s : grid) {
    const CurvePoint cp = c(s);
    if (cp.d1.isZero(0.0))
      throw Error(Errc::irregular,
                  "zero tangent vector at s=" + fmt_shortest(s));
    const CausalClass cls = causal_class(cp.d1);
    if (!have_first) {
      common = cls;
      first_s = s;
      have_first = true;
    } else if (cls != common) {
      throw Error(Errc::mixed_causality,
                  std::string("mixed causal classes: ") +
                      causal_class_name(common) + " at s=" +
                      fmt_shortest(first_s) + " vs " + causal_class_name(cls) +
                      " at s=" + fmt_shortest(s));
    }
  }
  return common;
}

bool is_arclength(const CurveJet& c, int n_samples, double tol) {
  classify_curve(c, n_samples);  // propagate irregular / mixed-causality
  for (double s : linspace(c.param_range(), n_samples)) {
    const CurvePoint cp = c(s);
    const double w = cp.d1.x() * cp.d1.x() - cp.d1.y() * cp.d1.y();
    if (std::abs(std::abs(w) - 1.0) > tol) return false;
  }
  return true;
}

bool is_admissible(const CurveJet& c, int n_samples) {
  for (double s : linspace(c.param_range(), n_samples)) {
    const CurvePoint cp = c(s);
    if (cp.d1.isZero(0.0))
      throw Error(Errc::irregular,
                  "zero tangent vector at s=" + fmt_shortest(s));
    if (std::abs(det2_at(cp)) <= kDegenerateDet) return false;
  }
  return true;
}

double curvature(const CurveJet& c, double s, double arc_tol) {
  const CurvePoint cp = c(s);
  return kappa_at(cp, point_class(cp, s, arc_tol));
}

double signed_curvature_det(const CurveJet& c, double s, double arc_tol) {
  const CurvePoint cp = c(s);
  point_class(cp, s, arc_tol);
  return det2_at(cp);
}

CurveInvariants curve_invariants(const CurveJet& c, double s, double arc_tol) {
  const CurvePoint cp = c(s);
  const CausalClass cls = point_class(cp, s, arc_tol);
  CurveInvariants inv;
  inv.kappa = kappa_at(cp, cls);
  inv.signed_det = det2_at(cp);
  if (inv.kappa < kZeroKappa)
    throw Error(Errc::zero_curvature,
                "curvature vanishes at s=" + fmt_shortest(s));
  inv.tau = det3_at(cp) / (inv.kappa * inv.kappa);
  return inv;
}

double torsion(const CurveJet& c, double s, double arc_tol) {
  return curve_invariants(c, s, arc_tol).tau;
}

FrenetFrame frenet_frame(const CurveJet& c, double s, double arc_tol) {
  const CurvePoint cp = c(s);
  const CausalClass cls = point_class(cp, s, arc_tol);
  const double kappa = kappa_at(cp, cls);
  if (kappa < kZeroKappa)
    throw Error(Errc::zero_curvature,
                "curvature vanishes at s=" + fmt_shortest(s));
  FrenetFrame f;
  f.T = cp.d1;
  f.N = cp.d2 / kappa;
  f.B = Vec3(0.0, 0.0, 1.0);
  return f;
}

FrenetFrame frenet_rhs(CausalClass cls, double kappa, double tau,
                       const FrenetFrame& frame) {
  if (cls != CausalClass::spacelike && cls != CausalClass::timelike)
    throw Error(Errc::unsupported_class,
                std::string("no moving-frame system for class ") +
                    causal_class_name(cls));
  if (!std::isfinite(kappa) || !std::isfinite(tau))
    throw Error(Errc::non_finite, "kappa and tau must be finite");
  const double orientation =
      frame.T.x() * frame.N.y() - frame.T.y() * frame.N.x();
  const double eps = orientation < 0.0 ? -1.0 : 1.0;
  FrenetFrame d;
  d.T = kappa * frame.N;
  d.N = kappa * frame.T + Vec3(0.0, 0.0, eps * tau);
  d.B = Vec3::Zero();
  return d;
}

ReconstructedCurve reconstruct_from_invariants(
    CausalClass cls, const std::function<double(double)>& kappa_fn,
    const std::function<double(double)>& tau_fn, const Vec3& p0,
    const FrenetFrame& f0, const Interval& range, double step) {
  if (cls != CausalClass::spacelike && cls != CausalClass::timelike)
    throw Error(Errc::unsupported_class,
                std::string("no moving-frame system for class ") +
                    causal_class_name(cls));
  if (!std::isfinite(step) || step <= 0.0)
    throw Error(Errc::invalid_params, "integration step must be positive");
  if (!(range.lo < range.hi))
    throw Error(Errc::invalid_params, "integration range must satisfy lo < hi");

  using State = Eigen::Matrix<double, 9, 1>;
  auto pack = [](const Vec3& p, const Vec3& t, const Vec3& n) {
    State y;
    y.segment<3>(0) = p;
    y.segment<3>(3) = t;
    y.segment<3>(6) = n;
    return y;
  };
  auto rhs = [&](double s, const State& y) {
    const double kappa = kappa_fn(s);
    const double tau = tau_fn(s);
    if (!std::isfinite(kappa) || !std::isfinite(tau))
      throw Error(Errc::non_finite,
                  "kappa/tau evaluated non-finite at s=" + fmt_shortest(s));
    if (std::abs(kappa) < kZeroKappa)
      throw Error(Errc::zero_curvature,
                  "curvature vanishes at s=" + fmt_shortest(s) +
                      " during reconstruction");
    FrenetFrame f;
    f.T = y.segment<3>(3);
    f.N = y.segment<3>(6);
    f.B = Vec3(0.0, 0.0, 1.0);
    const FrenetFrame d = frenet_rhs(cls, kappa, tau, f);
    return pack(f.T, d.T, d.N);
  };

  const double len = range.length();
  const int n_steps = std::max(1, static_cast<int>(std::ceil(len / step - 1e-12)));
  const double h = len / n_steps;

  ReconstructedCurve out;
  out.s.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.p.reserve(out.s.capacity());
  out.frame.reserve(out.s.capacity());

  State y = pack(p0, f0.T, f0.N);
  auto record = [&](double s, const State& st) {
    out.s.push_back(s);
    out.p.push_back(st.segment<3>(0));
    FrenetFrame f;
    f.T = st.segment<3>(3);
    f.N = st.segment<3>(6);
    f.B = Vec3(0.0, 0.0, 1.0);
    out.frame.push_back(f);
  };
  record(range.lo, y);
  for (int i = 0; i < n_steps; ++i) {
    const double s = range.lo + h * i;
    const State k1 = rhs(s, y);
    const State k2 = rhs(s + 0.5 * h, y + 0.5 * h * k1);
    const State k3 = rhs(s + 0.5 * h, y + 0.5 * h * k2);
    const State k4 = rhs(s + h, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(i + 1 == n_steps ? range.hi : s + h, y);
  }
  return out;
}

LightlikePlane lightlike_plane(const CurveJet& c, int n_samples, double tol) {
  const CausalClass cls = classify_curve(c, n_samples);
  if (cls != CausalClass::lightlike)
    throw Error(Errc::not_lightlike,
                std::string("curve classifies ") + causal_class_name(cls) +
                    ", not lightlike");
  const std::vector<double> grid = linspace(c.param_range(), n_samples);
  for (int sign : {+1, -1}) {
    const CurvePoint first = c(grid.front());
    const double c0 = first.p.x() + sign * first.p.y();
    bool ok = true;
    for (double s : grid) {
      const CurvePoint cp = c(s);
      if (std::abs(cp.p.x() + sign * cp.p.y() - c0) > tol) {
        ok = false;
        break;
      }
    }
    if (ok) return LightlikePlane{sign, c0};
  }
  throw Error(Errc::no_such_plane,
              "no isotropic plane x +- y = c contains the curve within tol=" +
                  fmt_shortest(tol));
}

CurveJet hyperbolic_cylindrical(const ExprAst& z_ast, Interval param_range) {
  if (z_ast.empty() || z_ast.vars().size() > 1)
    throw Error(Errc::invalid_params, "height must be a univariate expression");
  const ExprAst s = ExprAst::variable("s");
  return CurveJet::from_exprs(cosh(s), sinh(s), z_ast, param_range);
}

CurveJet constant_torsion_cylindrical(double tau0, double c1, double c2,
                                      double c3, Interval param_range) {
  for (double v : {tau0, c1, c2, c3})
    if (!std::isfinite(v))
      throw Error(Errc::invalid_params, "profile parameters must be finite");
  const ExprAst s = ExprAst::variable("s");
  const ExprAst z = ExprAst::constant(tau0) * s +
                    ExprAst::constant(c1) * exp(s) -
                    ExprAst::constant(c2) * exp(-s) + ExprAst::constant(c3);
  return hyperbolic_cylindrical(z, param_range);
}

CurveJet transformed(const CurveJet& c, const PiMotion& m) {
  const Eigen::Matrix3d lin = m.linear();
  auto eval = [c, m, lin](double s) {
    CurvePoint cp = c(s);
    cp.p = m(cp.p);
    cp.d1 = lin * cp.d1;
    cp.d2 = lin * cp.d2;
    cp.d3 = lin * cp.d3;
    return cp;
  };
  return CurveJet(eval, c.param_range());
}

}  // namespace pi3
