#include "pi3geo/revolution.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "pi3geo/format.hpp"

namespace pi3 {

namespace {

void check_u_range(const Interval& u_range) {
  if (!std::isfinite(u_range.lo) || !std::isfinite(u_range.hi) ||
      !(u_range.lo < u_range.hi))
    throw Error(Errc::invalid_params, "profile range must satisfy lo < hi");
  if (u_range.lo <= 0.0)
    throw Error(Errc::invalid_params,
                "profile range must lie in u > 0 (the axis is excluded)");
}

void check_finite(std::initializer_list<double> vals) {
  for (double v : vals)
    if (!std::isfinite(v))
      throw Error(Errc::invalid_params, "family parameters must be finite");
}

// Adds a term to an optional running sum.
void accumulate(std::optional<ExprAst>& sum, const ExprAst& term) {
  if (sum)
    sum = *sum + term;
  else
    sum = term;
}

ExprAst finish(std::optional<ExprAst>& sum, double c2) {
  if (!sum) return ExprAst::constant(c2);
  if (c2 == 0.0) return *sum;
  return *sum + ExprAst::constant(c2);
}

ExprAst constant_gauss_f(const ConstantK& fam, const Interval& u_range) {
  check_finite({fam.K0, fam.c1, fam.c2});
  if (fam.K0 == 0.0)
    throw Error(Errc::invalid_params,
                "constant-Gauss family requires K0 != 0 (use flat instead)");
  if (fam.sign != 1 && fam.sign != -1)
    throw Error(Errc::invalid_params, "sign must be +1 or -1");
  if (fam.K0 < 0.0 && fam.c1 <= 0.0)
    throw Error(Errc::invalid_params,
                "constant-Gauss family with K0 < 0 requires c1 > 0");
  const double mid = 0.5 * (u_range.lo + u_range.hi);
  for (double u : {u_range.lo, mid, u_range.hi})
    if (fam.c1 + fam.K0 * u * u <= 0.0)
      throw Error(Errc::empty_domain,
                  "slope radicand c1 + K0 u^2 is nonpositive at u=" +
                      fmt_shortest(u));

  const ExprAst u = ExprAst::variable("u");
  const ExprAst psi =
      sqrt(ExprAst::constant(fam.c1) + ExprAst::constant(fam.K0) * u * u);
  std::optional<ExprAst> core;
  accumulate(core, u / ExprAst::constant(2.0) * psi);
  if (fam.c1 != 0.0) {
    if (fam.K0 > 0.0) {
      const double rt = std::sqrt(fam.K0);
      accumulate(core,
                 ExprAst::constant(fam.c1 / (2.0 * rt)) *
                     ln(ExprAst::constant(2.0 * fam.K0) * u +
                        ExprAst::constant(2.0 * rt) * psi));
    } else {
      const double rt = std::sqrt(-fam.K0);
      accumulate(core, ExprAst::constant(fam.c1 / (2.0 * rt)) *
                           asin(ExprAst::constant(rt / std::sqrt(fam.c1)) * u));
    }
  }
  ExprAst f = fam.sign > 0 ? *core : -*core;
  if (fam.c2 != 0.0) f = f + ExprAst::constant(fam.c2);
  return f;
}

}  // namespace

std::string family_name(const ProfileFamily& fam) {
  struct V {
    std::string operator()(const ConstantK&) const { return "constant_k"; }
    std::string operator()(const ConstantH&) const { return "constant_h"; }
    std::string operator()(const Flat&) const { return "flat"; }
    std::string operator()(const Minimal&) const { return "minimal"; }
    std::string operator()(const ParabolicSphere&) const {
      return "parabolic_sphere";
    }
  };
  return std::visit(V{}, fam);
}

std::vector<std::pair<std::string, double>> family_params(
    const ProfileFamily& fam) {
  using P = std::vector<std::pair<std::string, double>>;
  struct V {
    P operator()(const ConstantK& f) const {
      return {{"K0", f.K0},
              {"c1", f.c1},
              {"c2", f.c2},
              {"sign", static_cast<double>(f.sign)}};
    }
    P operator()(const ConstantH& f) const {
      return {{"H0", f.H0}, {"c1", f.c1}, {"c2", f.c2}};
    }
    P operator()(const Flat& f) const { return {{"c1", f.c1}, {"c2", f.c2}}; }
    P operator()(const Minimal& f) const {
      return {{"c1", f.c1}, {"c2", f.c2}};
    }
    P operator()(const ParabolicSphere& f) const {
      return {{"c1", f.c1}, {"c2", f.c2}};
    }
  };
  return std::visit(V{}, fam);
}

Profile solve_profile(const ProfileFamily& fam, Interval u_range,
                      ProfileKind kind) {
  check_u_range(u_range);
  const ExprAst u = ExprAst::variable("u");
  struct V {
    const Interval& range;
    const ExprAst& u;
    ExprAst operator()(const ConstantK& f) const {
      return constant_gauss_f(f, range);
    }
    ExprAst operator()(const ConstantH& f) const {
      check_finite({f.H0, f.c1, f.c2});
      std::optional<ExprAst> sum;
      if (f.H0 != 0.0)
        accumulate(sum, ExprAst::constant(f.H0 / 2.0) * pow(u, 2.0));
      if (f.c1 != 0.0) accumulate(sum, ExprAst::constant(f.c1) * ln(u));
      return finish(sum, f.c2);
    }
    ExprAst operator()(const Flat& f) const {
      check_finite({f.c1, f.c2});
      std::optional<ExprAst> sum;
      if (f.c1 != 0.0) accumulate(sum, ExprAst::constant(f.c1) * u);
      return finish(sum, f.c2);
    }
    ExprAst operator()(const Minimal& f) const {
      check_finite({f.c1, f.c2});
      std::optional<ExprAst> sum;
      if (f.c1 != 0.0) accumulate(sum, ExprAst::constant(f.c1) * ln(u));
      return finish(sum, f.c2);
    }
    ExprAst operator()(const ParabolicSphere& f) const {
      check_finite({f.c1, f.c2});
      std::optional<ExprAst> sum;
      if (f.c1 != 0.0)
        accumulate(sum, ExprAst::constant(f.c1 / 2.0) * pow(u, 2.0));
      return finish(sum, f.c2);
    }
  };
  Profile p{std::visit(V{u_range, u}, fam), kind, u_range};
  return p;
}

SurfaceJet make_revolution(const Profile& p, Interval v_range) {
  check_u_range(p.u_range);
  if (p.f.empty() || p.f.vars().size() > 1)
    throw Error(Errc::invalid_params, "profile height must be univariate");
  const ExprAst u = ExprAst::variable(p.f.vars().empty() ? "u" : p.f.vars()[0]);
  const ExprAst v = ExprAst::variable("v");
  const bool spacelike = p.kind == ProfileKind::spacelike;
  const ExprAst x = spacelike ? u * cosh(v) : u * sinh(v);
  const ExprAst y = spacelike ? u * sinh(v) : u * cosh(v);
  return SurfaceJet::from_exprs(x, y, p.f, Rect{p.u_range, v_range});
}

namespace {

Jet1 profile_jet(const Profile& p, double u) {
  if (!p.u_range.contains(u) &&
      !(u > p.u_range.lo - 1e-9 && u < p.u_range.hi + 1e-9))
    throw Error(Errc::invalid_params,
                "u=" + fmt_shortest(u) + " is outside the profile range [" +
                    fmt_shortest(p.u_range.lo) + "," +
                    fmt_shortest(p.u_range.hi) + "]");
  return p.f.eval_jet1(u, 2);
}

}  // namespace

double rev_gauss(const Profile& p, double u) {
  const Jet1 j = profile_jet(p, u);
  return j.d1 * j.d2 / u;
}

double rev_mean(const Profile& p, double u) {
  const Jet1 j = profile_jet(p, u);
  return 0.5 * (j.d1 / u + j.d2);
}

SampledProfile profile_ode_oracle(const ProfileFamily& fam, Interval u_range,
                                  double step) {
  check_u_range(u_range);
  if (!std::isfinite(step) || step <= 0.0)
    throw Error(Errc::invalid_params, "integration step must be positive");
  const Profile closed = solve_profile(fam, u_range);
  const Jet1 init = closed.f.eval_jet1(u_range.lo, 2);

  const double len = u_range.length();
  const int n_steps =
      std::max(1, static_cast<int>(std::ceil(len / step - 1e-12)));
  const double h = len / n_steps;

  SampledProfile out;
  out.u.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.f.reserve(out.u.capacity());

  struct V {
    // first: uses f' = slope(u); second: uses f'' = 2*H_target - f'/u.
    bool first_order;
    double K0 = 0.0, c1 = 0.0;
    int sign = +1;
    double flat_slope = 0.0;
    double H_target = 0.0;
    bool flat = false;
  };
  struct Dispatch {
    V operator()(const ConstantK& f) const {
      return V{true, f.K0, f.c1, f.sign, 0.0, 0.0, false};
    }
    V operator()(const Flat& f) const {
      return V{true, 0.0, 0.0, +1, f.c1, 0.0, true};
    }
    V operator()(const ConstantH& f) const {
      return V{false, 0.0, 0.0, +1, 0.0, f.H0, false};
    }
    V operator()(const Minimal&) const {
      return V{false, 0.0, 0.0, +1, 0.0, 0.0, false};
    }
    V operator()(const ParabolicSphere& f) const {
      return V{false, 0.0, 0.0, +1, 0.0, f.c1, false};
    }
  };
  const V mode = std::visit(Dispatch{}, fam);

  if (mode.first_order) {
    auto slope = [&](double u) {
      if (mode.flat) return mode.flat_slope;
      const double radicand = mode.c1 + mode.K0 * u * u;
      if (radicand <= 0.0)
        throw Error(Errc::empty_domain,
                    "slope radicand nonpositive at u=" + fmt_shortest(u) +
                        " during integration");
      return mode.sign * std::sqrt(radicand);
    };
    double f = init.value;
    out.u.push_back(u_range.lo);
    out.f.push_back(f);
    for (int i = 0; i < n_steps; ++i) {
      const double u = u_range.lo + h * i;
      const double k1 = slope(u);
      const double k2 = slope(u + 0.5 * h);
      const double k3 = k2;
      const double k4 = slope(u + h);
      f += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      out.u.push_back(i + 1 == n_steps ? u_range.hi : u + h);
      out.f.push_back(f);
    }
  } else {
    // State (f, g) with f' = g, g' = 2*H_target - g/u.
    auto gprime = [&](double u, double g) { return 2.0 * mode.H_target - g / u; };
    double f = init.value, g = init.d1;
    out.u.push_back(u_range.lo);
    out.f.push_back(f);
    for (int i = 0; i < n_steps; ++i) {
      const double u = u_range.lo + h * i;
      const double k1f = g, k1g = gprime(u, g);
      const double k2f = g + 0.5 * h * k1g,
                   k2g = gprime(u + 0.5 * h, g + 0.5 * h * k1g);
      const double k3f = g + 0.5 * h * k2g,
                   k3g = gprime(u + 0.5 * h, g + 0.5 * h * k2g);
      const double k4f = g + h * k3g, k4g = gprime(u + h, g + h * k3g);
      f += (h / 6.0) * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
      g += (h / 6.0) * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
      out.u.push_back(i + 1 == n_steps ? u_range.hi : u + h);
      out.f.push_back(f);
    }
  }
  return out;
}

FamilyReport verify_family(const ProfileFamily& fam, Interval u_range,
                           Interval v_range, int nu, int nv, double tol) {
  if (nu < 2 || nv < 2)
    throw Error(Errc::invalid_params, "grid must be at least 2x2");
  if (!(tol > 0.0))
    throw Error(Errc::invalid_params, "tolerance must be positive");

  const Profile profile = solve_profile(fam, u_range);
  const SurfaceJet surface = make_revolution(profile, v_range);

  FamilyReport rep;
  rep.family = family_name(fam);
  rep.params = family_params(fam);
  rep.grid_nu = nu;
  rep.grid_nv = nv;
  rep.tolerance = tol;

  // Family curvature targets.
  std::optional<double> K0, H0;
  struct Targets {
    std::optional<double>&K0, &H0;
    void operator()(const ConstantK& f) const { K0 = f.K0; }
    void operator()(const ConstantH& f) const { H0 = f.H0; }
    void operator()(const Flat&) const { K0 = 0.0; }
    void operator()(const Minimal&) const { H0 = 0.0; }
    void operator()(const ParabolicSphere& f) const {
      K0 = f.c1 * f.c1;
      H0 = f.c1;
    }
  };
  std::visit(Targets{K0, H0}, fam);

  const std::vector<double> us = linspace(u_range, nu);
  const std::vector<double> vs = linspace(v_range, nv);
  bool first = true;
  double dK = 0.0, dH = 0.0, dE = 0.0;
  for (double u : us) {
    for (double v : vs) {
      const double K = gauss_curvature(surface, u, v);
      const double H = mean_curvature(surface, u, v);
      if (first) {
        rep.K_stats = {K, K, std::abs(K)};
        rep.H_stats = {H, H, std::abs(H)};
        first = false;
      } else {
        rep.K_stats.min = std::min(rep.K_stats.min, K);
        rep.K_stats.max = std::max(rep.K_stats.max, K);
        rep.K_stats.max_abs = std::max(rep.K_stats.max_abs, std::abs(K));
        rep.H_stats.min = std::min(rep.H_stats.min, H);
        rep.H_stats.max = std::max(rep.H_stats.max, H);
        rep.H_stats.max_abs = std::max(rep.H_stats.max_abs, std::abs(H));
      }
      if (K0) dK = std::max(dK, std::abs(K - *K0));
      if (H0) dH = std::max(dH, std::abs(H - *H0));
      dE = std::max(dE, std::abs(H * H - K));
    }
  }
  if (K0) rep.max_abs_K_minus_K0 = dK;
  if (H0) rep.max_abs_H_minus_H0 = dH;
  rep.max_abs_H2_minus_K = dE;

  rep.pass = (!rep.max_abs_K_minus_K0 || *rep.max_abs_K_minus_K0 < tol) &&
             (!rep.max_abs_H_minus_H0 || *rep.max_abs_H_minus_H0 < tol);

  if (std::holds_alternative<ParabolicSphere>(fam)) {
    rep.pass = rep.pass && rep.max_abs_H2_minus_K < tol;
    // Perturbing the profile must break the H^2 = K equality measurably,
    // otherwise the equality check has no discriminating power.
    Profile pert = profile;
    pert.f = profile.f + ExprAst::constant(1e-3) *
                             pow(ExprAst::variable(profile.f.vars().empty()
                                                       ? "u"
                                                       : profile.f.vars()[0]),
                                 3.0);
    const SurfaceJet psurf = make_revolution(pert, v_range);
    double worst = 0.0;
    for (double u : us)
      for (double v : vs) {
        const double K = gauss_curvature(psurf, u, v);
        const double H = mean_curvature(psurf, u, v);
        worst = std::max(worst, std::abs(H * H - K));
      }
    rep.negative_control_max = worst;
    rep.pass = rep.pass && worst > 1e-8;
  }
  return rep;
}

}  // namespace pi3
