#include "pi3geo/testgen.hpp"

#include <cmath>
#include <vector>

#include "pi3geo/format.hpp"

namespace pi3::testgen {

namespace {

/// Renders a coefficient for embedding in expression text.
std::string num(double v) { return fmt_shortest(v); }

}  // namespace

double Rng::uniform(double lo, double hi) {
  const double unit =
      static_cast<double>(gen_() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * unit;
}

double Rng::coef(double lo, double hi) {
  const double mag = uniform(lo, hi);
  return chance(0.5) ? mag : -mag;
}

int Rng::pick(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

bool Rng::chance(double p) { return uniform(0.0, 1.0) < p; }

namespace {

/// One building-block term in a single variable. All choices stay smooth and
/// finite for var in [-1.1, 2.1], covering both test domains with room for
/// finite-difference probes.
std::string term1(Rng& rng, const std::string& v) {
  const double a = rng.coef(0.4, 1.2);
  const double b = rng.uniform(-1.0, 1.0);
  const std::string arg = num(a) + "*" + v + "+" + num(b);
  switch (rng.pick(10)) {
    case 0: return "sin(" + arg + ")";
    case 1: return "cos(" + arg + ")";
    case 2: return "sinh(" + arg + ")";
    case 3: return "cosh(" + arg + ")";
    case 4: return "exp(" + num(a) + "*" + v + ")";
    case 5: return "tanh(" + arg + ")";
    case 6: return "(" + v + "+" + num(rng.uniform(-0.4, 0.4)) + ")^2";
    case 7: return v + "^3";
    case 8: return "ln(" + v + "+" + num(rng.uniform(2.5, 3.5)) + ")";
    default: return "sqrt(" + v + "+" + num(rng.uniform(2.0, 3.0)) + ")";
  }
}

/// One building-block term in two variables, smooth on [-1.1, 1.1]^2.
std::string term2(Rng& rng, const std::string& x, const std::string& y) {
  const double a = rng.coef(0.3, 1.0);
  const double b = rng.coef(0.3, 1.0);
  const double c = rng.uniform(-1.0, 1.0);
  const std::string arg =
      num(a) + "*" + x + "+" + num(b) + "*" + y + "+" + num(c);
  switch (rng.pick(10)) {
    case 0: return "sin(" + arg + ")";
    case 1: return "cos(" + arg + ")";
    case 2: return "sinh(" + arg + ")";
    case 3: return "cosh(" + arg + ")";
    case 4: return "tanh(" + arg + ")";
    case 5: return "exp(" + num(0.5 * a) + "*" + x + "+" + num(0.5 * b) + "*" + y + ")";
    case 6: return x + "^2";
    case 7: return y + "^2";
    case 8: return x + "*" + y;
    default: return "ln(" + x + "+" + y + "+" + num(rng.uniform(3.0, 4.0)) + ")";
  }
}

std::string sum_of_terms(Rng& rng, double amp,
                         const std::vector<std::string>& terms) {
  std::string out;
  for (const std::string& t : terms) {
    const double k = amp * rng.coef(0.3, 1.5);
    if (!out.empty()) out += " + ";
    out += num(k) + "*" + t;
  }
  return out;
}

}  // namespace

std::string random_expr_string1(Rng& rng, const std::string& var, double amp) {
  std::vector<std::string> terms;
  const int n = 2 + rng.pick(2);
  for (int i = 0; i < n; ++i) {
    if (rng.chance(0.25)) {
      terms.push_back(term1(rng, var) + "*" + term1(rng, var));
    } else {
      terms.push_back(term1(rng, var));
    }
  }
  return sum_of_terms(rng, amp, terms);
}

std::string random_expr_string2(Rng& rng, const std::string& v1,
                                const std::string& v2, double amp) {
  std::vector<std::string> terms;
  const int n = 2 + rng.pick(2);
  for (int i = 0; i < n; ++i) terms.push_back(term2(rng, v1, v2));
  return sum_of_terms(rng, amp, terms);
}

ExprAst random_smooth1(Rng& rng, const std::string& var, double amp) {
  return ExprAst::parse(random_expr_string1(rng, var, amp), {var});
}

ExprAst random_smooth2(Rng& rng, const std::string& v1, const std::string& v2,
                       double amp) {
  return ExprAst::parse(random_expr_string2(rng, v1, v2, amp), {v1, v2});
}

CurveJet random_arclength_curve(Rng& rng, CausalClass cls, Interval range) {
  // Unit-speed top view from w = beta s + gamma > 0:
  //   x' = (w + 1/w)/2,  y' = (w - 1/w)/2,  so x'^2 - y'^2 = 1.
  // gamma is chosen so w stays above 0.25 across the range.
  const double beta = rng.coef(0.3, 0.9);
  const double reach =
      std::abs(beta) * std::max(std::abs(range.lo), std::abs(range.hi));
  const double gamma = reach + rng.uniform(0.4, 1.2);

  const ExprAst s = ExprAst::variable("s");
  const ExprAst quad =
      (ExprAst::constant(0.5 * beta) * s * s + ExprAst::constant(gamma) * s) /
      ExprAst::constant(2.0);
  const ExprAst log_term =
      ln(ExprAst::constant(beta) * s + ExprAst::constant(gamma)) /
      ExprAst::constant(2.0 * beta);
  const ExprAst along = quad + log_term;    // integral of (w + 1/w)/2
  const ExprAst across = quad - log_term;   // integral of (w - 1/w)/2

  const ExprAst height = random_smooth1(rng, "s", 0.8);
  if (cls == CausalClass::timelike) {
    return CurveJet::from_exprs(across, along, height, range);
  }
  return CurveJet::from_exprs(along, across, height, range);
}

CurveJet random_lightlike_curve(Rng& rng, Interval range, int* plane_sign,
                                double* plane_c0) {
  // x = g(s), y = +-g(s) + const with g monotone, so the top view of the
  // tangent is (g', +-g') != 0 and x'^2 - y'^2 = 0 identically.
  const double beta = rng.coef(0.8, 1.5);
  const double k = rng.uniform(0.1, 0.3);
  const double a = rng.coef(0.4, 1.2);
  const double b = rng.uniform(-1.0, 1.0);
  const ExprAst s = ExprAst::variable("s");
  const ExprAst g =
      ExprAst::constant(beta) * s +
      ExprAst::constant(k) *
          sin(ExprAst::constant(a) * s + ExprAst::constant(b));

  const int sign = rng.chance(0.5) ? 1 : -1;
  const double c0 = rng.uniform(-1.0, 1.0);
  // Plane x + sign*y = c0 solved for y.
  const ExprAst y = sign > 0 ? ExprAst::constant(c0) - g
                             : g - ExprAst::constant(c0);
  if (plane_sign != nullptr) *plane_sign = sign;
  if (plane_c0 != nullptr) *plane_c0 = c0;
  return CurveJet::from_exprs(g, y, random_smooth1(rng, "s", 1.0), range);
}

namespace {

/// Small displacement with partial derivatives bounded by 0.16: two trig
/// terms, coefficients below 0.08, argument slopes below 1.
ExprAst gentle_displacement(Rng& rng) {
  ExprAst out = ExprAst::constant(0.0);
  const ExprAst u = ExprAst::variable("u");
  const ExprAst v = ExprAst::variable("v");
  for (int i = 0; i < 2; ++i) {
    const ExprAst arg = ExprAst::constant(rng.coef(0.3, 1.0)) * u +
                        ExprAst::constant(rng.coef(0.3, 1.0)) * v +
                        ExprAst::constant(rng.uniform(-1.0, 1.0));
    const ExprAst wave = rng.chance(0.5) ? sin(arg) : cos(arg);
    out = out + ExprAst::constant(rng.coef(0.03, 0.08)) * wave;
  }
  return out;
}

}  // namespace

SurfaceJet random_admissible_surface(Rng& rng, Rect domain) {
  // Perturbed graph: the top view (u, v) plus a small smooth displacement
  // keeps the top-view Jacobian within [0.6, 1.4].
  const ExprAst u = ExprAst::variable("u");
  const ExprAst v = ExprAst::variable("v");
  const ExprAst x = u + gentle_displacement(rng);
  // The displacement comes first so that the merged variable list keeps the
  // (u, v) binding order expected by positional jet evaluation.
  const ExprAst y = gentle_displacement(rng) + v;
  const ExprAst z = random_smooth2(rng, "u", "v", 1.0);
  return SurfaceJet::from_exprs(x, y, z, domain);
}

ExprAst random_profile_height(Rng& rng) {
  return random_smooth1(rng, "u", 1.0);
}

}  // namespace pi3::testgen
