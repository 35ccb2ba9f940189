#pragma once

// Surfaces of revolution swept by hyperbolic rotations about the isotropic
// axis: the two builders, the reduced curvature formulas K = f'f''/u and
// H = (f'/u + f'')/2, closed-form constant-curvature profile families, an
// ODE-integration oracle for those closed forms, and grid verification
// reports.
//
// Profiles live on u > 0 (the formulas divide by u and the axis itself is not
// admissible). The constant-Gauss family integrates f' = sign*sqrt(c1+K0*u^2);
// its K0 < 0 branch uses an arcsin antiderivative and requires c1 > 0.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pi3geo/expr.hpp"
#include "pi3geo/jet.hpp"
#include "pi3geo/surface.hpp"

namespace pi3 {

/// Which hyperbolic-rotation builder sweeps the profile:
/// spacelike -> (u cosh v, u sinh v, f(u)); timelike -> (u sinh v, u cosh v,
/// f(u)). Both give the same K and H as functions of u.
enum class ProfileKind { spacelike, timelike };

/// Profile curve u -> (u, 0, f(u)) restricted to u > 0.
struct Profile {
  ExprAst f;           // univariate in u
  ProfileKind kind = ProfileKind::spacelike;
  Interval u_range{1.0, 2.0};
};

/// f' = sign * sqrt(c1 + K0 u^2); K0 != 0. sign = -1 selects the descending
/// profile with the same curvature.
struct ConstantK {
  double K0 = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  int sign = +1;
};

/// f = H0 u^2 / 2 + c1 ln u + c2.
struct ConstantH {
  double H0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// f = c1 u + c2 (K identically zero).
struct Flat {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// f = c1 ln u + c2 (H identically zero).
struct Minimal {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// f = c1 u^2 / 2 + c2: the graph z = (c1/2)(x^2 - y^2) + c2, the unique
/// revolution surfaces with H^2 = K (H = c1, K = c1^2).
struct ParabolicSphere {
  double c1 = 0.0;
  double c2 = 0.0;
};

using ProfileFamily =
    std::variant<ConstantK, ConstantH, Flat, Minimal, ParabolicSphere>;

/// Snake-case family tag used in reports: "constant_k", "constant_h", "flat",
/// "minimal", "parabolic_sphere".
std::string family_name(const ProfileFamily& fam);

/// Named parameters of the family in a fixed order (for reports).
std::vector<std::pair<std::string, double>> family_params(
    const ProfileFamily& fam);

/// Closed-form profile for the family on the given range.
/// Errors: invalid_params (K0 = 0, c1 <= 0 under K0 < 0, non-positive range),
/// empty_domain when the constant-Gauss radicand is nonpositive at the range
/// endpoints or midpoint.
Profile solve_profile(const ProfileFamily& fam, Interval u_range,
                      ProfileKind kind = ProfileKind::spacelike);

/// Revolution surface swept from the profile over the given v-interval.
SurfaceJet make_revolution(const Profile& p, Interval v_range);

/// K = f'(u) f''(u) / u. Errors: invalid_params when u is outside the
/// profile range.
double rev_gauss(const Profile& p, double u);

/// H = (f'(u)/u + f''(u)) / 2. Errors as rev_gauss.
double rev_mean(const Profile& p, double u);

/// Node samples of a profile integrated numerically.
struct SampledProfile {
  std::vector<double> u;
  std::vector<double> f;
};

/// Fixed-step RK4 integration of the profile ODE (first-order
/// f' = sign*sqrt(c1+K0 u^2) for ConstantK, f' = c1 for Flat, second-order
/// f'' + f'/u = 2 H0 otherwise), started from the closed form's value and
/// slope at the left endpoint. Used to validate solve_profile.
/// Errors: invalid_params (step <= 0), empty_domain (radicand nonpositive
/// mid-integration).
SampledProfile profile_ode_oracle(const ProfileFamily& fam, Interval u_range,
                                  double step);

/// min/max/max-abs of a sampled scalar field.
struct FieldStats {
  double min = 0.0;
  double max = 0.0;
  double max_abs = 0.0;
};

/// Grid verification of a profile family: K and H are recomputed through the
/// general surface formulas and compared against the family's targets.
struct FamilyReport {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  int grid_nu = 0, grid_nv = 0;
  FieldStats K_stats, H_stats;
  std::optional<double> max_abs_K_minus_K0;  // families with a K target
  std::optional<double> max_abs_H_minus_H0;  // families with an H target
  double max_abs_H2_minus_K = 0.0;
  // ParabolicSphere only: max |H^2 - K| of the profile perturbed by
  // +1e-3 u^3, which must exceed 1e-8 for the equality case to be
  // discriminating.
  std::optional<double> negative_control_max;
  double tolerance = 0.0;
  bool pass = false;
};

/// Builds the family's surface and sweeps an nu x nv grid; deterministic
/// row-major reduction order. pass requires every applicable target below
/// tol and, for ParabolicSphere, the negative control above 1e-8.
FamilyReport verify_family(const ProfileFamily& fam, Interval u_range,
                           Interval v_range, int nu = 50, int nv = 50,
                           double tol = 1e-8);

}  // namespace pi3
