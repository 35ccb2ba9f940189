// Acceptance gate: runs the full numerical verification suite once and folds
// the individual checks into the library's headline guarantees, one pass/fail
// line each.  Exits nonzero if any guarantee fails.

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pi3geo/checks.hpp"

namespace {

struct Criterion {
  const char* description;
  std::vector<const char*> checks;
};

const Criterion kCriteria[] = {
    {"constant-torsion cylindrical curves have kappa = 1 and tau = tau0",
     {"constant_torsion_curve"}},
    {"cylindrical-curve torsion equals z' - z''' computed from jets",
     {"torsion_from_height_jets"}},
    {"moving-frame derivatives match finite differences and curves rebuild "
     "from their invariants",
     {"frenet_system_fd", "frenet_reconstruction"}},
    {"lightlike curves lie in an isotropic plane x +/- y = c0",
     {"lightlike_planarity"}},
    {"det g = -J^2 for the top-view Jacobian J on random admissible surfaces",
     {"metric_det_identity"}},
    {"graph curvature closed forms agree with the general machinery",
     {"graph_curvature_consistency"}},
    {"revolution surfaces reduce to K = f'f''/u and H = (f'/u + f'')/2",
     {"revolution_curvature_reduction"}},
    {"worked revolution examples: flat cone and constant-mean height",
     {"revolution_examples"}},
    {"constant-Gauss profiles hit K0 and obey f' = sqrt(c1 + K0 u^2)",
     {"constant_gauss_profiles"}},
    {"constant-mean and minimal profiles hit their H targets",
     {"constant_mean_profiles", "minimal_profiles"}},
    {"parabolic spheres satisfy H = c1, K = c1^2, H^2 = K, and a perturbed "
     "profile measurably breaks the equality",
     {"parabolic_sphere_example", "parabolic_sphere_euler_equality",
      "parabolic_sphere_negative_control"}},
    {"curve and surface invariants are unchanged by the motion group",
     {"motion_invariance"}},
    {"closed-form profiles match direct ODE integration",
     {"profile_ode_oracle"}},
    {"expression jets match finite differences of values and of first "
     "derivatives",
     {"jet_fd_first_derivatives", "jet_fd_second_derivatives"}},
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  std::map<std::string, pi3::CheckResult> by_name;
  for (const pi3::CheckResult& r : pi3::run_checks("all"))
    by_name.emplace(r.name, r);

  int passed = 0;
  const int total = static_cast<int>(std::size(kCriteria));
  for (int i = 0; i < total; ++i) {
    const Criterion& c = kCriteria[i];
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t k = 0; k < c.checks.size(); ++k) {
      const auto it = by_name.find(c.checks[k]);
      if (it == by_name.end()) {
        ok = false;
        detail << (k ? "; " : "") << c.checks[k] << ": missing";
        continue;
      }
      const pi3::CheckResult& r = it->second;
      ok = ok && r.pass;
      detail << (k ? "; " : "") << r.name << ": " << fmt(r.measured)
             << (r.exceed ? " > " : " < ") << fmt(r.tolerance);
      if (!r.pass) detail << " FAILED";
      if (!r.detail.empty()) detail << " [" << r.detail << "]";
    }
    passed += ok ? 1 : 0;
    std::printf("[%s] %02d %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                c.description, detail.str().c_str());
  }
  std::printf("acceptance: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
