#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "pi3geo/curve.hpp"
#include "pi3geo/testgen.hpp"

using namespace pi3;

namespace {

template <typename Fn>
Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_params;
}

CurveJet curve_from(const std::string& x, const std::string& y,
                    const std::string& z, Interval range = {-1.0, 1.0}) {
  return CurveJet::from_exprs(ExprAst::parse(x, {"s"}),
                              ExprAst::parse(y, {"s"}),
                              ExprAst::parse(z, {"s"}), range);
}

/// Arc-length spacelike curve with closed-form curvature |beta| / (beta s +
/// gamma): tangent top view ((w + 1/w)/2, (w - 1/w)/2) with w = beta s +
/// gamma.
CurveJet power_curve(double beta, double gamma, bool timelike,
                     Interval range = {-1.0, 1.0}) {
  const ExprAst s = ExprAst::variable("s");
  const ExprAst quad =
      (ExprAst::constant(0.5 * beta) * s * s + ExprAst::constant(gamma) * s) /
      ExprAst::constant(2.0);
  const ExprAst log_term =
      ln(ExprAst::constant(beta) * s + ExprAst::constant(gamma)) /
      ExprAst::constant(2.0 * beta);
  const ExprAst x = quad + log_term;
  const ExprAst y = quad - log_term;
  const ExprAst z = ExprAst::constant(0.25) * s * s * s;
  if (timelike) return CurveJet::from_exprs(y, x, z, range);
  return CurveJet::from_exprs(x, y, z, range);
}

}  // namespace

TEST_CASE("classification of standard curves") {
  CHECK(classify_curve(curve_from("cosh(s)", "sinh(s)", "s"), 64) ==
        CausalClass::timelike);
  CHECK(classify_curve(curve_from("sinh(s)", "cosh(s)", "0"), 64) ==
        CausalClass::spacelike);
  CHECK(classify_curve(curve_from("s", "s", "s^3"), 64) ==
        CausalClass::lightlike);
  CHECK(classify_curve(curve_from("1", "2", "s"), 64) ==
        CausalClass::isotropic);
}

TEST_CASE("classification failures") {
  // Tangent (1, 4s): crosses the light cone inside the range.
  CHECK(error_code_of([] {
          classify_curve(curve_from("s", "2*s^2", "0"), 64);
        }) == Errc::mixed_causality);
  // Tangent vanishes exactly at s = 0 (odd sample count hits it).
  CHECK(error_code_of([] {
          classify_curve(curve_from("s^2", "s^2", "s^2"), 65);
        }) == Errc::irregular);
  CHECK(error_code_of([] {
          classify_curve(curve_from("s", "0", "0"), 1);
        }) == Errc::invalid_params);
}

TEST_CASE("arc-length and admissibility predicates") {
  const CurveJet helix = curve_from("cosh(s)", "sinh(s)", "s");
  CHECK(is_arclength(helix, 64));
  CHECK(is_admissible(helix, 64));

  const CurveJet fast = curve_from("2*s", "0", "0");
  CHECK_FALSE(is_arclength(fast, 64));

  const CurveJet line = curve_from("s", "0", "0");
  CHECK(is_arclength(line, 64));
  CHECK_FALSE(is_admissible(line, 64));  // top-view acceleration vanishes
}

TEST_CASE("curvature closed form on the power family") {
  const double beta = 0.5, gamma = 1.5;
  for (bool timelike : {false, true}) {
    const CurveJet c = power_curve(beta, gamma, timelike);
    for (double s : {-0.8, -0.2, 0.3, 0.9}) {
      CHECK(curvature(c, s) ==
            doctest::Approx(beta / (beta * s + gamma)).epsilon(1e-12));
    }
  }
}

TEST_CASE("signed determinant has curvature magnitude") {
  const CurveJet c = curve_from("cosh(s)", "sinh(s)", "s");
  // alpha' top = (sinh, cosh), alpha'' top = (cosh, sinh): det = -1.
  CHECK(signed_curvature_det(c, 0.4) == doctest::Approx(-1.0).epsilon(1e-12));
  const CurveInvariants inv = curve_invariants(c, 0.4);
  CHECK(std::abs(inv.signed_det) ==
        doctest::Approx(inv.kappa).epsilon(1e-12));
}

TEST_CASE("hyperbolic cylindrical curves: kappa = 1 and tau = z' - z'''") {
  const CurveJet c =
      hyperbolic_cylindrical(ExprAst::parse("s^3", {"s"}), {-1.0, 1.0});
  for (double s : {-0.7, 0.0, 0.4}) {
    CHECK(curvature(c, s) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(torsion(c, s) ==
          doctest::Approx(3 * s * s - 6.0).epsilon(1e-12));
  }
}

TEST_CASE("constant-torsion curve hits its target invariants") {
  const CurveJet c = constant_torsion_cylindrical(3.0, 0.4, 0.7, -0.2);
  const double s = 0.5;
  const CurvePoint cp = c(s);
  CHECK(cp.p.x() == doctest::Approx(std::cosh(s)).epsilon(1e-15));
  CHECK(cp.p.y() == doctest::Approx(std::sinh(s)).epsilon(1e-15));
  CHECK(cp.p.z() == doctest::Approx(3 * s + 0.4 * std::exp(s) -
                                    0.7 * std::exp(-s) - 0.2)
                        .epsilon(1e-14));
  for (double t : {-0.9, 0.1, 0.8}) {
    const CurveInvariants inv = curve_invariants(c, t);
    CHECK(inv.kappa == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inv.tau == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("(sinh, cosh, 0) has unit curvature and zero torsion") {
  const CurveJet c = curve_from("sinh(s)", "cosh(s)", "0");
  for (double s : {-0.5, 0.2, 0.9}) {
    CHECK(curvature(c, s) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(torsion(c, s) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("curvature preconditions") {
  CHECK(error_code_of([] { curvature(curve_from("2*s", "0", "0"), 0.3); }) ==
        Errc::not_arc_length);
  CHECK(error_code_of([] { curvature(curve_from("s", "s", "0"), 0.3); }) ==
        Errc::not_admissible);
}

TEST_CASE("straight lines have zero curvature and no torsion or frame") {
  const CurveJet line = curve_from("s", "0", "0");
  CHECK(curvature(line, 0.2) == 0.0);
  CHECK(error_code_of([&] { torsion(line, 0.2); }) == Errc::zero_curvature);
  CHECK(error_code_of([&] { frenet_frame(line, 0.2); }) ==
        Errc::zero_curvature);
}

TEST_CASE("frenet frame of the timelike helix") {
  const CurveJet c = curve_from("cosh(s)", "sinh(s)", "s");
  const FrenetFrame f = frenet_frame(c, 0.0);
  CHECK((f.T - Vec3(0, 1, 1)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((f.N - Vec3(1, 0, 0)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(f.B == Vec3(0, 0, 1));
}

TEST_CASE("moving-frame right-hand side, timelike orientation") {
  const FrenetFrame f{Vec3(0, 1, 1), Vec3(1, 0, 0), Vec3(0, 0, 1)};
  // T1 N2 - T2 N1 = -1, so the torsion term enters with a minus sign.
  const FrenetFrame d = frenet_rhs(CausalClass::timelike, 1.0, 1.0, f);
  CHECK(d.T == Vec3(1, 0, 0));                          // kappa N
  CHECK((d.N - Vec3(0, 1, 0)).cwiseAbs().maxCoeff() < 1e-15);  // T - B
  CHECK(d.B == Vec3(0, 0, 0));
}

TEST_CASE("moving-frame right-hand side, spacelike orientation") {
  const FrenetFrame f{Vec3(1, 0, 0.5), Vec3(0, 1, 0.2), Vec3(0, 0, 1)};
  // T1 N2 - T2 N1 = +1, so the torsion term enters with a plus sign.
  const FrenetFrame d = frenet_rhs(CausalClass::spacelike, 2.0, 3.0, f);
  CHECK((d.T - 2.0 * f.N).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((d.N - (2.0 * f.T + 3.0 * Vec3(0, 0, 1))).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK(d.B == Vec3(0, 0, 0));
}

TEST_CASE("frenet_rhs rejects unsupported classes and bad invariants") {
  const FrenetFrame f{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  CHECK(error_code_of([&] {
          frenet_rhs(CausalClass::lightlike, 1.0, 0.0, f);
        }) == Errc::unsupported_class);
  CHECK(error_code_of([&] {
          frenet_rhs(CausalClass::isotropic, 1.0, 0.0, f);
        }) == Errc::unsupported_class);
}

TEST_CASE("frame derivatives match finite differences on a random curve") {
  testgen::Rng rng(2024);
  const CurveJet c =
      testgen::random_arclength_curve(rng, CausalClass::spacelike, {-1.0, 1.0});
  const double h = 1e-5, s = 0.3;
  const FrenetFrame fp = frenet_frame(c, s + h);
  const FrenetFrame fm = frenet_frame(c, s - h);
  const CurveInvariants inv = curve_invariants(c, s);
  const FrenetFrame d =
      frenet_rhs(CausalClass::spacelike, inv.kappa, inv.tau,
                 frenet_frame(c, s));
  CHECK(((fp.T - fm.T) / (2 * h) - d.T).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(((fp.N - fm.N) / (2 * h) - d.N).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("reconstruction from constant invariants recovers (sinh, cosh, 0)") {
  const FrenetFrame f0{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  const ReconstructedCurve rec = reconstruct_from_invariants(
      CausalClass::spacelike, [](double) { return 1.0; },
      [](double) { return 0.0; }, Vec3(0, 1, 0), f0, {0.0, 1.0}, 1e-3);
  REQUIRE(rec.s.size() == rec.p.size());
  CHECK(rec.s.front() == 0.0);
  CHECK(rec.s.back() == 1.0);
  const Vec3 expected(std::sinh(1.0), std::cosh(1.0), 0.0);
  CHECK((rec.p.back() - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("reconstruction input validation") {
  const FrenetFrame f0{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  auto one = [](double) { return 1.0; };
  auto zero = [](double) { return 0.0; };
  CHECK(error_code_of([&] {
          reconstruct_from_invariants(CausalClass::spacelike, one, zero,
                                      Vec3(0, 0, 0), f0, {0.0, 1.0}, -1.0);
        }) == Errc::invalid_params);
  CHECK(error_code_of([&] {
          reconstruct_from_invariants(CausalClass::lightlike, one, zero,
                                      Vec3(0, 0, 0), f0, {0.0, 1.0}, 1e-2);
        }) == Errc::unsupported_class);
  CHECK(error_code_of([&] {
          reconstruct_from_invariants(CausalClass::spacelike, zero, zero,
                                      Vec3(0, 0, 0), f0, {0.0, 1.0}, 1e-2);
        }) == Errc::zero_curvature);
}

TEST_CASE("lightlike curves expose their isotropic plane") {
  const LightlikePlane minus = lightlike_plane(curve_from("s", "s", "s^3"), 33);
  CHECK(minus.sign == -1);
  CHECK(minus.c0 == doctest::Approx(0.0).epsilon(1e-15));

  const LightlikePlane plus =
      lightlike_plane(curve_from("s", "2-s", "s^2"), 33);
  CHECK(plus.sign == 1);
  CHECK(plus.c0 == doctest::Approx(2.0).epsilon(1e-15));

  CHECK(error_code_of([] {
          lightlike_plane(curve_from("cosh(s)", "sinh(s)", "s"), 33);
        }) == Errc::not_lightlike);
}

TEST_CASE("random lightlike curves always find a plane") {
  testgen::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    int sign = 0;
    double c0 = 0.0;
    const CurveJet c =
        testgen::random_lightlike_curve(rng, {-1.0, 1.0}, &sign, &c0);
    const LightlikePlane pl = lightlike_plane(c, 48);
    CHECK(pl.sign == sign);
    CHECK(pl.c0 == doctest::Approx(c0).epsilon(1e-12));
  }
}

TEST_CASE("motions preserve curve invariants") {
  const CurveJet c = constant_torsion_cylindrical(2.0, 0.3, -0.1, 0.0);
  const PiMotion m(0.6, 1.0, -2.0, 0.5, 0.8, -0.3);
  const CurveJet tc = transformed(c, m);
  for (double s : {-0.6, 0.1, 0.7}) {
    const CurveInvariants a = curve_invariants(c, s);
    const CurveInvariants b = curve_invariants(tc, s);
    CHECK(b.kappa == doctest::Approx(a.kappa).epsilon(1e-10));
    CHECK(b.tau == doctest::Approx(a.tau).epsilon(1e-10));
    CHECK((tc(s).p - m(c(s).p)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(classify_curve(tc, 33) == classify_curve(c, 33));
}

TEST_CASE("curve construction validation") {
  CHECK(error_code_of([] {
          CurveJet::from_exprs(ExprAst::parse("u*v", {"u", "v"}),
                               ExprAst::parse("s", {"s"}),
                               ExprAst::parse("s", {"s"}), {-1.0, 1.0});
        }) == Errc::invalid_params);
  CHECK(error_code_of([] { curve_from("s", "0", "0", {1.0, -1.0}); }) ==
        Errc::invalid_params);
}
