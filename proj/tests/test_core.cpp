#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "pi3geo/core.hpp"

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

}  // namespace

TEST_CASE("pi_dot is the Lorentzian product of the top views") {
  CHECK(pi_dot(Vec3(1, 2, 3), Vec3(4, 5, 6)) == -6.0);
  CHECK(pi_dot(Vec3(1, 0, 0), Vec3(1, 0, 0)) == 1.0);
  CHECK(pi_dot(Vec3(0, 1, 0), Vec3(0, 1, 0)) == -1.0);
  CHECK(pi_dot(Vec3(2, 1, 9), Vec3(1, 2, -9)) == 0.0);
}

TEST_CASE("pi_dot falls back to z-components only for two vanishing top views") {
  CHECK(pi_dot(Vec3(0, 0, 2), Vec3(0, 0, 3)) == 6.0);
  CHECK(pi_dot(Vec3(0, 0, 1), Vec3(1, 1, 0)) == 0.0);
  CHECK(pi_dot(Vec3(1, 1, 4), Vec3(0, 0, 5)) == 0.0);
}

TEST_CASE("pi_dot rejects non-finite input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(error_code_of([&] { pi_dot(Vec3(nan, 0, 0), Vec3(1, 0, 0)); }) ==
        Errc::non_finite);
}

TEST_CASE("top_view projects onto the non-isotropic plane") {
  CHECK(top_view(Vec3(1, 2, 3)) == Vec3(1, 2, 0));
  CHECK(top_view(Vec3(0, 0, 5)) == Vec3(0, 0, 0));
}

TEST_CASE("causal_class covers all four classes") {
  CHECK(causal_class(Vec3(1, 0, 0)) == CausalClass::spacelike);
  CHECK(causal_class(Vec3(2, 1, -3)) == CausalClass::spacelike);
  CHECK(causal_class(Vec3(0, 1, 0)) == CausalClass::timelike);
  CHECK(causal_class(Vec3(1, 2, 7)) == CausalClass::timelike);
  CHECK(causal_class(Vec3(1, 1, 5)) == CausalClass::lightlike);
  CHECK(causal_class(Vec3(-1, 1, 0)) == CausalClass::lightlike);
  CHECK(causal_class(Vec3(0, 0, 1)) == CausalClass::isotropic);
  CHECK(causal_class(Vec3(0, 0, 0)) == CausalClass::spacelike);
}

TEST_CASE("causal_class_name strings") {
  CHECK(std::string(causal_class_name(CausalClass::spacelike)) == "spacelike");
  CHECK(std::string(causal_class_name(CausalClass::timelike)) == "timelike");
  CHECK(std::string(causal_class_name(CausalClass::lightlike)) == "lightlike");
  CHECK(std::string(causal_class_name(CausalClass::isotropic)) == "isotropic");
}

TEST_CASE("same_timelike_cone") {
  CHECK(same_timelike_cone(Vec3(0, 1, 0), Vec3(1, 2, 0)));
  CHECK_FALSE(same_timelike_cone(Vec3(0, 1, 0), Vec3(0, -1, 0)));
  CHECK(error_code_of([] {
          same_timelike_cone(Vec3(1, 0, 0), Vec3(0, 1, 0));
        }) == Errc::not_timelike);
}

TEST_CASE("pseudo_angle recovers the hyperbolic rotation angle") {
  const Vec3 u(0, 1, 0);
  const Vec3 v(std::sinh(0.7), std::cosh(0.7), 0);
  CHECK(pseudo_angle(u, v) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(pseudo_angle(u, u) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(error_code_of([&] { pseudo_angle(u, Vec3(0, -1, 0)); }) ==
        Errc::different_cones);
  CHECK(error_code_of([&] { pseudo_angle(Vec3(1, 0, 0), u); }) ==
        Errc::not_timelike);
}

TEST_CASE("pseudo_angle is invariant under hyperbolic rotations") {
  const Eigen::Matrix3d L = PiMotion::rotation(0.9).linear();
  const Vec3 u(0.3, 1.4, 2.0), v(-0.2, 2.0, -1.0);
  CHECK(pseudo_angle(Vec3(L * u), Vec3(L * v)) ==
        doctest::Approx(pseudo_angle(u, v)).epsilon(1e-12));
}

TEST_CASE("PiMotion applies the affine map in diagonal coordinates") {
  const PiMotion m(0.3, 1, 2, 3, 0.5, -1);
  const Vec3 p(1, 2, 3);
  const Vec3 q = m(p);
  CHECK(q.x() == doctest::Approx(1 + std::cosh(0.3) + 2 * std::sinh(0.3))
                     .epsilon(1e-15));
  CHECK(q.y() == doctest::Approx(2 + std::sinh(0.3) + 2 * std::cosh(0.3))
                     .epsilon(1e-15));
  CHECK(q.z() == doctest::Approx(3 + 0.5 * 1 - 1 * 2 + 3).epsilon(1e-15));
  CHECK(apply_motion(m, p) == q);
}

TEST_CASE("PiMotion linear part") {
  const PiMotion m(0.4, 0, 0, 0, 2, -3);
  const Eigen::Matrix3d L = m.linear();
  CHECK(L(0, 0) == std::cosh(0.4));
  CHECK(L(0, 1) == std::sinh(0.4));
  CHECK(L(0, 2) == 0.0);
  CHECK(L(1, 0) == std::sinh(0.4));
  CHECK(L(1, 1) == std::cosh(0.4));
  CHECK(L(1, 2) == 0.0);
  CHECK(L(2, 0) == 2.0);
  CHECK(L(2, 1) == -3.0);
  CHECK(L(2, 2) == 1.0);
  CHECK(m.translation_part() == Vec3(0, 0, 0));
}

TEST_CASE("composition matches application order") {
  const PiMotion m1(0.5, 1, -2, 0.3, 0.2, 0.7);
  const PiMotion m2(-0.8, 0.4, 0.1, -1, 1.5, -0.6);
  const Vec3 p(0.7, -1.2, 2.5);
  const Vec3 a = (m1 * m2)(p);
  const Vec3 b = m1(m2(p));
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inverse undoes a motion") {
  const PiMotion m(0.9, 1.5, -0.3, 2.0, -1.1, 0.4);
  const Vec3 p(1.2, 0.8, -3.0);
  CHECK((m.inverse()(m(p)) - p).cwiseAbs().maxCoeff() < 1e-12);
  const PiMotion id = m * m.inverse();
  CHECK(std::abs(id.theta) < 1e-12);
  CHECK(id.translation_part().cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(id.d) < 1e-12);
  CHECK(std::abs(id.e) < 1e-12);
}

TEST_CASE("the linear part preserves the scalar product") {
  const PiMotion m(1.1, 0, 0, 0, 0.6, -0.9);
  const Eigen::Matrix3d L = m.linear();
  const Vec3 samples[] = {Vec3(1, 0, 0),  Vec3(0, 1, 0), Vec3(1, 1, 2),
                          Vec3(0, 0, 1),  Vec3(2, 1, -1), Vec3(0, 0, -3)};
  for (const Vec3& u : samples)
    for (const Vec3& v : samples)
      CHECK(pi_dot(Vec3(L * u), Vec3(L * v)) ==
            doctest::Approx(pi_dot(u, v)).epsilon(1e-12));
}

TEST_CASE("the linear part preserves causal classes") {
  const Eigen::Matrix3d L = PiMotion(0.7, 0, 0, 0, 1.0, 2.0).linear();
  const Vec3 samples[] = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0),
                          Vec3(0, 0, 1)};
  for (const Vec3& u : samples)
    CHECK(causal_class(Vec3(L * u)) == causal_class(u));
}

TEST_CASE("identity, rotation, translation and shear factories") {
  const Vec3 p(0.4, -0.7, 1.3);
  CHECK(PiMotion::identity()(p) == p);
  CHECK(PiMotion::rotation(0.0)(p) == p);
  CHECK(PiMotion::translation(1, 2, 3)(p) == Vec3(1.4, 1.3, 4.3));
  const Vec3 sheared = PiMotion::shear(2, 0)(p);
  CHECK(sheared.x() == p.x());
  CHECK(sheared.y() == p.y());
  CHECK(sheared.z() == doctest::Approx(1.3 + 0.8).epsilon(1e-15));
}

TEST_CASE("null coordinates round trip") {
  const Vec3 p(0.3, -1.2, 2.0);
  CHECK((from_null(to_null(p)) - p).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(to_null(Vec3(1, 2, 3)) == Vec3(3, -1, 3));
}

TEST_CASE("motion_from_null_form matches the null-coordinate action") {
  const double q = 2.0, an = 0.3, bn = -0.7, cn = 1.1, dn = 0.4, en = -0.2;
  const PiMotion m = motion_from_null_form(q, an, bn, cn, dn, en);
  const Vec3 p(0.8, -0.5, 1.7);
  const Vec3 pn = to_null(p);
  const Vec3 image_null(an + q * pn.x(), bn + pn.y() / q,
                        cn + dn * pn.x() + en * pn.y() + pn.z());
  CHECK((m(p) - from_null(image_null)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(m.theta == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("motion_from_null_form rejects non-positive scales") {
  CHECK(error_code_of([] { motion_from_null_form(0.0, 0, 0, 0, 0, 0); }) ==
        Errc::invalid_params);
  CHECK(error_code_of([] { motion_from_null_form(-2.0, 0, 0, 0, 0, 0); }) ==
        Errc::invalid_params);
}

TEST_CASE("PiMotion rejects non-finite parameters") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(error_code_of([&] { PiMotion(inf, 0, 0, 0, 0, 0); }) ==
        Errc::non_finite);
}
