#pragma once

// Linear algebra of the pseudo-isotropic 3-space.
//
// Points are (x, y, z) with the degenerate line element ds^2 = dx^2 - dy^2;
// the z-direction is the isotropic direction.  All motions and all formulas in
// this library use these "diagonal" coordinates, in which the top-view part of
// a motion is a hyperbolic rotation.  Helpers are provided to convert to and
// from "null" coordinates (x+y, x-y, z), in which the same rotation acts by
// scaling the first axis by q = exp(theta) and the second by 1/q.

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "pi3geo/error.hpp"

namespace pi3 {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

namespace detail {

template <typename Derived>
inline void require_finite3(const Eigen::MatrixBase<Derived>& u, const char* who) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  if (!(std::isfinite(double(u[0])) && std::isfinite(double(u[1])) &&
        std::isfinite(double(u[2])))) {
    throw Error(Errc::non_finite, std::string(who) + ": non-finite vector component");
  }
}

}  // namespace detail

/// Degenerate scalar product.  For vectors whose top views both vanish the
/// product falls back to the z-components; otherwise it is the Lorentzian
/// product of the top views.
template <typename DU, typename DV>
inline double pi_dot(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DV>& v) {
  detail::require_finite3(u, "pi_dot");
  detail::require_finite3(v, "pi_dot");
  if (u[0] == 0.0 && u[1] == 0.0 && v[0] == 0.0 && v[1] == 0.0) {
    return double(u[2]) * double(v[2]);
  }
  return double(u[0]) * double(v[0]) - double(u[1]) * double(v[1]);
}

/// Projection onto the non-isotropic plane: (x, y, z) -> (x, y, 0).
template <typename Derived>
inline Vec3 top_view(const Eigen::MatrixBase<Derived>& u) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  return Vec3(double(u[0]), double(u[1]), 0.0);
}

enum class CausalClass { spacelike, timelike, lightlike, isotropic };

inline const char* causal_class_name(CausalClass c) {
  switch (c) {
    case CausalClass::spacelike: return "spacelike";
    case CausalClass::timelike: return "timelike";
    case CausalClass::lightlike: return "lightlike";
    case CausalClass::isotropic: return "isotropic";
  }
  return "unknown";
}

/// Classifies a vector by the sign of pi_dot(u, u).  A nonzero vector with a
/// vanishing top view is isotropic; the zero vector counts as spacelike.
template <typename Derived>
inline CausalClass causal_class(const Eigen::MatrixBase<Derived>& u) {
  detail::require_finite3(u, "causal_class");
  const double x = double(u[0]), y = double(u[1]), z = double(u[2]);
  if (x == 0.0 && y == 0.0) {
    if (z == 0.0) return CausalClass::spacelike;  // zero vector
    return CausalClass::isotropic;
  }
  const double s = x * x - y * y;
  if (s > 0.0) return CausalClass::spacelike;
  if (s < 0.0) return CausalClass::timelike;
  return CausalClass::lightlike;
}

/// True iff two timelike vectors lie in the same timelike cone, i.e. their
/// scalar product is negative.  Throws unless both vectors are timelike.
template <typename DU, typename DV>
inline bool same_timelike_cone(const Eigen::MatrixBase<DU>& u,
                               const Eigen::MatrixBase<DV>& v) {
  if (causal_class(u) != CausalClass::timelike)
    throw Error(Errc::not_timelike, "same_timelike_cone: first vector is not timelike");
  if (causal_class(v) != CausalClass::timelike)
    throw Error(Errc::not_timelike, "same_timelike_cone: second vector is not timelike");
  return pi_dot(u, v) < 0.0;
}

/// Hyperbolic angle between two timelike vectors in the same cone:
/// cosh(phi) = -pi_dot(u, v) / (|u| |v|).  The cosh argument is clamped up to
/// 1 when rounding pushes it below by less than 1e-12.
template <typename DU, typename DV>
inline double pseudo_angle(const Eigen::MatrixBase<DU>& u,
                           const Eigen::MatrixBase<DV>& v) {
  if (causal_class(u) != CausalClass::timelike)
    throw Error(Errc::not_timelike, "pseudo_angle: first vector is not timelike");
  if (causal_class(v) != CausalClass::timelike)
    throw Error(Errc::not_timelike, "pseudo_angle: second vector is not timelike");
  const double uv = pi_dot(u, v);
  if (uv >= 0.0)
    throw Error(Errc::different_cones, "pseudo_angle: vectors lie in different timelike cones");
  double arg = -uv / (std::sqrt(-pi_dot(u, u)) * std::sqrt(-pi_dot(v, v)));
  if (arg < 1.0) {
    if (arg < 1.0 - 1e-12)
      throw Error(Errc::domain_error, "pseudo_angle: cosh argument below 1");
    arg = 1.0;
  }
  return std::acosh(arg);
}

/// Six-parameter motion (a "pseudo-isotropic isometry") in diagonal
/// coordinates:
///
///   x' = a + x cosh(theta) + y sinh(theta)
///   y' = b + x sinh(theta) + y cosh(theta)
///   z' = c + d x + e y + z
///
/// The top-view part is a hyperbolic rotation by theta plus a translation; the
/// z-part shears along the isotropic direction.
struct PiMotion {
  double theta = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double d = 0.0, e = 0.0;

  PiMotion() = default;
  PiMotion(double theta_, double a_, double b_, double c_, double d_, double e_)
      : theta(theta_), a(a_), b(b_), c(c_), d(d_), e(e_) {
    if (!(std::isfinite(theta) && std::isfinite(a) && std::isfinite(b) &&
          std::isfinite(c) && std::isfinite(d) && std::isfinite(e)))
      throw Error(Errc::non_finite, "PiMotion: non-finite parameter");
  }

  static PiMotion identity() { return PiMotion(); }
  static PiMotion rotation(double theta) { return PiMotion(theta, 0, 0, 0, 0, 0); }
  static PiMotion translation(double a, double b, double c) {
    return PiMotion(0, a, b, c, 0, 0);
  }
  static PiMotion shear(double d, double e) { return PiMotion(0, 0, 0, 0, d, e); }

  /// Linear part as a 3x3 matrix acting on column vectors.
  Eigen::Matrix3d linear() const {
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    Eigen::Matrix3d m;
    m << ch, sh, 0.0, sh, ch, 0.0, d, e, 1.0;
    return m;
  }

  Vec3 translation_part() const { return Vec3(a, b, c); }

  Vec3 operator()(const Vec3& p) const {
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    return Vec3(a + p.x() * ch + p.y() * sh,
                b + p.x() * sh + p.y() * ch,
                c + d * p.x() + e * p.y() + p.z());
  }

  /// Composition: (m1 * m2)(p) = m1(m2(p)).
  PiMotion operator*(const PiMotion& r) const {
    const double ch1 = std::cosh(theta), sh1 = std::sinh(theta);
    const double ch2 = std::cosh(r.theta), sh2 = std::sinh(r.theta);
    return PiMotion(theta + r.theta,
                    a + r.a * ch1 + r.b * sh1,
                    b + r.a * sh1 + r.b * ch1,
                    c + r.c + d * r.a + e * r.b,
                    d * ch2 + e * sh2 + r.d,
                    d * sh2 + e * ch2 + r.e);
  }

  PiMotion inverse() const {
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    const double ai = -(a * ch - b * sh);
    const double bi = -(b * ch - a * sh);
    const double di = -(d * ch - e * sh);
    const double ei = -(e * ch - d * sh);
    const double ci = -c + d * (a * ch - b * sh) + e * (b * ch - a * sh);
    return PiMotion(-theta, ai, bi, ci, di, ei);
  }
};

inline Vec3 apply_motion(const PiMotion& m, const Vec3& p) { return m(p); }

/// Diagonal -> null coordinates: (x, y, z) -> (x + y, x - y, z).
inline Vec3 to_null(const Vec3& p) {
  return Vec3(p.x() + p.y(), p.x() - p.y(), p.z());
}

/// Null -> diagonal coordinates, inverse of `to_null`.
inline Vec3 from_null(const Vec3& p) {
  return Vec3(0.5 * (p.x() + p.y()), 0.5 * (p.x() - p.y()), p.z());
}

/// Builds the diagonal-coordinate motion that acts in null coordinates as
///
///   xi'  = an + q xi,   eta' = bn + eta / q,   z' = cn + dn xi + en eta + z
///
/// with scale factor q > 0 (theta = ln q).  Negative or zero q is rejected:
/// such maps swap or reflect the isotropic cone fields and are not motions
/// handled here.
inline PiMotion motion_from_null_form(double q, double an, double bn, double cn,
                                      double dn, double en) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw Error(Errc::invalid_params, "motion_from_null_form: scale q must be positive");
  return PiMotion(std::log(q), 0.5 * (an + bn), 0.5 * (an - bn), cn, dn + en,
                  dn - en);
}

}  // namespace pi3
