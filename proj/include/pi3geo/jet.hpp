#pragma once

// Truncated Taylor ("jet") arithmetic.
//
// Jet1 carries the value and first three derivatives of a univariate function
// at a point; Jet2 carries the value and all partials up to second order of a
// bivariate function.  Fields store true derivatives (not scaled Taylor
// coefficients).  Arithmetic propagates derivatives exactly via the Leibniz
// and Faa di Bruno rules, so jets of closed-form expressions are exact up to
// rounding -- they are the derivative oracle for every curvature formula in
// this library.

#include <cmath>
#include <string>
#include <vector>

#include "pi3geo/error.hpp"

namespace pi3 {

/// Closed parameter interval.
struct Interval {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// Axis-aligned parameter rectangle.
struct Rect {
  Interval u, v;
};

/// n evenly spaced samples across the interval, both endpoints included.
inline std::vector<double> linspace(const Interval& range, int n) {
  if (n < 2) throw Error(Errc::invalid_params, "need at least two samples");
  std::vector<double> s(static_cast<std::size_t>(n));
  const double h = range.length() / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = range.lo + h * i;
  s.back() = range.hi;
  return s;
}

struct Jet1 {
  double value = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

struct Jet2 {
  double value = 0.0, du = 0.0, dv = 0.0, duu = 0.0, duv = 0.0, dvv = 0.0;
};

/// Jet of a constant.
inline Jet1 jet1_const(double c) { return {c, 0, 0, 0}; }
inline Jet2 jet2_const(double c) { return {c, 0, 0, 0, 0, 0}; }

/// Jet of the identity map evaluated at s.
inline Jet1 jet1_var(double s) { return {s, 1, 0, 0}; }

/// Jets of the two coordinate projections evaluated at (u, v).
inline Jet2 jet2_var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
inline Jet2 jet2_var_v(double v) { return {v, 0, 1, 0, 0, 0}; }

// ---------------------------------------------------------------------------
// Ring operations.

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet1 operator-(const Jet1& a, const Jet1& b) {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet1 operator-(const Jet1& a) { return {-a.value, -a.d1, -a.d2, -a.d3}; }
inline Jet1 operator*(double c, const Jet1& a) {
  return {c * a.value, c * a.d1, c * a.d2, c * a.d3};
}
inline Jet1 operator*(const Jet1& a, double c) { return c * a; }

inline Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.value * b.value,
          a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2,
          a.d3 * b.value + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.value * b.d3};
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) {
  if (b.value == 0.0)
    throw Error(Errc::domain_error, "jet division by zero");
  Jet1 q;
  q.value = a.value / b.value;
  q.d1 = (a.d1 - q.value * b.d1) / b.value;
  q.d2 = (a.d2 - 2.0 * q.d1 * b.d1 - q.value * b.d2) / b.value;
  q.d3 = (a.d3 - 3.0 * q.d2 * b.d1 - 3.0 * q.d1 * b.d2 - q.value * b.d3) / b.value;
  return q;
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.value + b.value, a.du + b.du,   a.dv + b.dv,
          a.duu + b.duu,     a.duv + b.duv, a.dvv + b.dvv};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.value - b.value, a.du - b.du,   a.dv - b.dv,
          a.duu - b.duu,     a.duv - b.duv, a.dvv - b.dvv};
}
inline Jet2 operator-(const Jet2& a) {
  return {-a.value, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv};
}
inline Jet2 operator*(double c, const Jet2& a) {
  return {c * a.value, c * a.du, c * a.dv, c * a.duu, c * a.duv, c * a.dvv};
}
inline Jet2 operator*(const Jet2& a, double c) { return c * a; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value * b.value;
  r.du = a.du * b.value + a.value * b.du;
  r.dv = a.dv * b.value + a.value * b.dv;
  r.duu = a.duu * b.value + 2.0 * a.du * b.du + a.value * b.duu;
  r.duv = a.duv * b.value + a.du * b.dv + a.dv * b.du + a.value * b.duv;
  r.dvv = a.dvv * b.value + 2.0 * a.dv * b.dv + a.value * b.dvv;
  return r;
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.value == 0.0)
    throw Error(Errc::domain_error, "jet division by zero");
  Jet2 q;
  q.value = a.value / b.value;
  q.du = (a.du - q.value * b.du) / b.value;
  q.dv = (a.dv - q.value * b.dv) / b.value;
  q.duu = (a.duu - 2.0 * q.du * b.du - q.value * b.duu) / b.value;
  q.duv = (a.duv - q.du * b.dv - q.dv * b.du - q.value * b.duv) / b.value;
  q.dvv = (a.dvv - 2.0 * q.dv * b.dv - q.value * b.dvv) / b.value;
  return q;
}

// ---------------------------------------------------------------------------
// Composition with a scalar function given by its derivatives at a point.

/// Value and first three derivatives of an outer function at a fixed point.
struct Derivs3 {
  double f0 = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
};

/// Faa di Bruno to third order: jet of f(g) from f's derivatives at g.value.
inline Jet1 compose(const Derivs3& f, const Jet1& g) {
  Jet1 r;
  r.value = f.f0;
  r.d1 = f.f1 * g.d1;
  r.d2 = f.f2 * g.d1 * g.d1 + f.f1 * g.d2;
  r.d3 = f.f3 * g.d1 * g.d1 * g.d1 + 3.0 * f.f2 * g.d1 * g.d2 + f.f1 * g.d3;
  return r;
}

/// Bivariate chain rule to second order (uses f0..f2 only).
inline Jet2 compose(const Derivs3& f, const Jet2& g) {
  Jet2 r;
  r.value = f.f0;
  r.du = f.f1 * g.du;
  r.dv = f.f1 * g.dv;
  r.duu = f.f2 * g.du * g.du + f.f1 * g.duu;
  r.duv = f.f2 * g.du * g.dv + f.f1 * g.duv;
  r.dvv = f.f2 * g.dv * g.dv + f.f1 * g.dvv;
  return r;
}

namespace detail {

inline Derivs3 derivs_sinh(double x) {
  const double s = std::sinh(x), c = std::cosh(x);
  return {s, c, s, c};
}
inline Derivs3 derivs_cosh(double x) {
  const double s = std::sinh(x), c = std::cosh(x);
  return {c, s, c, s};
}
inline Derivs3 derivs_tanh(double x) {
  const double t = std::tanh(x), w = 1.0 - t * t;
  return {t, w, -2.0 * t * w, w * (6.0 * t * t - 2.0)};
}
inline Derivs3 derivs_sin(double x) {
  const double s = std::sin(x), c = std::cos(x);
  return {s, c, -s, -c};
}
inline Derivs3 derivs_cos(double x) {
  const double s = std::sin(x), c = std::cos(x);
  return {c, -s, -c, s};
}
inline Derivs3 derivs_exp(double x) {
  const double e = std::exp(x);
  return {e, e, e, e};
}
inline Derivs3 derivs_ln(double x) {
  if (!(x > 0.0))
    throw Error(Errc::domain_error, "ln of non-positive value " + std::to_string(x));
  const double i = 1.0 / x;
  return {std::log(x), i, -i * i, 2.0 * i * i * i};
}
inline Derivs3 derivs_sqrt(double x) {
  if (!(x > 0.0))
    throw Error(Errc::domain_error,
                "sqrt of non-positive value " + std::to_string(x) +
                    " (the derivative is singular at 0)");
  const double r = std::sqrt(x);
  return {r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)};
}
inline Derivs3 derivs_abs(double x) {
  if (x == 0.0)
    throw Error(Errc::domain_error, "abs is not differentiable at 0");
  const double s = x > 0.0 ? 1.0 : -1.0;
  return {std::abs(x), s, 0.0, 0.0};
}
inline Derivs3 derivs_asin(double x) {
  if (!(std::abs(x) < 1.0))
    throw Error(Errc::domain_error,
                "asin argument " + std::to_string(x) + " outside (-1, 1)");
  const double w = 1.0 - x * x, r = std::sqrt(w);
  return {std::asin(x), 1.0 / r, x / (w * r), (1.0 + 2.0 * x * x) / (w * w * r)};
}

/// k-th derivative of x^r, guarding the 0 * inf products that the plain power
/// rule produces when the falling factorial vanishes.
inline double pow_derivative(double x, double r, int k) {
  double coeff = 1.0;
  for (int i = 0; i < k; ++i) coeff *= (r - i);
  if (coeff == 0.0) return 0.0;
  const double ex = r - k;
  const bool r_is_integer = r == std::floor(r);
  if (x == 0.0 && ex < 0.0)
    throw Error(Errc::domain_error, "power of 0 with negative effective exponent");
  if (x < 0.0 && !r_is_integer)
    throw Error(Errc::domain_error, "non-integer power of negative value");
  return coeff * std::pow(x, ex);
}

inline Derivs3 derivs_pow(double x, double r) {
  return {pow_derivative(x, r, 0), pow_derivative(x, r, 1),
          pow_derivative(x, r, 2), pow_derivative(x, r, 3)};
}

}  // namespace detail

// Elementary functions on jets.  The exponent of pow must be a constant.

inline Jet1 sinh(const Jet1& g) { return compose(detail::derivs_sinh(g.value), g); }
inline Jet1 cosh(const Jet1& g) { return compose(detail::derivs_cosh(g.value), g); }
inline Jet1 tanh(const Jet1& g) { return compose(detail::derivs_tanh(g.value), g); }
inline Jet1 sin(const Jet1& g) { return compose(detail::derivs_sin(g.value), g); }
inline Jet1 cos(const Jet1& g) { return compose(detail::derivs_cos(g.value), g); }
inline Jet1 exp(const Jet1& g) { return compose(detail::derivs_exp(g.value), g); }
inline Jet1 ln(const Jet1& g) { return compose(detail::derivs_ln(g.value), g); }
inline Jet1 sqrt(const Jet1& g) { return compose(detail::derivs_sqrt(g.value), g); }
inline Jet1 abs(const Jet1& g) { return compose(detail::derivs_abs(g.value), g); }
inline Jet1 asin(const Jet1& g) { return compose(detail::derivs_asin(g.value), g); }
inline Jet1 pow(const Jet1& g, double r) {
  return compose(detail::derivs_pow(g.value, r), g);
}

inline Jet2 sinh(const Jet2& g) { return compose(detail::derivs_sinh(g.value), g); }
inline Jet2 cosh(const Jet2& g) { return compose(detail::derivs_cosh(g.value), g); }
inline Jet2 tanh(const Jet2& g) { return compose(detail::derivs_tanh(g.value), g); }
inline Jet2 sin(const Jet2& g) { return compose(detail::derivs_sin(g.value), g); }
inline Jet2 cos(const Jet2& g) { return compose(detail::derivs_cos(g.value), g); }
inline Jet2 exp(const Jet2& g) { return compose(detail::derivs_exp(g.value), g); }
inline Jet2 ln(const Jet2& g) { return compose(detail::derivs_ln(g.value), g); }
inline Jet2 sqrt(const Jet2& g) { return compose(detail::derivs_sqrt(g.value), g); }
inline Jet2 abs(const Jet2& g) { return compose(detail::derivs_abs(g.value), g); }
inline Jet2 asin(const Jet2& g) { return compose(detail::derivs_asin(g.value), g); }
inline Jet2 pow(const Jet2& g, double r) {
  return compose(detail::derivs_pow(g.value, r), g);
}

inline bool is_finite(const Jet1& j) {
  return std::isfinite(j.value) && std::isfinite(j.d1) && std::isfinite(j.d2) &&
         std::isfinite(j.d3);
}
inline bool is_finite(const Jet2& j) {
  return std::isfinite(j.value) && std::isfinite(j.du) && std::isfinite(j.dv) &&
         std::isfinite(j.duu) && std::isfinite(j.duv) && std::isfinite(j.dvv);
}

}  // namespace pi3
