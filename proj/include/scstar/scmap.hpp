#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "errors.hpp"
#include "quadrature.hpp"
#include "rootsheet.hpp"
#include "signature.hpp"

namespace scstar {

inline constexpr double kDefaultTol = 1e-10;

struct RationalAngle {
  int num, den;  // num*pi/den, reduced
  double radians() const { return std::numbers::pi * num / den; }
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

inline RationalAngle rational_angle(int num, int den) {
  int g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace detail {

inline void check_tol(double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) throw usage_error("tol must lie in [1e-13, 1e-6]");
}

// w^{e} with arg w in [-pi, pi]; on the real axis the side is chosen by `upper`.
inline cplx side_pow(cplx w, double e, bool upper) {
  double th;
  if (w.imag() == 0.0)
    th = w.real() < 0.0 ? (upper ? std::numbers::pi : -std::numbers::pi) : 0.0;
  else
    th = std::arg(w);
  return std::polar(std::pow(std::abs(w), e), e * th);
}

// Integrand w^{a-1} (1-w)^{b-1}; `upper` fixes the side of the real-axis cuts.
struct Integrand {
  double a, b;
  cplx operator()(cplx w, bool upper) const {
    return side_pow(w, a - 1.0, upper) * side_pow(1.0 - w, b - 1.0, !upper);
  }
};

// Integral from 0 to z of w^{a-1}(1-w)^{b-1}; w = z s^{1/a} absorbs the
// endpoint power exactly.
inline cplx from_zero(cplx z, double a, double b, bool upper, double tol) {
  auto g = [&](double s) {
    double t = std::pow(s, 1.0 / a);
    return side_pow(1.0 - z * t, b - 1.0, !upper);
  };
  cplx factor = side_pow(z, a, upper) / a;
  auto r = quad::integrate(g, 0.0, 1.0, tol / std::max(std::abs(factor), 1e-300), tol);
  return factor * r.value;
}

// Integral from 1 to z, mirrored substitution.
inline cplx from_one(cplx z, double a, double b, bool upper, double tol) {
  auto g = [&](double s) {
    double t = std::pow(s, 1.0 / b);
    return side_pow(1.0 + (z - 1.0) * t, a - 1.0, upper);
  };
  cplx factor = -side_pow(1.0 - z, b, !upper) / b;
  auto r = quad::integrate(g, 0.0, 1.0, tol / std::max(std::abs(factor), 1e-300), tol);
  return factor * r.value;
}

// Straight segment between two regular points.
inline cplx segment(cplx p, cplx q, double a, double b, bool upper, double tol) {
  Integrand f{a, b};
  auto g = [&](double t) { return f(p + (q - p) * t, upper) * (q - p); };
  return quad::integrate(g, 0.0, 1.0, tol).value;
}

// Beta-type integral of t^{a-1}(1-t)^{b-1} over (0,1).
inline double beta_quad(double a, double b, double tol) {
  cplx left = from_zero(0.5, a, b, true, tol / 2);
  cplx right = -from_one(0.5, a, b, true, tol / 2);
  return (left + right).real();
}

}  // namespace detail

inline double alpha_of(const TriangleSignature& s) { return double(s.n0) / s.n; }
inline double beta_of(const TriangleSignature& s) { return double(s.n1) / s.n; }

// F_T(xi) for Im xi >= 0, integrating in the closed upper half-plane.
inline cplx sc_integral(cplx xi, const TriangleSignature& s, double tol = kDefaultTol) {
  detail::check_tol(tol);
  if (xi.imag() < 0.0) throw usage_error("sc_integral needs Im xi >= 0");
  if (xi == cplx(0.0)) return 0.0;
  const double a = alpha_of(s), b = beta_of(s);
  double piece_tol = tol / 2;
  if (std::abs(xi) < 0.5) return detail::from_zero(xi, a, b, true, tol);
  double C = detail::beta_quad(a, b, piece_tol);
  if (std::abs(xi - 1.0) < kBranchEps) return C;
  if (std::abs(xi - 1.0) < 0.5) return C + detail::from_one(xi, a, b, true, piece_tol);
  double M = std::max(1.0, std::abs(xi));
  cplx top(0.0, M);
  cplx first = detail::from_zero(top, a, b, true, piece_tol);
  double second_tol = piece_tol * (1.0 + std::abs(first));
  return first + detail::segment(top, xi, a, b, true, second_tol);
}

inline cplx F_Q(cplx xi, const TriangleSignature& s, double tol = kDefaultTol) {
  if (near_branch_point(xi)) throw branch_point_error("F_Q is evaluated away from the branch points 0 and 1");
  if (xi.imag() >= 0.0) return sc_integral(xi, s, tol);
  return std::conj(sc_integral(std::conj(xi), s, tol));
}

// F_Q by direct integration from 1/2 on the principal branch, in either
// half-plane; no conjugation is used.
inline cplx sc_integral_from_half(cplx xi, const TriangleSignature& s, double tol = kDefaultTol) {
  detail::check_tol(tol);
  if (xi.imag() == 0.0) throw usage_error("sc_integral_from_half needs xi off the real axis");
  cplx base = sc_integral(0.5, s, tol);
  return base + detail::segment(0.5, xi, alpha_of(s), beta_of(s), xi.imag() > 0.0, tol * (1.0 + std::abs(base)));
}

// Integral of dF_Q along the segment [p, q]; the segment may not cross
// the cuts (-inf,0] or [1,inf).
inline cplx sc_increment(cplx p, cplx q, const TriangleSignature& s, double tol = 1e-13) {
  if (near_branch_point(p) || near_branch_point(q)) throw branch_point_error("segment endpoint is a branch point");
  if ((p.imag() > 0) != (q.imag() > 0) && p.imag() != q.imag()) {
    double t = p.imag() / (p.imag() - q.imag());
    double x = p.real() + t * (q.real() - p.real());
    if (x <= 0.0 || x >= 1.0) throw usage_error("segment crosses a branch cut");
  }
  bool upper = p.imag() > 0.0 || (p.imag() == 0.0 && q.imag() >= 0.0);
  return detail::segment(p, q, alpha_of(s), beta_of(s), upper, tol);
}

struct TriangleImage {
  cplx O{0.0}, C, D;
  cplx D_probe;  // F_T(infinity) by an independent compactified quadrature
  std::array<RationalAngle, 3> angles;
};

inline TriangleImage triangle_image(const TriangleSignature& s, double tol = kDefaultTol) {
  detail::check_tol(tol);
  const double pi = std::numbers::pi;
  TriangleImage t;
  t.C = sc_integral(1.0, s, tol);
  t.D = unit(pi * s.n0 / s.n) * (std::sin(pi * s.n1 / s.n) / std::sin(pi * s.n_inf / s.n)) * t.C;
  // Along the negative axis with x = t/(1-t): D = e^{i pi a} * Beta(a, c).
  double c = double(s.n_inf) / s.n;
  t.D_probe = unit(pi * s.n0 / s.n) * detail::beta_quad(alpha_of(s), c, tol);
  t.angles = {rational_angle(s.n0, s.n), rational_angle(s.n1, s.n), rational_angle(s.n_inf, s.n)};
  return t;
}

struct QuadImage {
  cplx O, D, C, Dbar;
  std::array<RationalAngle, 4> angles;  // at O, D, C, Dbar
};

inline QuadImage quad_image(const TriangleImage& t, const TriangleSignature& s) {
  return {t.O, t.D, t.C, std::conj(t.D),
          {rational_angle(2 * s.n0, s.n), rational_angle(s.n_inf, s.n), rational_angle(2 * s.n1, s.n),
           rational_angle(s.n_inf, s.n)}};
}

// Interior angles of the image triangle measured from sampled boundary images.
inline std::array<double, 3> measured_angles(const TriangleSignature& s, double tol = kDefaultTol) {
  cplx C = sc_integral(1.0, s, tol);
  cplx on_OC = sc_integral(0.5, s, tol);
  cplx on_OD = sc_integral(-0.5, s, tol);
  cplx on_OD_far = sc_integral(-50.0, s, tol);
  cplx on_CD = sc_integral(2.0, s, tol);
  cplx on_CD_far = sc_integral(50.0, s, tol);
  auto between = [](cplx u, cplx v) { return std::abs(std::arg(v / u)); };
  // Lines OD and CD meet at D; recover it from the four sampled points.
  auto cross = [](cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); };
  cplx d1 = on_OD_far - on_OD, d2 = on_CD_far - on_CD;
  double tpar = cross(on_CD - on_OD, d2) / cross(d1, d2);
  cplx D = on_OD + tpar * d1;
  return {between(on_OC, on_OD), between(on_OC - C, on_CD - C), between(on_OD - D, on_CD - D)};
}

inline cplx developing_map(const SurfacePoint& p, const TriangleSignature& s, double tol = kDefaultTol) {
  return omega(p.sheet, s.n) * F_Q(p.xi, s, tol);
}

// Centered finite difference of delta along X: (delta(xi+h eta) - delta(xi-h eta))/(2h).
// The increment is integrated directly over the short segment.
inline cplx straightening_quotient(const SurfacePoint& p, const TriangleSignature& s, double h) {
  if (!(h > 0.0)) throw numeric_error("step must be positive");
  cplx step = h * p.eta;
  if (p.xi + step == p.xi) throw numeric_error("step underflow");
  if (std::abs(p.xi) < 10 * std::abs(step) || std::abs(p.xi - 1.0) < 10 * std::abs(step))
    throw usage_error("point too close to a branch point for this step");
  cplx incr = sc_increment(p.xi - step, p.xi + step, s);
  return omega(p.sheet, s.n) * incr / (2.0 * h);
}

inline double straightening_residual(const SurfacePoint& p, const TriangleSignature& s, double h,
                                     double tol = kDefaultTol) {
  detail::check_tol(tol);
  return std::abs(straightening_quotient(p, s, h) - 1.0);
}

// Newton inversion of F_Q near `guess`, staying in the half-plane of `guess`.
inline cplx local_inverse(cplx z, const TriangleSignature& s, cplx guess, double tol = kDefaultTol) {
  cplx xi = guess;
  for (int it = 0; it < 60; ++it) {
    cplx f = F_Q(xi, s, tol) - z;
    cplx step = f * principal_root(xi, s);
    xi -= step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(xi))) return xi;
  }
  throw numeric_error("local inverse did not converge");
}

}  // namespace scstar
