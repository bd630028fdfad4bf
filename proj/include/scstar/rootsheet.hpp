#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "signature.hpp"

namespace scstar {

using cplx = std::complex<double>;

inline constexpr double kBranchEps = 1e-13;

// Argument in (-pi, pi]; a signed zero imaginary part is read as +0.
inline double arg_pv(cplx z) {
  if (z.imag() == 0.0) return z.real() < 0.0 ? std::numbers::pi : 0.0;
  return std::arg(z);
}

inline cplx unit(double angle) { return std::polar(1.0, angle); }

// e^{2 pi i k / n}
inline cplx omega(long k, int n) {
  long r = ((k % n) + n) % n;
  return unit(2.0 * std::numbers::pi * static_cast<double>(r) / n);
}

inline cplx ipow(cplx z, int e) {
  cplx r = 1.0;
  bool inv = e < 0;
  unsigned u = static_cast<unsigned>(inv ? -e : e);
  while (u) {
    if (u & 1u) r *= z;
    z *= z;
    u >>= 1;
  }
  return inv ? 1.0 / r : r;
}

struct BranchPoint {
  cplx xi;
  double theta0, theta1;
  double r0, r1;
};

inline bool near_branch_point(cplx xi) {
  return std::abs(xi) < kBranchEps || std::abs(xi - 1.0) < kBranchEps;
}

inline BranchPoint polar_data(cplx xi) {
  if (near_branch_point(xi)) throw branch_point_error("xi is a branch point (0 or 1)");
  return {xi, arg_pv(xi), arg_pv(1.0 - xi), std::abs(xi), std::abs(1.0 - xi)};
}

// (xi^{n-n0} (1-xi)^{n-n1})^{1/n} on the sheet that is positive on (0,1).
inline cplx principal_root(cplx xi, const TriangleSignature& s) {
  auto b = polar_data(xi);
  double a0 = double(s.n - s.n0) / s.n, a1 = double(s.n - s.n1) / s.n;
  double logmod = a0 * std::log(b.r0) + a1 * std::log(b.r1);
  return std::polar(std::exp(logmod), a0 * b.theta0 + a1 * b.theta1);
}

inline cplx curve_rhs(cplx xi, const TriangleSignature& s) {
  return ipow(xi, s.n - s.n0) * ipow(1.0 - xi, s.n - s.n1);
}

struct SurfacePoint {
  cplx xi;
  cplx eta;
  int sheet = 0;
};

inline SurfacePoint surface_point(cplx xi, int sheet, const TriangleSignature& s) {
  int k = ((sheet % s.n) + s.n) % s.n;
  return {xi, omega(k, s.n) * principal_root(xi, s), k};
}

inline std::vector<SurfacePoint> fiber(cplx xi, const TriangleSignature& s) {
  cplx base = principal_root(xi, s);
  std::vector<SurfacePoint> out;
  out.reserve(s.n);
  for (int k = 0; k < s.n; ++k) out.push_back({xi, omega(k, s.n) * base, k});
  return out;
}

// Deck transformation (xi, eta) -> (xi, e^{2 pi i/n} eta).
inline SurfacePoint deck(const SurfacePoint& p, const TriangleSignature& s, int times = 1) {
  return {p.xi, omega(times, s.n) * p.eta, (((p.sheet + times) % s.n) + s.n) % s.n};
}

// |eta^n - rhs| relative to |rhs|.
inline double curve_residual(const SurfacePoint& p, const TriangleSignature& s) {
  cplx rhs = curve_rhs(p.xi, s);
  return std::abs(ipow(p.eta, s.n) - rhs) / std::max(std::abs(rhs), 1e-300);
}

struct Tangent {
  cplx dxi;
  cplx deta;
};

inline Tangent vector_field_X(const SurfacePoint& p, const TriangleSignature& s) {
  if (std::abs(p.eta) == 0.0) throw singular_point_error("eta = 0 is a singular point");
  const int n = s.n;
  double c = double(n - s.n0) / n;
  double kappa = double(2 * n - s.n0 - s.n1) / (n - s.n0);
  cplx num = c * ipow(p.xi, n - s.n0 - 1) * ipow(1.0 - p.xi, n - s.n1 - 1) * (1.0 - kappa * p.xi);
  return {p.eta, num / ipow(p.eta, n - 2)};
}

// (X contracted with dg) for g = eta^n - xi^{n-n0}(1-xi)^{n-n1}.
inline cplx contract_dg(const SurfacePoint& p, const Tangent& v, const TriangleSignature& s) {
  const int n = s.n;
  cplx dP = ipow(p.xi, n - s.n0 - 1) * ipow(1.0 - p.xi, n - s.n1 - 1) *
            (double(n - s.n0) - double(2 * n - s.n0 - s.n1) * p.xi);
  return double(n) * ipow(p.eta, n - 1) * v.deta - dP * v.dxi;
}

inline double metric_gamma_norm(const SurfacePoint& p, const Tangent& v) {
  if (std::abs(p.eta) == 0.0) throw singular_point_error("eta = 0 is a singular point");
  return std::norm(v.dxi) / std::norm(p.eta);
}

}  // namespace scstar
