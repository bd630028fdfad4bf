#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"

namespace scstar::quad {

// 15-point Kronrod extension of 7-point Gauss.
inline constexpr std::array<double, 8> xgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Result {
  std::complex<double> value;
  double error;
  int intervals;
};

namespace detail {
struct Piece {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece gk15(F& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> fc = f(c);
  std::complex<double> k = fc * wgk[7], g = fc * wg[3];
  for (int i = 0; i < 7; ++i) {
    double dx = h * xgk[i];
    std::complex<double> s = f(c - dx) + f(c + dx);
    k += wgk[i] * s;
    if (i % 2 == 1) g += wg[i / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}
}  // namespace detail

// Globally adaptive bisection of [a,b] until the summed error estimate
// is below abs_tol + rel_tol*|I|.
template <class F>
Result integrate(F f, double a, double b, double abs_tol, double rel_tol = 0.0,
                 int max_intervals = 4000) {
  std::priority_queue<detail::Piece> heap;
  auto first = detail::gk15(f, a, b);
  std::complex<double> total = first.value;
  double err = first.error;
  heap.push(first);
  int count = 1;
  while (err > abs_tol + rel_tol * std::abs(total)) {
    if (count >= max_intervals)
      throw numeric_error("quadrature did not converge, error estimate " + std::to_string(err), err);
    auto worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw numeric_error("quadrature interval underflow, error estimate " + std::to_string(err), err);
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Recompute the sum to shed drift from incremental updates.
  std::complex<double> sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  return {sum, esum, count};
}

}  // namespace scstar::quad
