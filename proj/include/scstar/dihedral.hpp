#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "errors.hpp"
#include "rootsheet.hpp"
#include "signature.hpp"

namespace scstar {

inline int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

// R^p U^ell with R the rotation by 2 pi/n and U complex conjugation.
struct GroupElement {
  int n = 3;
  int p = 0;
  int ell = 0;

  static GroupElement identity(int n) { return {n, 0, 0}; }
  static GroupElement R(int n, long k = 1) { return {n, mod(k, n), 0}; }
  static GroupElement U(int n) { return {n, 0, 1}; }
  static GroupElement make(int n, long p, int ell) { return {n, mod(p, n), ell & 1}; }

  bool is_identity() const { return p == 0 && ell == 0; }
  bool is_reflection() const { return ell == 1; }

  // Index maps on the 2n vertices, 2n edges and 2n u-vectors.
  int vertex(long m) const { return ell ? mod(2L * p - m, 2L * n) : mod(m + 2L * p, 2L * n); }
  int edge(long m) const { return ell ? mod(2L * p - m - 1, 2L * n) : mod(m + 2L * p, 2L * n); }
  int u_index(long m) const { return ell ? mod(1 - m + 2L * p, 2L * n) : mod(m + 2L * p, 2L * n); }

  cplx linear(cplx z) const { return omega(p, n) * (ell ? std::conj(z) : z); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.n != b.n) throw usage_error("group elements of different order");
  return GroupElement::make(a.n, long(a.p) + (a.ell ? -long(b.p) : long(b.p)), a.ell ^ b.ell);
}

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return compose(a, b); }

inline GroupElement inverse(const GroupElement& g) {
  return g.ell ? g : GroupElement::make(g.n, -long(g.p), 0);
}

inline std::vector<GroupElement> all_elements(int n) {
  std::vector<GroupElement> out;
  for (int ell = 0; ell < 2; ++ell)
    for (int p = 0; p < n; ++p) out.push_back({n, p, ell});
  return out;
}

// Closure of a generating set under composition.
inline std::set<GroupElement> generated_subgroup(const std::vector<GroupElement>& gens, int n) {
  std::set<GroupElement> group{GroupElement::identity(n)};
  std::vector<GroupElement> frontier{GroupElement::identity(n)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x * g;
        if (group.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return group;
}

// S^(j)_k = R^{2k+n_j} U, the reflection in the ray R^k l^j.
inline GroupElement reflection_S(Branch j, long k, const TriangleSignature& s) {
  return GroupElement::make(s.n, 2 * k + s.at(j), 1);
}

inline std::vector<GroupElement> reflections_of_branch(Branch j, const TriangleSignature& s) {
  std::vector<GroupElement> out;
  for (int k = 0; k < s.n; ++k) out.push_back(reflection_S(j, k, s));
  return out;
}

// r with by * S^(j)_k * by^{-1} = S^(j)_r.
inline int conjugate_index(Branch j, int k, const GroupElement& by, const TriangleSignature& s) {
  int r = by.ell ? mod(long(by.p) - k - s.at(j), s.n) : mod(long(k) + by.p, s.n);
  auto lhs = by * reflection_S(j, k, s) * inverse(by);
  if (!(lhs == reflection_S(j, r, s))) throw consistency_error("conjugation index mismatch");
  return r;
}

// u_{2j} and u_{2j+1}: feet of the perpendiculars from O to the edge lines.
inline cplx u_vector(long index, const TriangleSignature& s, double C_magnitude) {
  const double pi = std::numbers::pi;
  const int n = s.n;
  int m = mod(index, 2L * n);
  double len = C_magnitude * std::sin(pi * s.n1 / n);
  double phase = (m % 2 == 0) ? 0.5 - double(s.n1) / n + double(m) / n
                              : -0.5 + double(s.n1) / n - 1.0 / n + double(m) / n;
  return std::polar(len, phase * pi);
}

// Integer coefficients over the 2n generators 2u_j.
using TranslationVector = std::vector<long>;

struct AffineElement {
  GroupElement g;
  TranslationVector t;

  static AffineElement identity(int n) { return {GroupElement::identity(n), TranslationVector(2 * n, 0)}; }
  static AffineElement linear(const GroupElement& g) { return {g, TranslationVector(2 * g.n, 0)}; }
  static AffineElement translation(int n, int j, long times = 1) {
    auto a = identity(n);
    a.t[mod(j, 2L * n)] = times;
    return a;
  }
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

inline TranslationVector act(const GroupElement& g, const TranslationVector& t) {
  TranslationVector out(t.size(), 0);
  for (std::size_t j = 0; j < t.size(); ++j) out[g.u_index(long(j))] += t[j];
  return out;
}

inline AffineElement affine_mul(const AffineElement& a, const AffineElement& b) {
  auto moved = act(a.g, b.t);
  for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += a.t[j];
  return {a.g * b.g, moved};
}

inline AffineElement operator*(const AffineElement& a, const AffineElement& b) { return affine_mul(a, b); }

inline AffineElement inverse(const AffineElement& a) {
  auto gi = inverse(a.g);
  auto t = act(gi, a.t);
  for (auto& c : t) c = -c;
  return {gi, t};
}

inline cplx translation_value(const TranslationVector& t, const TriangleSignature& s, double C_magnitude) {
  cplx z = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] != 0) z += 2.0 * double(t[j]) * u_vector(long(j), s, C_magnitude);
  return z;
}

inline cplx apply(const AffineElement& a, cplx z, const TriangleSignature& s, double C_magnitude) {
  return a.g.linear(z) + translation_value(a.t, s, C_magnitude);
}

// Reflection in the edge line through u_k: z -> -uhat^2 conj(z) + 2u_k.
inline AffineElement line_reflection(int k, const TriangleSignature& s) {
  const int n = s.n;
  int m = mod(k, 2L * n);
  long half = m / 2;
  GroupElement g = (m % 2 == 0) ? GroupElement::make(n, 2 * half - s.n1, 1)
                                : GroupElement::make(n, 2 * half + s.n1, 1);
  return {g, AffineElement::translation(n, m).t};
}

}  // namespace scstar
