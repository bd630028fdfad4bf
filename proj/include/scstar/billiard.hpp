#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "errors.hpp"
#include "stargon.hpp"

namespace scstar {

inline constexpr double kProgressGuard = 1e-13;

struct BilliardState {
  cplx position;
  cplx direction;
  double time = 0.0;
};

struct Segment {
  cplx start, end;
  double length() const { return std::abs(end - start); }
};

struct Reflection {
  int edge;
  cplx point;
  cplx incoming, outgoing;
};

enum class Termination { budget, vertex_hit, center_hit };

inline const char* termination_name(Termination t) {
  switch (t) {
    case Termination::budget: return "budget exhausted";
    case Termination::vertex_hit: return "vertex hit";
    default: return "center hit";
  }
}

struct Trajectory {
  std::vector<Segment> segments;
  std::vector<Reflection> reflections;
  Termination reason = Termination::budget;
  int terminal_vertex = -1;

  double length() const {
    double L = 0.0;
    for (const auto& s : segments) L += s.length();
    return L;
  }
};

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

inline cplx edge_unit_normal(int edge, const StellatedPolygon& k) {
  cplx t = k.head(edge) - k.tail(edge);
  return cplx(0.0, 1.0) * t / std::abs(t);  // left of a counterclockwise boundary
}

inline cplx reflect_direction(cplx v, int edge, const StellatedPolygon& k) {
  cplx nhat = edge_unit_normal(edge, k);
  cplx t = k.head(edge) - k.tail(edge);
  if (std::abs(cross(t / std::abs(t), v)) < 1e-12) throw grazing_error("direction is parallel to the edge");
  return v - 2.0 * dot(v, nhat) * nhat;
}

namespace detail {

struct Hit {
  int edge = -1;
  double t = std::numeric_limits<double>::infinity();
};

// First crossing of z + t v (t > guard) with the segments [a_m, b_m].
template <class VertexAt>
Hit first_hit(cplx z, cplx v, int edges, VertexAt vertex_at, int skip, double guard) {
  Hit best;
  for (int m = 0; m < edges; ++m) {
    if (m == skip) continue;
    cplx a = vertex_at(m), b = vertex_at((m + 1) % edges);
    cplx d = b - a;
    double den = cross(v, d);
    if (den == 0.0) continue;
    double t = cross(a - z, d) / den;
    double s = cross(a - z, v) / den;
    if (t > guard && s >= -1e-12 && s <= 1.0 + 1e-12 && t < best.t) best = {m, t};
  }
  return best;
}

inline int nearest_vertex(cplx z, const StellatedPolygon& k, double eps) {
  for (int m = 0; m < k.size(); ++m)
    if (std::abs(z - k.vertices[m]) <= eps) return m;
  return -1;
}

}  // namespace detail

inline double default_eps(const StellatedPolygon& k) { return 1e-9 * k.outer_radius; }

inline Trajectory simulate(const BilliardState& start, const StellatedPolygon& k, int max_bounces,
                           double eps_vertex) {
  if (!(eps_vertex > 0.0)) throw usage_error("eps_vertex must be positive");
  if (max_bounces < 0) throw usage_error("bounce budget must be nonnegative");
  if (std::abs(std::abs(start.direction) - 1.0) > 1e-12) throw usage_error("direction must be a unit vector");
  if (std::abs(start.position) <= eps_vertex) throw usage_error("start lies at the center O");
  if (detail::nearest_vertex(start.position, k, eps_vertex) >= 0) throw usage_error("start lies on a vertex");
  if (!contains(k, start.position, eps_vertex)) throw usage_error("start lies outside the star");

  Trajectory tr;
  cplx z = start.position, v = start.direction;
  int skip = -1;
  auto vertex_at = [&](int m) { return k.vertices[m]; };
  double guard = kProgressGuard * k.outer_radius;
  for (;;) {
    auto hit = detail::first_hit(z, v, k.size(), vertex_at, skip, guard);
    if (hit.edge < 0) throw consistency_error("ray left the star without crossing an edge");
    cplx end = z + hit.t * v;
    // Passing O ends the motion at the closest approach.
    double tc = std::clamp(dot(-z, v), 0.0, hit.t);
    if (std::abs(z + tc * v) <= eps_vertex) {
      tr.segments.push_back({z, z + tc * v});
      tr.reason = Termination::center_hit;
      return tr;
    }
    tr.segments.push_back({z, end});
    int vtx = detail::nearest_vertex(end, k, eps_vertex);
    if (vtx >= 0) {
      tr.reason = Termination::vertex_hit;
      tr.terminal_vertex = vtx;
      return tr;
    }
    if (static_cast<int>(tr.reflections.size()) >= max_bounces) {
      tr.reason = Termination::budget;
      return tr;
    }
    cplx w = reflect_direction(v, hit.edge, k);
    tr.reflections.push_back({hit.edge, end, v, w});
    z = end;
    v = w;
    skip = hit.edge;
  }
}

inline Trajectory simulate(const BilliardState& start, const StellatedPolygon& k, int max_bounces) {
  return simulate(start, k, max_bounces, default_eps(k));
}

inline BilliardState act(const GroupElement& g, const BilliardState& b) {
  return {g.linear(b.position), g.linear(b.direction), b.time};
}

inline std::set<int> edge_set(const Trajectory& t) {
  std::set<int> out;
  for (const auto& r : t.reflections) out.insert(r.edge);
  return out;
}

inline std::set<int> act_on_edges(const GroupElement& g, const std::set<int>& edges) {
  std::set<int> out;
  for (int e : edges) out.insert(g.edge(e));
  return out;
}

// Smallest distance between reflection points of the two trajectories.
inline double reflection_gap(const Trajectory& a, const Trajectory& b) {
  double best = INFINITY;
  for (const auto& x : a.reflections)
    for (const auto& y : b.reflections) best = std::min(best, std::abs(x.point - y.point));
  return best;
}

inline std::pair<Trajectory, Trajectory> extended_motion(cplx z, cplx dir, const StellatedPolygon& k, int max_bounces,
                                                         double eps) {
  if (std::abs(z.imag()) <= eps) throw usage_error("z is fixed by U (real); the extended motion needs Im z != 0");
  auto U = GroupElement::U(k.n);
  auto a = simulate({z, dir}, k, max_bounces, eps);
  auto b = simulate(act(U, BilliardState{z, dir}), k, max_bounces, eps);
  bool same = a.reason == b.reason && a.segments.size() == b.segments.size() &&
              a.reflections.size() == b.reflections.size();
  double tol = 1e-9 * k.outer_radius;
  for (std::size_t i = 0; same && i < a.segments.size(); ++i)
    same = std::abs(U.linear(a.segments[i].start) - b.segments[i].start) <= tol &&
           std::abs(U.linear(a.segments[i].end) - b.segments[i].end) <= tol;
  for (std::size_t i = 0; same && i < a.reflections.size(); ++i)
    same = U.edge(a.reflections[i].edge) == b.reflections[i].edge;
  if (!same) throw consistency_error("conjugate motion is not the U-image of the motion");
  return {a, b};
}

struct UnfoldedRay {
  cplx origin, direction;
  std::vector<AffineElement> frames;  // frame i places copy i; its inverse folds back
  std::vector<Segment> pieces;        // unfolded sub-segments
  std::vector<double> lengths;
  double total_length() const {
    double L = 0.0;
    for (double x : lengths) L += x;
    return L;
  }
};

inline UnfoldedRay unfold(const Trajectory& tr, const StellatedPolygon& k, const TriangleSignature& s) {
  if (tr.reason != Termination::budget) throw usage_error("only trajectories without a terminal hit can be unfolded");
  if (tr.segments.empty()) throw usage_error("empty trajectory");
  const double R = k.outer_radius, tol = 1e-8 * std::max(1.0, R);
  UnfoldedRay ray;
  ray.origin = tr.segments.front().start;
  ray.direction = (tr.segments.front().end - tr.segments.front().start) / tr.segments.front().length();
  auto frame = AffineElement::identity(s.n);
  for (std::size_t i = 0; i < tr.segments.size(); ++i) {
    const auto& seg = tr.segments[i];
    Segment piece{apply(frame, seg.start, s, R), apply(frame, seg.end, s, R)};
    if (i > 0 && std::abs(piece.start - ray.pieces.back().end) > tol)
      throw consistency_error("unfolded pieces do not join");
    if (seg.length() > 0 && std::abs((piece.end - piece.start) / seg.length() - ray.direction) > tol)
      throw consistency_error("unfolded piece leaves the line");
    ray.frames.push_back(frame);
    ray.pieces.push_back(piece);
    ray.lengths.push_back(seg.length());
    if (i < tr.reflections.size())
      frame = frame * line_reflection(edge_line_index(tr.reflections[i].edge, k.n), s);
  }
  return ray;
}

// Walks the straight ray through successive plane copies of the star and
// maps each crossing back by the inverse frame.
inline Trajectory fold(const UnfoldedRay& ray, const StellatedPolygon& k, const TriangleSignature& s, double eps) {
  const double R = k.outer_radius;
  const int N = k.size();
  double remaining = ray.total_length();
  cplx d = ray.direction / std::abs(ray.direction);
  cplx pt = ray.origin;
  auto frame = AffineElement::identity(s.n);
  int skip = -1;
  Trajectory tr;
  for (std::size_t step = 0;; ++step) {
    if (step < ray.frames.size() && !(ray.frames[step] == frame))
      throw consistency_error("fold frame differs from the unfolding frame");
    std::vector<cplx> copy(N);
    for (int m = 0; m < N; ++m) copy[m] = apply(frame, k.vertices[m], s, R);
    cplx center = apply(frame, 0.0, s, R);
    auto inv = inverse(frame);
    auto hit = detail::first_hit(pt, d, N, [&](int m) { return copy[m]; }, skip, kProgressGuard * R);
    double reach = hit.edge < 0 ? remaining : std::min(hit.t, remaining);
    double tc = std::clamp(dot(center - pt, d), 0.0, reach);
    if (std::abs(pt + tc * d - center) <= eps) throw fold_error("ray passes through the center of a copy");
    bool last = hit.edge < 0 || hit.t >= remaining - 1e-9 * R;
    cplx end = pt + (last ? remaining : hit.t) * d;
    for (int m = 0; m < N; ++m)
      if (std::abs(end - copy[m]) <= eps) throw fold_error("ray meets a vertex of a copy");
    tr.segments.push_back({apply(inv, pt, s, R), apply(inv, end, s, R)});
    if (last) {
      tr.reason = Termination::budget;
      return tr;
    }
    auto next = frame * line_reflection(edge_line_index(hit.edge, k.n), s);
    tr.reflections.push_back({hit.edge, apply(inv, end, s, R), inv.g.linear(d), inverse(next).g.linear(d)});
    frame = next;
    remaining -= hit.t;
    pt = end;
    skip = hit.edge;
  }
}

inline Trajectory fold(const UnfoldedRay& ray, const StellatedPolygon& k, const TriangleSignature& s) {
  return fold(ray, k, s, default_eps(k));
}

}  // namespace scstar
