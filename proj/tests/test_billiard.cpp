#include <gtest/gtest.h>

#include <random>

#include "scstar/billiard.hpp"
#include "scstar/scmap.hpp"
#include "scstar/verify.hpp"

using namespace scstar;

namespace {
struct Setup {
  TriangleSignature s;
  StellatedPolygon k;
};

Setup hexagon() {
  auto s = make_signature(1, 1, 4);
  return {s, build_polygon(s, std::abs(triangle_image(s).C))};
}
}  // namespace

TEST(Billiard, HeadOnReversal) {
  auto [s, k] = hexagon();
  for (int m = 0; m < k.size(); ++m) {
    cplx nh = edge_unit_normal(m, k);
    EXPECT_LT(std::abs(reflect_direction(-nh, m, k) - nh), 1e-15);
    cplx v = unit(0.3 + m);
    if (std::abs(cross(v, k.head(m) - k.tail(m))) < 1e-6) continue;
    EXPECT_LT(std::abs(reflect_direction(reflect_direction(v, m, k), m, k) - v), 1e-15);
  }
}

TEST(Billiard, GrazingRejected) {
  auto [s, k] = hexagon();
  cplx t = k.head(0) - k.tail(0);
  EXPECT_THROW(reflect_direction(t / std::abs(t), 0, k), grazing_error);
}

TEST(Billiard, InvalidStartsRejected) {
  auto [s, k] = hexagon();
  EXPECT_THROW(simulate({0.0, 1.0}, k, 5), usage_error);
  EXPECT_THROW(simulate({k.vertices[2], 1.0}, k, 5), usage_error);
  EXPECT_THROW(simulate({2.0 * k.vertices[0], 1.0}, k, 5), usage_error);
  EXPECT_THROW(simulate({0.3 * k.vertices[0] + cplx(0, 0.1), 2.0}, k, 5), usage_error);
  EXPECT_THROW(simulate({0.3 * k.vertices[0] + cplx(0, 0.1), 1.0}, k, 5, 0.0), usage_error);
}

TEST(Billiard, ZeroBudgetIsOneSegment) {
  auto [s, k] = hexagon();
  auto tr = simulate({cplx(0.2, 0.13) * k.outer_radius, unit(0.7)}, k, 0);
  ASSERT_EQ(tr.segments.size(), 1u);
  EXPECT_TRUE(tr.reflections.empty());
  EXPECT_EQ(tr.reason, Termination::budget);
  EXPECT_LT(boundary_distance(tr.segments[0].end, k), 1e-12 * k.outer_radius);
}

TEST(Billiard, EndsAtCenterAndVertex) {
  auto [s, k] = hexagon();
  cplx z = cplx(0.3, 0.2) * k.outer_radius;
  auto toO = simulate({z, -z / std::abs(z)}, k, 10);
  EXPECT_EQ(toO.reason, Termination::center_hit);
  EXPECT_LT(std::abs(toO.segments.back().end), 1e-9 * k.outer_radius);
  cplx v = k.vertices[4] - z;
  auto toV = simulate({z, v / std::abs(v)}, k, 10);
  EXPECT_EQ(toV.reason, Termination::vertex_hit);
  EXPECT_EQ(toV.terminal_vertex, 4);
}

TEST(Billiard, SpecularAndUnitSpeed) {
  auto [s, k] = hexagon();
  Sampler smp(5);
  for (int i = 0; i < 20; ++i) {
    auto tr = sample_trajectory(smp, k, 40);
    for (const auto& r : tr.reflections) {
      cplx nh = edge_unit_normal(r.edge, k);
      EXPECT_NEAR(std::abs(r.outgoing), 1.0, 1e-13);
      EXPECT_NEAR(dot(r.incoming, nh), -dot(r.outgoing, nh), 1e-12);
      EXPECT_NEAR(cross(nh, r.incoming), cross(nh, r.outgoing), 1e-12);
      EXPECT_LT(dot(r.incoming, nh), 0.0);
    }
    for (const auto& g : tr.segments) EXPECT_TRUE(contains(k, 0.5 * (g.start + g.end)));
  }
}

TEST(Billiard, FoldUnfoldAndCollinearity) {
  for (auto s : {make_signature(1, 1, 4), make_signature(1, 2, 3), make_signature(2, 3, 5)}) {
    auto k = build_polygon(s, std::abs(triangle_image(s).C));
    Sampler smp(9);
    for (int i = 0; i < 15; ++i) {
      auto tr = sample_trajectory(smp, k, 50);
      auto ray = unfold(tr, k, s);
      EXPECT_LT(trajectory_gap(fold(ray, k, s), tr), 1e-9 * k.outer_radius);
      EXPECT_LT(collinearity_defect(ray), 1e-9 * k.outer_radius);
      EXPECT_NEAR(ray.total_length(), tr.length(), 1e-9 * k.outer_radius);
    }
  }
}

TEST(Billiard, OneBounceFrameIsEdgeReflection) {
  auto [s, k] = hexagon();
  Sampler smp(4);
  auto tr = sample_trajectory(smp, k, 1);
  auto ray = unfold(tr, k, s);
  ASSERT_EQ(ray.frames.size(), 2u);
  auto expect = line_reflection(edge_line_index(tr.reflections[0].edge, s.n), s);
  EXPECT_EQ(ray.frames[1], expect);
  // The reflecting edge is fixed pointwise by its frame.
  cplx p = tr.reflections[0].point;
  EXPECT_LT(std::abs(apply(expect, p, s, k.outer_radius) - p), 1e-9 * k.outer_radius);
}

TEST(Billiard, FoldRejectsCopyVertex) {
  auto [s, k] = hexagon();
  UnfoldedRay ray;
  ray.origin = cplx(0.2, 0.05) * k.outer_radius;
  cplx d = k.vertices[0] - ray.origin;
  ray.direction = d / std::abs(d);
  ray.lengths = {2.0 * std::abs(d)};
  ray.frames = {AffineElement::identity(s.n)};
  EXPECT_THROW(fold(ray, k, s), fold_error);
}

TEST(Billiard, RotationEquivarianceAndReversal) {
  auto [s, k] = hexagon();
  Sampler smp(21);
  auto Rg = GroupElement::R(s.n, 1);
  for (int i = 0; i < 20; ++i) {
    BilliardState st;
    auto tr = sample_trajectory(smp, k, 30, &st);
    auto rot = simulate(act(Rg, st), k, 30);
    ASSERT_EQ(rot.segments.size(), tr.segments.size());
    for (std::size_t q = 0; q < tr.segments.size(); ++q)
      EXPECT_LT(std::abs(rot.segments[q].end - Rg.linear(tr.segments[q].end)), 1e-9 * k.outer_radius);
    const auto& last = tr.segments.back();
    BilliardState back{0.5 * (last.start + last.end), -(last.end - last.start) / last.length()};
    auto rev = simulate(back, k, 30);
    std::size_t m = tr.reflections.size();
    ASSERT_GE(rev.reflections.size(), m);
    for (std::size_t q = 0; q < m; ++q)
      EXPECT_LT(std::abs(rev.reflections[q].point - tr.reflections[m - 1 - q].point), 1e-9 * k.outer_radius);
  }
}

TEST(Billiard, ExtendedMotion) {
  auto [s, k] = hexagon();
  EXPECT_THROW(extended_motion(0.3 * k.outer_radius, 1.0, k, 5, default_eps(k)), usage_error);
  Sampler smp(8);
  auto U = GroupElement::U(s.n);
  for (int i = 0; i < 20; ++i) {
    cplx z = smp.interior_point(k);
    if (std::abs(z.imag()) < 1e-6 * k.outer_radius) continue;
    auto [a, b] = extended_motion(z, smp.direction(), k, 30, default_eps(k));
    EXPECT_EQ(edge_set(b), act_on_edges(U, edge_set(a)));
    EXPECT_GT(reflection_gap(a, b), 1e-9 * k.outer_radius);
  }
}

// A direction parallel to an edge keeps hitting edges transversally.
TEST(Billiard, EdgeParallelFamilyLongRun) {
  auto [s, k] = hexagon();
  cplx t = k.head(0) - k.tail(0);
  auto tr = simulate({cplx(0.21, 0.077) * k.outer_radius, t / std::abs(t)}, k, 10000);
  EXPECT_EQ(tr.reason, Termination::budget);
  EXPECT_EQ(tr.reflections.size(), 10000u);
}
