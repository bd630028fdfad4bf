#include <gtest/gtest.h>

#include "scstar/verify.hpp"

using namespace scstar;

namespace {
const PropertyResult* find(const Report& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return &e;
  return nullptr;
}
}  // namespace

TEST(Verify, HexagonReportPasses) {
  auto r = verify_signature(make_signature(1, 1, 4));
  EXPECT_TRUE(r.ok());
  for (const auto& e : r.entries) EXPECT_NE(e.status, Status::fail) << e.name << ": " << e.detail;
  for (const char* name : {"hexagon_orbits_ade_bcf", "hexagon_vertex_classes", "dual_genus", "riemann_hurwitz",
                           "fold_unfold_identity", "extended_motion_u_exchange"}) {
    auto e = find(r, name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_EQ(e->status, Status::pass) << name;
  }
}

TEST(Verify, OrbitComparisonIsEmittedForEachBranch) {
  auto r = verify_signature(make_signature(1, 1, 4));
  for (const char* j : {"0", "1", "inf"}) {
    auto e = find(r, std::string("orbit_closed_form[j=") + j + "]");
    ASSERT_NE(e, nullptr);
    EXPECT_NE(e->status, Status::fail);
    EXPECT_FALSE(e->detail.empty());
    auto p = find(r, std::string("orbit_partition[j=") + j + "]");
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->status, Status::pass);
  }
}

TEST(Verify, SeededReportsAreIdentical) {
  VerifyOptions opt;
  opt.seed = 77;
  auto a = verify_signature(make_signature(2, 3, 5), opt), b = verify_signature(make_signature(2, 3, 5), opt);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].name, b.entries[i].name);
    EXPECT_EQ(a.entries[i].detail, b.entries[i].detail);
  }
}

TEST(Verify, AllSignaturesUpToTen) {
  auto r = verify_all(10);
  EXPECT_TRUE(r.ok());
  for (const auto& e : r.entries) EXPECT_NE(e.status, Status::fail) << e.signature << " " << e.name << ": " << e.detail;
  EXPECT_THROW(verify_all(2), usage_error);
}
