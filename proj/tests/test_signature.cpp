#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "scstar/signature.hpp"

using namespace scstar;

TEST(Signature, NormalizationRejectsUnordered) {
  EXPECT_THROW(make_signature(2, 1, 1), usage_error);
  EXPECT_THROW(make_signature(1, 3, 2), usage_error);
  EXPECT_THROW(make_signature(0, 1, 2), usage_error);
  try {
    make_signature(4, 1, 1);
    FAIL();
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("1 <= n0 <= n1 <= n_inf"), std::string::npos);
  }
  auto s = make_signature(1, 1, 4);
  EXPECT_EQ(s.n, 6);
  EXPECT_EQ(to_string(s), "(1,1,4;6)");
}

TEST(Signature, WorkedGenusExamples) {
  EXPECT_EQ(cover_profile(make_signature(1, 1, 1)).genus, 1);
  EXPECT_EQ(cover_profile(make_signature(1, 1, 4)).genus, 2);
  EXPECT_EQ(cover_profile(make_signature(1, 2, 3)).genus, 1);
  EXPECT_EQ(cover_profile(make_signature(2, 2, 3)).genus, 3);
}

TEST(Signature, HexagonProfile) {
  auto c = cover_profile(make_signature(1, 1, 4));
  EXPECT_EQ(c.d0, 1);
  EXPECT_EQ(c.d1, 1);
  EXPECT_EQ(c.d_inf, 2);
  EXPECT_EQ(c.degree_inf, 3);
  EXPECT_EQ(c.ramification_r, 5 + 5 + 4);
}

TEST(Signature, ProfileAgainstIndependentGcd) {
  for (int n = 3; n <= 40; ++n)
    for (int a = 1; 3 * a <= n; ++a)
      for (int b = a; a + 2 * b <= n; ++b) {
        int c = n - a - b;
        auto p = cover_profile(make_signature(a, b, c));
        int d0 = oracle::gcd(a, n), d1 = oracle::gcd(b, n), d2 = oracle::gcd(c, n);
        ASSERT_EQ(p.d0, d0);
        ASSERT_EQ(p.d1, d1);
        ASSERT_EQ(p.d_inf, d2);
        ASSERT_EQ(2 * p.genus, n + 2 - d0 - d1 - d2);
        // Riemann-Hurwitz for a degree-n cover of the sphere.
        ASSERT_EQ(p.ramification_r, 2 * n + 2 * p.genus - 2);
      }
}

TEST(Signature, PrimeOrderGivesHalfNMinusOne) {
  for (int n = 3; n <= 61; n += 2) {
    if (!oracle::is_prime(n)) continue;
    for (int a = 1; 3 * a <= n; ++a)
      for (int b = a; a + 2 * b <= n; ++b) ASSERT_EQ(cover_profile(make_signature(a, b, n - a - b)).genus, (n - 1) / 2);
  }
}

TEST(Signature, TableContainsEveryTabulatedRow) {
  auto rows = genus_table(14);
  for (const auto& e : oracle::kGenusTable) {
    bool found = false;
    for (const auto& r : rows)
      if (r.sig.n0 == e.n0 && r.sig.n1 == e.n1 && r.sig.n_inf == e.n_inf) {
        found = true;
        EXPECT_EQ(r.sig.n, e.n);
        EXPECT_EQ(r.profile.genus, e.g);
        EXPECT_TRUE(is_tabulated_low_genus(r.sig));
      }
    EXPECT_TRUE(found) << e.n0 << "," << e.n1 << "," << e.n_inf;
  }
}

TEST(Signature, UntabulatedLowGenusRowsAreExactlyTheKnownOnes) {
  std::set<std::array<int, 3>> extra;
  for (const auto& r : genus_table(14))
    if (r.profile.genus <= 3 && !is_tabulated_low_genus(r.sig)) extra.insert({r.sig.n0, r.sig.n1, r.sig.n_inf});
  std::set<std::array<int, 3>> expect;
  for (const auto& e : oracle::kUntabulated) {
    expect.insert({e.n0, e.n1, e.n_inf});
    EXPECT_EQ(cover_profile(make_signature(e.n0, e.n1, e.n_inf)).genus, e.g);
  }
  EXPECT_EQ(extra, expect);
}

TEST(Signature, TableOrderingAndBounds) {
  EXPECT_THROW(genus_table(2), usage_error);
  auto three = genus_table(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].profile.genus, 1);
  auto rows = genus_table(20);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto &x = rows[i - 1], &y = rows[i];
    EXPECT_TRUE(std::tie(x.profile.genus, x.sig.n, x.sig.n0, x.sig.n1) <
                std::tie(y.profile.genus, y.sig.n, y.sig.n0, y.sig.n1));
  }
}

TEST(Signature, SingularPoints) {
  auto a = singular_points(make_signature(1, 1, 1));
  EXPECT_EQ(a.affine_points.size(), 2u);
  EXPECT_FALSE(a.point_at_infinity_singular);
  EXPECT_TRUE(singular_points(make_signature(1, 1, 4)).point_at_infinity_singular);
  EXPECT_EQ(a.affine_points[1], (ProjectivePoint{1, 0, 1}));
}
