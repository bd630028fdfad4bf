#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace scstar {

// Branch indices: 0, 1 and infinity.
enum class Branch : int { zero = 0, one = 1, inf = 2 };

inline constexpr std::array<Branch, 3> all_branches{Branch::zero, Branch::one, Branch::inf};

inline const char* branch_name(Branch j) {
  switch (j) {
    case Branch::zero: return "0";
    case Branch::one: return "1";
    default: return "inf";
  }
}

struct TriangleSignature {
  int n0 = 1, n1 = 1, n_inf = 1;
  int n = 3;

  int at(Branch j) const {
    switch (j) {
      case Branch::zero: return n0;
      case Branch::one: return n1;
      default: return n_inf;
    }
  }
  friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
  friend auto operator<=>(const TriangleSignature&, const TriangleSignature&) = default;
};

inline std::string to_string(const TriangleSignature& s) {
  return "(" + std::to_string(s.n0) + "," + std::to_string(s.n1) + "," + std::to_string(s.n_inf) +
         ";" + std::to_string(s.n) + ")";
}

inline TriangleSignature make_signature(int n0, int n1, int n_inf) {
  if (n0 < 1 || n1 < 1 || n_inf < 1)
    throw usage_error("signature entries must be positive integers");
  if (!(n0 <= n1 && n1 <= n_inf))
    throw usage_error("signature must satisfy 1 <= n0 <= n1 <= n_inf, got " + std::to_string(n0) +
                      "," + std::to_string(n1) + "," + std::to_string(n_inf));
  return {n0, n1, n_inf, n0 + n1 + n_inf};
}

struct CoverProfile {
  int d0, d1, d_inf;
  int degree0, degree1, degree_inf;
  int ramification_r;
  int genus;

  int d(Branch j) const {
    return j == Branch::zero ? d0 : j == Branch::one ? d1 : d_inf;
  }
  int d_sum() const { return d0 + d1 + d_inf; }
};

inline CoverProfile cover_profile(const TriangleSignature& s) {
  CoverProfile c{};
  c.d0 = std::gcd(s.n0, s.n);
  c.d1 = std::gcd(s.n1, s.n);
  c.d_inf = std::gcd(s.n_inf, s.n);
  c.degree0 = s.n / c.d0;
  c.degree1 = s.n / c.d1;
  c.degree_inf = s.n / c.d_inf;
  c.ramification_r = (s.n - c.d0) + (s.n - c.d1) + (s.n - c.d_inf);
  int twice = s.n + 2 - c.d_sum();
  if (twice < 0 || twice % 2 != 0)
    throw consistency_error("non-integral genus for " + to_string(s));
  c.genus = twice / 2;
  return c;
}

struct GenusRow {
  TriangleSignature sig;
  CoverProfile profile;
};

// All normalized partitions n = n0+n1+n_inf with 3 <= n <= n_max,
// ordered by (genus, n, n0, n1).
inline std::vector<GenusRow> genus_table(int n_max) {
  if (n_max < 3) throw usage_error("n_max must be at least 3");
  std::vector<GenusRow> rows;
  for (int n = 3; n <= n_max; ++n)
    for (int a = 1; 3 * a <= n; ++a)
      for (int b = a; a + 2 * b <= n; ++b) {
        auto s = make_signature(a, b, n - a - b);
        rows.push_back({s, cover_profile(s)});
      }
  std::sort(rows.begin(), rows.end(), [](const GenusRow& x, const GenusRow& y) {
    return std::tie(x.profile.genus, x.sig.n, x.sig.n0, x.sig.n1) <
           std::tie(y.profile.genus, y.sig.n, y.sig.n0, y.sig.n1);
  });
  return rows;
}

// Rows of the reference low-genus table (genus 1 to 3), as (n0,n1,n_inf).
inline constexpr std::array<std::array<int, 3>, 23> kTabulatedLowGenus{{
    {1, 1, 1}, {1, 1, 2}, {1, 2, 3},
    {1, 2, 2}, {1, 1, 3}, {1, 1, 4}, {1, 3, 4}, {2, 3, 5}, {1, 4, 5},
    {2, 2, 3}, {1, 3, 3}, {1, 1, 5}, {2, 3, 3}, {1, 2, 5}, {1, 1, 6}, {2, 3, 4},
    {1, 3, 5}, {1, 2, 6}, {3, 4, 5}, {1, 5, 6}, {1, 3, 8}, {2, 5, 7}, {1, 6, 7},
}};

inline bool is_tabulated_low_genus(const TriangleSignature& s) {
  for (const auto& r : kTabulatedLowGenus)
    if (r[0] == s.n0 && r[1] == s.n1 && r[2] == s.n_inf) return true;
  return false;
}

struct ProjectivePoint {
  int x, y, z;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

struct SingularSet {
  std::vector<ProjectivePoint> affine_points;
  bool point_at_infinity_singular = false;
};

inline SingularSet singular_points(const TriangleSignature& s) {
  return {{{0, 0, 1}, {1, 0, 1}}, s.n_inf > 1};
}

}  // namespace scstar
