#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "errors.hpp"
#include "signature.hpp"

namespace scstar {

struct StellatedPolygon {
  int n = 3;
  double outer_radius = 1.0;
  double inner_radius = 1.0;
  std::vector<cplx> vertices;             // V_0 .. V_{2n-1}
  std::vector<std::pair<int, int>> edges;  // edge m = (m, m+1 mod 2n)

  int size() const { return 2 * n; }
  cplx tail(int m) const { return vertices[edges[m].first]; }
  cplx head(int m) const { return vertices[edges[m].second]; }
};

inline StellatedPolygon build_polygon(const TriangleSignature& s, double C_magnitude) {
  const double pi = std::numbers::pi;
  if (!(C_magnitude > 0.0)) throw usage_error("C magnitude must be positive");
  if (s.n1 + 1 >= s.n) throw geometry_error("degenerate triangle T' for " + to_string(s));
  StellatedPolygon k;
  k.n = s.n;
  k.outer_radius = C_magnitude;
  k.inner_radius = C_magnitude * std::sin(pi * s.n1 / s.n) / std::sin(pi * (s.n1 + 1) / s.n);
  if (k.inner_radius > C_magnitude * (1.0 + 1e-12))
    throw geometry_error("inner radius exceeds outer radius for " + to_string(s));
  for (int m = 0; m < 2 * s.n; ++m) {
    double r = m % 2 == 0 ? k.outer_radius : k.inner_radius;
    k.vertices.push_back(std::polar(r, m * pi / s.n));
    k.edges.emplace_back(m, (m + 1) % (2 * s.n));
  }
  return k;
}

// Index of the u-vector whose line carries edge m.
inline int edge_line_index(int m, int n) { return m % 2 == 0 ? m : mod(m + 2, 2L * n); }

inline cplx inward_normal(int m, const StellatedPolygon& k, const TriangleSignature& s) {
  cplx u = u_vector(edge_line_index(m, k.n), s, 1.0);
  return -u / std::abs(u);
}

inline bool adjacent_edges(int a, int b, int n) {
  if (a == b) return false;
  int N = 2 * n;
  return mod(a + 1, N) == b || mod(b + 1, N) == a;
}

struct EdgePair {
  int e = 0, e_prime = 0;  // e < e_prime
  Branch j = Branch::zero;
  int m = 0;  // witness S^(j)_m
  GroupElement witness;

  std::pair<int, int> key() const { return {e, e_prime}; }
};

inline std::pair<int, int> unordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// e^j_k: the nearest nonadjacent edges on either side of the vertex
// V_{2k+n_j} lying on the mirror ray of S^(j)_k.
inline std::vector<EdgePair> edge_pairs(const TriangleSignature& s, Branch j) {
  const int n = s.n, N = 2 * n;
  std::vector<EdgePair> out;
  for (int k = 0; k < n; ++k) {
    int apex = mod(2L * k + s.at(j), N);
    int a = mod(apex - 2, N), b = mod(apex + 1, N);
    auto S = reflection_S(j, k, s);
    if (S.edge(a) != b || adjacent_edges(a, b, n))
      throw consistency_error("edge pair construction failed");
    auto [lo, hi] = unordered(a, b);
    out.push_back({lo, hi, j, k, S});
  }
  return out;
}

// Every nonadjacent pair [E, S^(j)_m(E)], deduplicated.
inline std::vector<std::pair<int, int>> reflection_pairs_all(const TriangleSignature& s, Branch j) {
  std::set<std::pair<int, int>> seen;
  for (int m = 0; m < s.n; ++m) {
    auto S = reflection_S(j, m, s);
    for (int e = 0; e < 2 * s.n; ++e) {
      int f = S.edge(e);
      if (f != e && !adjacent_edges(e, f, s.n)) seen.insert(unordered(e, f));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::pair<int, int> act_on_pair(const GroupElement& g, std::pair<int, int> pr) {
  return unordered(g.edge(pr.first), g.edge(pr.second));
}

using EdgeOrbit = std::vector<EdgePair>;

// Partition of E^j into orbits of G^j, by closure under the generators.
inline std::vector<EdgeOrbit> orbit_decomposition(const TriangleSignature& s, Branch j) {
  auto pairs = edge_pairs(s, j);
  std::map<std::pair<int, int>, std::size_t> where;
  for (std::size_t i = 0; i < pairs.size(); ++i) where[pairs[i].key()] = i;
  auto gens = reflections_of_branch(j, s);
  std::vector<bool> done(pairs.size(), false);
  std::vector<EdgeOrbit> orbits;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> stack{i};
    done[i] = true;
    EdgeOrbit orbit;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      orbit.push_back(pairs[cur]);
      for (const auto& g : gens) {
        auto it = where.find(act_on_pair(g, pairs[cur].key()));
        if (it == where.end()) throw consistency_error("E^j is not closed under G^j");
        if (!done[it->second]) {
          done[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(), [](const EdgePair& x, const EdgePair& y) { return x.key() < y.key(); });
    orbits.push_back(orbit);
  }
  return orbits;
}

// Elements of G^j fixing the pair e^j_k.
inline std::vector<GroupElement> isotropy(const TriangleSignature& s, Branch j, int k) {
  auto pr = edge_pairs(s, j).at(k).key();
  auto group = generated_subgroup(reflections_of_branch(j, s), s.n);
  std::vector<GroupElement> out;
  for (const auto& g : group)
    if (act_on_pair(g, pr) == pr) out.push_back(g);
  return out;
}

struct VertexClass {
  Branch j = Branch::zero;
  std::vector<int> vertices;  // sorted vertex indices
};

// Corners of sheet k over branch j are carried by the apex V_{2k+n_j};
// classes are orbits of the rotation part R^{n_j} of S^(j).
inline std::vector<VertexClass> vertex_orbits(const TriangleSignature& s, Branch j) {
  const int N = 2 * s.n;
  auto step = GroupElement::R(s.n, s.at(j));
  std::set<int> apexes;
  for (int k = 0; k < s.n; ++k) apexes.insert(mod(2L * k + s.at(j), N));
  std::set<int> seen;
  std::vector<VertexClass> out;
  for (int a : apexes) {
    if (seen.count(a)) continue;
    VertexClass c{j, {}};
    int v = a;
    while (seen.insert(v).second) {
      c.vertices.push_back(v);
      v = step.vertex(v);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(c);
  }
  return out;
}

inline std::vector<VertexClass> all_vertex_classes(const TriangleSignature& s) {
  std::vector<VertexClass> out;
  for (auto j : all_branches) {
    auto part = vertex_orbits(s, j);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

struct TriangulationCount {
  int vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  int genus = 0;
};

inline TriangulationCount triangulation_counts(const TriangleSignature& s) {
  TriangulationCount t;
  t.vertices = static_cast<int>(all_vertex_classes(s).size());
  if (t.vertices != cover_profile(s).d_sum())
    throw consistency_error("vertex classes disagree with d0+d1+d_inf for " + to_string(s));
  // Spokes OC_k and OD'_k, plus one edge per identified boundary pair.
  t.edges = 2 * s.n + static_cast<int>(edge_pairs(s, Branch::zero).size());
  t.faces = 2 * s.n;
  t.euler = t.vertices - t.edges + t.faces;
  if ((2 - t.euler) % 2 != 0 || t.euler > 2) throw consistency_error("invalid Euler characteristic");
  t.genus = (2 - t.euler) / 2;
  return t;
}

struct OrbitFormComparison {
  TriangleSignature sig;
  Branch j = Branch::zero;
  int orbit_count = 0;
  std::vector<int> orbit_sizes;
  int predicted_count = 0;  // d_j
  int predicted_size = 0;   // n / d_j
  bool partition_ok = false;
  bool isotropy_ok = false;
  bool matches() const {
    return orbit_count == predicted_count &&
           std::all_of(orbit_sizes.begin(), orbit_sizes.end(), [&](int z) { return z == predicted_size; });
  }
};

inline OrbitFormComparison orbit_form_comparison(const TriangleSignature& s, Branch j) {
  OrbitFormComparison c;
  c.sig = s;
  c.j = j;
  auto orbits = orbit_decomposition(s, j);
  auto pairs = edge_pairs(s, j);
  c.orbit_count = static_cast<int>(orbits.size());
  std::set<std::pair<int, int>> covered;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    c.orbit_sizes.push_back(static_cast<int>(o.size()));
    for (const auto& p : o) covered.insert(p.key());
    total += o.size();
  }
  c.partition_ok = covered.size() == pairs.size() && total == pairs.size();
  c.predicted_count = cover_profile(s).d(j);
  c.predicted_size = s.n / c.predicted_count;
  c.isotropy_ok = true;
  for (int k = 0; k < s.n; ++k) {
    auto iso = isotropy(s, j, k);
    std::set<GroupElement> expect{GroupElement::identity(s.n), reflection_S(j, k, s)};
    if (std::set<GroupElement>(iso.begin(), iso.end()) != expect) c.isotropy_ok = false;
  }
  return c;
}

// Winding-number containment for the closed star, with a boundary tolerance.
inline double distance_to_segment(cplx z, cplx a, cplx b) {
  cplx d = b - a;
  double t = std::clamp(((z - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

inline double boundary_distance(cplx z, const StellatedPolygon& k) {
  double best = INFINITY;
  for (int m = 0; m < k.size(); ++m) best = std::min(best, distance_to_segment(z, k.tail(m), k.head(m)));
  return best;
}

inline bool contains(const StellatedPolygon& k, cplx z, double tol = 0.0) {
  if (tol > 0.0 && boundary_distance(z, k) <= tol) return true;
  int wind = 0;
  for (int m = 0; m < k.size(); ++m) {
    cplx a = k.tail(m), b = k.head(m);
    double side = (std::conj(b - a) * (z - a)).imag();  // >0: z left of a->b
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && side > 0) ++wind;
    } else if (b.imag() <= z.imag() && side < 0) {
      --wind;
    }
  }
  return wind != 0;
}

}  // namespace scstar
