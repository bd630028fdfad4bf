#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "scstar/billiard.hpp"
#include "scstar/scmap.hpp"
#include "scstar/signature.hpp"
#include "scstar/stargon.hpp"
#include "scstar/verify.hpp"

namespace scstar::io {

using nlohmann::ordered_json;

inline ordered_json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }
inline ordered_json to_json(const RationalAngle& a) { return {{"num", a.num}, {"den", a.den}}; }

inline ordered_json to_json(const TriangleSignature& s) {
  return {{"n0", s.n0}, {"n1", s.n1}, {"n_inf", s.n_inf}, {"n", s.n}};
}

inline ordered_json to_json(const GroupElement& g) { return {{"p", g.p}, {"ell", g.ell}}; }

inline ordered_json to_json(const AffineElement& a) { return {{"g", to_json(a.g)}, {"t", a.t}}; }

inline ordered_json to_json(const TriangulationCount& t) {
  return {{"vertices", t.vertices}, {"edges", t.edges}, {"faces", t.faces}, {"euler", t.euler}, {"genus", t.genus}};
}

inline ordered_json genus_json(const TriangleSignature& s) {
  auto c = cover_profile(s);
  auto sing = singular_points(s);
  ordered_json pts = ordered_json::array();
  for (const auto& p : sing.affine_points) pts.push_back({p.x, p.y, p.z});
  return {{"signature", to_json(s)},
          {"d", {c.d0, c.d1, c.d_inf}},
          {"degrees", {c.degree0, c.degree1, c.degree_inf}},
          {"ramification_r", c.ramification_r},
          {"genus", c.genus},
          {"singular", {{"affine_points", pts}, {"point_at_infinity_singular", sing.point_at_infinity_singular}}},
          {"triangulation", to_json(triangulation_counts(s))}};
}

inline std::string genus_csv_header() { return "n0,n1,n_inf,n,d0,d1,d_inf,genus\n"; }

inline std::string genus_csv_row(const TriangleSignature& s, const CoverProfile& c) {
  std::ostringstream os;
  os << s.n0 << ',' << s.n1 << ',' << s.n_inf << ',' << s.n << ',' << c.d0 << ',' << c.d1 << ',' << c.d_inf << ','
     << c.genus << '\n';
  return os.str();
}

inline ordered_json table_json(const std::vector<GenusRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"n0", r.sig.n0},
                   {"n1", r.sig.n1},
                   {"n_inf", r.sig.n_inf},
                   {"n", r.sig.n},
                   {"d0", r.profile.d0},
                   {"d1", r.profile.d1},
                   {"d_inf", r.profile.d_inf},
                   {"genus", r.profile.genus},
                   {"tabulated", is_tabulated_low_genus(r.sig)}});
  return {{"rows", arr}};
}

inline std::string table_csv(const std::vector<GenusRow>& rows) {
  std::string out = genus_csv_header();
  for (const auto& r : rows) out += genus_csv_row(r.sig, r.profile);
  return out;
}

inline ordered_json polygon_json(const TriangleSignature& s, const TriangleImage& t, const StellatedPolygon& k) {
  ordered_json verts = ordered_json::array(), edges = ordered_json::array();
  for (auto v : k.vertices) verts.push_back(to_json(v));
  for (auto [a, b] : k.edges) edges.push_back({a, b});
  ordered_json pairs = ordered_json::object(), orbits = ordered_json::object(), classes = ordered_json::array();
  for (auto j : all_branches) {
    ordered_json pj = ordered_json::array();
    for (const auto& p : edge_pairs(s, j))
      pj.push_back({{"e", p.e}, {"e_prime", p.e_prime}, {"witness", {{"j", branch_name(j)}, {"m", p.m}}},
                    {"element", to_json(p.witness)}});
    pairs[branch_name(j)] = pj;
    ordered_json oj = ordered_json::array();
    for (const auto& o : orbit_decomposition(s, j)) {
      ordered_json one = ordered_json::array();
      for (const auto& p : o) one.push_back({p.e, p.e_prime});
      oj.push_back(one);
    }
    orbits[branch_name(j)] = oj;
    for (const auto& c : vertex_orbits(s, j)) classes.push_back({{"j", branch_name(j)}, {"vertices", c.vertices}});
  }
  return {{"signature", to_json(s)},
          {"C", to_json(t.C)},
          {"D", to_json(t.D)},
          {"angles", {to_json(t.angles[0]), to_json(t.angles[1]), to_json(t.angles[2])}},
          {"outer_radius", k.outer_radius},
          {"inner_radius", k.inner_radius},
          {"vertices", verts},
          {"edges", edges},
          {"edge_pairs", pairs},
          {"orbits", orbits},
          {"vertex_classes", classes},
          {"triangulation", to_json(triangulation_counts(s))}};
}

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// SVG in math orientation: y is flipped by the root group transform.
inline std::string svg_open(double R) {
  double m = 1.1 * R;
  std::string w = num(2 * m);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(-m) + " " + num(-m) + " " + w + " " + w +
         "\" width=\"600\" height=\"600\">\n<g transform=\"scale(1,-1)\">\n";
}

inline std::string svg_close() { return "</g>\n</svg>\n"; }

inline std::string svg_polygon(const StellatedPolygon& k) {
  std::string pts;
  for (auto v : k.vertices) pts += num(v.real()) + "," + num(v.imag()) + " ";
  pts.pop_back();
  double sw = 0.004 * k.outer_radius;
  return "<polygon class=\"star\" points=\"" + pts + "\" fill=\"#eef3fb\" stroke=\"#1f3a68\" stroke-width=\"" + num(sw) +
         "\"/>\n<circle class=\"center\" cx=\"0\" cy=\"0\" r=\"" + num(2 * sw) + "\" fill=\"#1f3a68\"/>\n";
}

inline std::string polygon_svg(const StellatedPolygon& k) { return svg_open(k.outer_radius) + svg_polygon(k) + svg_close(); }

inline std::string billiard_svg(const StellatedPolygon& k, const Trajectory& tr) {
  std::string out = svg_open(k.outer_radius) + svg_polygon(k);
  double sw = 0.003 * k.outer_radius;
  std::string pts;
  if (!tr.segments.empty()) pts = num(tr.segments.front().start.real()) + "," + num(tr.segments.front().start.imag());
  for (const auto& s : tr.segments) pts += " " + num(s.end.real()) + "," + num(s.end.imag());
  out += "<polyline class=\"trajectory\" points=\"" + pts + "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" +
         num(sw) + "\"/>\n";
  for (const auto& r : tr.reflections)
    out += "<circle class=\"reflection\" cx=\"" + num(r.point.real()) + "\" cy=\"" + num(r.point.imag()) + "\" r=\"" +
           num(3 * sw) + "\" fill=\"#2c3e50\"/>\n";
  return out + svg_close();
}

inline ordered_json billiard_json(const TriangleSignature& s, const BilliardState& st, const Trajectory& tr,
                                  const UnfoldedRay* ray) {
  ordered_json segs = ordered_json::array(), refl = ordered_json::array();
  for (const auto& g : tr.segments) segs.push_back({{"start", to_json(g.start)}, {"end", to_json(g.end)}});
  for (const auto& r : tr.reflections)
    refl.push_back({{"edge", r.edge}, {"point", to_json(r.point)}, {"incoming", to_json(r.incoming)},
                    {"outgoing", to_json(r.outgoing)}});
  ordered_json j = {{"signature", to_json(s)},
                    {"start", to_json(st.position)},
                    {"direction", to_json(st.direction)},
                    {"termination", termination_name(tr.reason)},
                    {"length", tr.length()},
                    {"segments", segs},
                    {"reflections", refl}};
  if (ray) {
    ordered_json frames = ordered_json::array();
    for (const auto& f : ray->frames) frames.push_back(to_json(f));
    j["unfolded"] = {{"origin", to_json(ray->origin)},
                     {"direction", to_json(ray->direction)},
                     {"lengths", ray->lengths},
                     {"frames", frames}};
  }
  return j;
}

inline ordered_json report_json(const Report& r, std::uint64_t seed) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"signature", e.signature}, {"name", e.name}, {"status", status_name(e.status)}, {"detail", e.detail}});
  return {{"seed", seed},
          {"summary",
           {{"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"mismatch_documented", r.count(Status::mismatch_documented)}}},
          {"entries", entries}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string report_csv(const Report& r) {
  std::string out = "signature,name,status,detail\n";
  for (const auto& e : r.entries)
    out += csv_field(e.signature) + "," + csv_field(e.name) + "," + status_name(e.status) + "," + csv_field(e.detail) + "\n";
  return out;
}

}  // namespace scstar::io
