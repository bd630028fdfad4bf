#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"

namespace scstar::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

struct RunConfig {
  std::string command;
  std::string sig_text;
  int n_max = 12;
  int all_n = 0;
  bool all = false;
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  int bounces = 30;
  std::string start_text, dir_text;
  int grid = 11;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline int parse_int(const std::string& t, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw usage_error("malformed " + what + ": '" + t + "'");
  return v;
}

inline double parse_double(const std::string& t, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw usage_error("malformed " + what + ": '" + t + "'");
  return v;
}

// "n0,n1,ninf", optionally followed by ";n".
inline TriangleSignature parse_signature(const std::string& text) {
  const std::string rule = "expected n0,n1,ninf with 1 <= n0 <= n1 <= n_inf";
  if (text.empty()) throw usage_error("missing --sig; " + rule);
  auto semi = split(text, ';');
  if (semi.size() > 2) throw usage_error("malformed signature '" + text + "'; " + rule);
  auto parts = split(semi[0], ',');
  if (parts.size() != 3) throw usage_error("malformed signature '" + text + "'; " + rule);
  int a = parse_int(parts[0], "signature entry"), b = parse_int(parts[1], "signature entry"),
      c = parse_int(parts[2], "signature entry");
  auto s = make_signature(a, b, c);
  if (semi.size() == 2 && parse_int(semi[1], "signature order") != s.n)
    throw usage_error("signature order must equal n0+n1+n_inf = " + std::to_string(s.n));
  return s;
}

inline cplx parse_complex(const std::string& text, const std::string& what) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw usage_error("malformed " + what + " '" + text + "'; expected re,im");
  return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

inline void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw usage_error("format '" + c.format + "' is not available for " + c.command);
}

inline std::string dump(const io::ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string cmd_genus(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  auto s = parse_signature(c.sig_text);
  if (c.format == "csv") return io::genus_csv_header() + io::genus_csv_row(s, cover_profile(s));
  return dump(io::genus_json(s));
}

inline std::string cmd_table(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  auto rows = genus_table(c.n_max);
  return c.format == "csv" ? io::table_csv(rows) : dump(io::table_json(rows));
}

inline std::string cmd_map(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  auto s = parse_signature(c.sig_text);
  if (c.grid < 2 || c.grid > 401) throw usage_error("grid must lie in [2, 401]");
  auto t = triangle_image(s, c.tol);
  std::vector<std::pair<cplx, cplx>> pts;
  for (int iy = 0; iy < c.grid; ++iy)
    for (int ix = 0; ix < c.grid; ++ix) {
      cplx xi(-2.0 + 5.0 * ix / (c.grid - 1), -2.0 + 4.0 * iy / (c.grid - 1));
      if (std::abs(xi) < 1e-9 || std::abs(xi - 1.0) < 1e-9) continue;
      pts.emplace_back(xi, F_Q(xi, s, c.tol));
    }
  if (c.format == "csv") {
    std::string out = "xi_re,xi_im,z_re,z_im\n";
    char buf[128];
    for (auto [xi, z] : pts) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", xi.real(), xi.imag(), z.real(), z.imag());
      out += buf;
    }
    return out;
  }
  io::ordered_json arr = io::ordered_json::array();
  for (auto [xi, z] : pts) arr.push_back({{"xi", io::to_json(xi)}, {"z", io::to_json(z)}});
  return dump({{"signature", io::to_json(s)},
               {"tol", c.tol},
               {"C", io::to_json(t.C)},
               {"D", io::to_json(t.D)},
               {"angles", {io::to_json(t.angles[0]), io::to_json(t.angles[1]), io::to_json(t.angles[2])}},
               {"points", arr}});
}

inline std::string cmd_polygon(const RunConfig& c) {
  require_format(c, {"json", "csv", "svg"});
  auto s = parse_signature(c.sig_text);
  auto t = triangle_image(s, c.tol);
  auto k = build_polygon(s, std::abs(t.C));
  if (c.format == "svg") return io::polygon_svg(k);
  if (c.format == "csv") {
    std::string out = "index,re,im\n";
    char buf[96];
    for (int m = 0; m < k.size(); ++m) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", m, k.vertices[m].real(), k.vertices[m].imag());
      out += buf;
    }
    return out;
  }
  return dump(io::polygon_json(s, t, k));
}

inline std::string cmd_billiard(const RunConfig& c) {
  require_format(c, {"json", "csv", "svg"});
  auto s = parse_signature(c.sig_text);
  auto t = triangle_image(s, c.tol);
  auto k = build_polygon(s, std::abs(t.C));
  BilliardState st;
  if (c.start_text.empty()) {
    Sampler smp(c.seed);
    st.position = smp.interior_point(k);
  } else {
    st.position = parse_complex(c.start_text, "--start");
  }
  cplx d = c.dir_text.empty() ? cplx(1.0, 0.0) : parse_complex(c.dir_text, "--dir");
  if (std::abs(d) == 0.0) throw usage_error("--dir must be nonzero");
  st.direction = d / std::abs(d);
  auto tr = simulate(st, k, c.bounces);
  if (c.format == "svg") return io::billiard_svg(k, tr);
  if (c.format == "csv") {
    std::string out = "x0,y0,x1,y1\n";
    char buf[160];
    for (const auto& g : tr.segments) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", g.start.real(), g.start.imag(), g.end.real(),
                    g.end.imag());
      out += buf;
    }
    return out;
  }
  std::optional<UnfoldedRay> ray;
  if (tr.reason == Termination::budget) ray = unfold(tr, k, s);
  return dump(io::billiard_json(s, st, tr, ray ? &*ray : nullptr));
}

inline std::string cmd_verify(const RunConfig& c, bool& failed) {
  require_format(c, {"json", "csv"});
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.tol = c.tol;
  Report r;
  if (c.all) {
    r = verify_all(c.all_n > 0 ? c.all_n : c.n_max, opt);
  } else {
    r = verify_signature(parse_signature(c.sig_text), opt);
  }
  failed = !r.ok();
  return c.format == "csv" ? io::report_csv(r) : dump(io::report_json(r, c.seed));
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schwarz-Christoffel maps, stellated polygons and billiards for rational triangles"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--out", c.out_path, "write to this file instead of stdout");
    sub->add_option("--tol", c.tol, "quadrature tolerance");
    sub->add_option("--seed", c.seed, "seed for randomized choices");
  };
  auto add_sig = [&](CLI::App* sub) { sub->add_option("--sig", c.sig_text, "n0,n1,ninf"); };

  auto* genus = app.add_subcommand("genus", "cover profile and genus of one signature");
  add_sig(genus);
  add_common(genus);
  auto* table = app.add_subcommand("table", "genus table for all n <= nmax");
  table->add_option("--nmax,nmax", c.n_max, "largest n");
  add_common(table);
  auto* map = app.add_subcommand("map", "evaluate F_Q on a grid");
  add_sig(map);
  map->add_option("--grid", c.grid, "grid points per axis");
  add_common(map);
  auto* polygon = app.add_subcommand("polygon", "stellated polygon and its edge identifications");
  add_sig(polygon);
  add_common(polygon);
  auto* billiard = app.add_subcommand("billiard", "simulate a billiard motion");
  add_sig(billiard);
  billiard->add_option("--bounces", c.bounces, "reflection budget");
  billiard->add_option("--start", c.start_text, "re,im");
  billiard->add_option("--dir", c.dir_text, "re,im");
  add_common(billiard);
  auto* verify = app.add_subcommand("verify", "run the property suite");
  add_sig(verify);
  verify->add_option("--nmax", c.n_max, "largest n for --all");
  verify->add_option("--all", c.all_n, "verify every signature with n <= N")->expected(0, 1);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.all = verify->count("--all") > 0;

  bool failed = false;
  std::string text;
  try {
    if (*genus) c.command = "genus", text = cmd_genus(c);
    else if (*table) c.command = "table", text = cmd_table(c);
    else if (*map) c.command = "map", text = cmd_map(c);
    else if (*polygon) c.command = "polygon", text = cmd_polygon(c);
    else if (*billiard) c.command = "billiard", text = cmd_billiard(c);
    else c.command = "verify", text = cmd_verify(c, failed);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const numeric_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const geometry_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const consistency_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerifyFailed;
  }

  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!(f << text)) {
      err << "cannot write " << c.out_path << "\n";
      return kUsage;
    }
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace scstar::cli
