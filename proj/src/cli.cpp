#include "fibcensus/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fibcensus/census.hpp"
#include "fibcensus/emit.hpp"
#include "fibcensus/hyplen.hpp"
#include "fibcensus/manifold.hpp"

namespace fibcensus {

namespace {

IntVec parse_class(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  IntVec v;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw domain_error("invalid class coordinate '" + item + "'");
    }
  }
  if (v.empty()) throw domain_error("empty class '" + s + "'");
  return v;
}

std::pair<Coord, Coord> parse_genus_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      Coord g = std::stoll(s);
      return {g, g};
    }
    Coord a = std::stoll(s.substr(0, pos));
    Coord b = std::stoll(s.substr(pos + 2));
    if (a < 1 || b < a) throw domain_error("");
    return {a, b};
  } catch (const std::exception&) {
    throw domain_error("invalid genus range '" + s + "' (expected a..b)");
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw domain_error("unknown format '" + s + "'");
}

struct CommonOpts {
  std::string manifold;
  std::string tol = "1e-9";
  std::string format = "csv";
  int jobs = 1;
};

int cmd_census(const CommonOpts& c, double L, const std::string& genus, bool details,
               std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  auto [glo, ghi] = parse_genus_range(genus);
  CensusResult r = run_census(mf, L, glo, ghi, parse_rational(c.tol), c.jobs);
  out << render(census_table(r), parse_format(c.format));
  if (details) out << render(census_detail_table(r), parse_format(c.format));
  return 0;
}

int cmd_dilatation(const CommonOpts& c, int face, const std::string& cls, std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  IntVec eta = parse_class(cls);
  const FaceData& fd = mf.faces().at(static_cast<std::size_t>(face));
  RootInterval lam = dilatation(fd.poly, eta, parse_rational(c.tol));
  out << "lambda = " << format_interval(lam.lo_double(), lam.hi_double()) << "\n";
  out << "log lambda = " << format_interval(lam.log_lo(), lam.log_hi()) << "\n";
  if (in_open_cone(mf.norm_data(), mf.face(face), eta)) {
    Coord n = mf.norm_data().norm(eta);
    RealInterval nl = scaled_log_interval(lam, static_cast<double>(n));
    out << "norm = " << n << "\n";
    out << "normalized = " << format_interval(nl.lo, nl.hi) << "\n";
  } else {
    out << "note: class is outside the open cone of face " << face << "\n";
  }
  return 0;
}

int cmd_count_lattice(const CommonOpts& c, int face, int cube_index,
                      const std::string& genus, std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  const FaceData& fd = mf.faces().at(static_cast<std::size_t>(face));
  const CubeRegion& cube = fd.cubes.at(static_cast<std::size_t>(cube_index));
  auto [glo, ghi] = parse_genus_range(genus);
  if (glo < 2) throw domain_error("lattice counts need genus >= 2");
  std::vector<CountReport> rows;
  for (Coord g = glo; g <= ghi; ++g) rows.push_back(count_report(cube, g));
  out << render(count_table(rows), parse_format(c.format));
  return 0;
}

int cmd_count_ball(const CommonOpts& c, const std::string& radius, Coord step,
                   std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  auto pos = radius.find("..");
  Coord lo, hi;
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoll(radius);
    } else {
      lo = std::stoll(radius.substr(0, pos));
      hi = std::stoll(radius.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw domain_error("invalid radius '" + radius + "'");
  }
  if (lo < 0 || hi < lo || step < 1) throw domain_error("invalid radius range");
  Table t;
  t.header = {"r", "count"};
  for (Coord r = lo; r <= hi; r += step)
    t.rows.push_back({std::to_string(r),
                      std::to_string(count_ball_points(mf.norm_data(), r, c.jobs))});
  out << render(t, parse_format(c.format));
  return 0;
}

int cmd_epsilon(double L, std::ostream& out) {
  double eps = epsilon_thick(L);
  double residual = std::fabs(collar_F(eps) - std::exp(3.0 * L) * eps);
  const double xstar = 2.0 * std::asinh(1.0);
  out << "epsilon_1(" << format_double(L) << ") = " << format_double(eps) << "\n";
  out << "residual = " << format_double(residual) << "\n";
  out << "fixed point check: F(2 asinh 1) = " << format_double(collar_F(xstar))
      << " (target " << format_double(xstar) << ")\n";
  out << "involution check: F(F(2)) = " << format_double(collar_F(collar_F(2.0)))
      << " (target 2)\n";
  return 0;
}

int cmd_penner(const CommonOpts& c, int face, const std::string& s_str,
               const std::string& sigma_str, Coord gmax, std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  PennerFamily fam = penner_family(mf, face, parse_class(s_str), parse_class(sigma_str),
                                   gmax, parse_rational(c.tol), c.jobs);
  out << "start_genus," << fam.start_genus << "\n";
  out << render(penner_table(fam), parse_format(c.format));
  return 0;
}

int cmd_symmetry(const CommonOpts& c, std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  SymmetryGroup G = symmetry_group(mf.norm_data());
  out << "order," << G.order() << "\n";
  for (const IntMat& A : G.elements) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i) out << ';';
      out << to_string(A[i]);
    }
    out << "\n";
  }
  return 0;
}

int cmd_validate(const CommonOpts& c, bool emit_canonical, std::ostream& out) {
  ManifoldFile mf = load_manifold(c.manifold);
  if (emit_canonical) {
    out << canonical_text(mf);
    return 0;
  }
  out << "OK " << mf.name() << ": b1=" << mf.b1() << ", "
      << mf.norm_data().dual_vertices().size() << " dual vertices, " << mf.faces().size()
      << (mf.faces().size() == 1 ? " face" : " faces") << ", "
      << (mf.closed() ? "closed" : "cusped") << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"per-genus censuses of small-dilatation fibered classes"};
  app.require_subcommand(1);

  CommonOpts c;
  double L = 1.0;
  std::string genus = "2..10";
  std::string radius = "0..10";
  std::string cls, s_str = "(1,0)", sigma_str = "(0,1)";
  Coord gmax = 50, step = 1;
  int face = 0, cube_index = 0;
  bool details = false, emit_canonical = false;

  auto add_common = [&](CLI::App* sub, bool needs_manifold = true) {
    if (needs_manifold)
      sub->add_option("-m,--manifold", c.manifold, "manifold data file")->required();
    sub->add_option("--tol", c.tol, "certified tolerance (rational or decimal)");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "csv|table");
  };

  CLI::App* census = app.add_subcommand("census", "per-genus census of short fibers");
  add_common(census);
  census->add_option("-L", L, "length budget")->required();
  census->add_option("--genus", genus, "inclusive genus range a..b");
  census->add_flag("--details", details, "also dump per-record rows");

  CLI::App* dil = app.add_subcommand("dilatation", "stretch factor along a class");
  add_common(dil);
  dil->add_option("--face", face, "face index");
  dil->add_option("--class", cls, "integral class, e.g. \"1,0\"")->required();

  CLI::App* clat = app.add_subcommand("count-lattice", "cube point counts per genus");
  add_common(clat);
  clat->add_option("--face", face, "face index");
  clat->add_option("--cube", cube_index, "cube index within the face");
  clat->add_option("--genus", genus, "inclusive genus range a..b");

  CLI::App* cball = app.add_subcommand("count-ball", "integral classes in norm balls");
  add_common(cball);
  cball->add_option("-r,--radius", radius, "radius or range a..b");
  cball->add_option("--step", step, "radius increment");

  CLI::App* eps = app.add_subcommand("epsilon", "thick-part threshold for a length budget");
  eps->add_option("-L", L, "length budget")->required();

  CLI::App* pen = app.add_subcommand("penner", "family (g-1)S + Sigma up to a genus bound");
  add_common(pen);
  pen->add_option("--face", face, "face index");
  pen->add_option("--s", s_str, "class S in the open cone");
  pen->add_option("--sigma", sigma_str, "class Sigma in ker psi");
  pen->add_option("--gmax", gmax, "largest genus");

  CLI::App* sym = app.add_subcommand("symmetry", "norm isometry group");
  add_common(sym);

  CLI::App* val = app.add_subcommand("validate", "load and check a manifold file");
  add_common(val);
  val->add_flag("--emit-canonical", emit_canonical, "print the canonical serialization");

  std::vector<char*> argv;
  std::string prog = "fibcensus";
  argv.push_back(prog.data());
  std::vector<std::string> storage(args);
  for (std::string& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (census->parsed()) return cmd_census(c, L, genus, details, out);
    if (dil->parsed()) return cmd_dilatation(c, face, cls, out);
    if (clat->parsed()) return cmd_count_lattice(c, face, cube_index, genus, out);
    if (cball->parsed()) return cmd_count_ball(c, radius, step, out);
    if (eps->parsed()) return cmd_epsilon(L, out);
    if (pen->parsed()) return cmd_penner(c, face, s_str, sigma_str, gmax, out);
    if (sym->parsed()) return cmd_symmetry(c, out);
    if (val->parsed()) return cmd_validate(c, emit_canonical, out);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range&) {
    err << "error: index out of range\n";
    return 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace fibcensus
