#include "pi3geo/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pi3geo/checks.hpp"
#include "pi3geo/core.hpp"
#include "pi3geo/curve.hpp"
#include "pi3geo/expr.hpp"
#include "pi3geo/format.hpp"
#include "pi3geo/mesh.hpp"
#include "pi3geo/revolution.hpp"
#include "pi3geo/surface.hpp"

namespace pi3 {

namespace {

using nlohmann::ordered_json;

/// Curvature below this threshold leaves tau and the normal undefined; the
/// matching CSV fields are emitted empty (same threshold as torsion()).
constexpr double kZeroKappa = 1e-12;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(const std::string& text, const char* what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw Error(Errc::invalid_params,
                std::string(what) + ": '" + text + "' is not a number");
  return v;
}

Interval parse_range(const std::string& text, const char* what) {
  const std::size_t pos = text.find(':');
  if (pos == std::string::npos)
    throw Error(Errc::invalid_params,
                std::string(what) + " must look like 'lo:hi'");
  const Interval r{parse_number(text.substr(0, pos), what),
                   parse_number(text.substr(pos + 1), what)};
  if (!(r.lo < r.hi))
    throw Error(Errc::invalid_params,
                std::string(what) + " must satisfy lo < hi");
  return r;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const std::size_t pos = text.find('x');
  if (pos == std::string::npos)
    throw Error(Errc::invalid_params, "grid must look like 'NxM'");
  const auto number = [](const std::string& part) {
    int v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size() || v < 2)
      throw Error(Errc::invalid_params,
                  "grid counts must be integers >= 2, got '" + part + "'");
    return v;
  };
  return {number(text.substr(0, pos)), number(text.substr(pos + 1))};
}

/// Parses "expr,expr,expr" into three expressions over the given variables.
/// The grammar has no comma, so splitting on every comma is unambiguous.
std::array<ExprAst, 3> parse_triple(const std::string& text,
                                    const std::vector<std::string>& vars) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3)
    throw Error(Errc::invalid_params,
                "expected three comma-separated component expressions");
  const char* names[] = {"x", "y", "z"};
  std::optional<ExprAst> comp[3];
  for (int i = 0; i < 3; ++i) {
    try {
      comp[i] = ExprAst::parse(parts[static_cast<std::size_t>(i)], vars);
    } catch (const Error& e) {
      throw Error(e.code(),
                  std::string(names[i]) + " component: " + e.what(),
                  e.offset());
    }
  }
  return {*comp[0], *comp[1], *comp[2]};
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw Error(Errc::invalid_params, "cannot open '" + path + "' for writing");
  os << body;
}

/// Sends `body` to --out when given, otherwise to the stream.
void deliver(const std::string& out_path, const std::string& body,
             std::ostream& os) {
  if (out_path.empty())
    os << body;
  else
    write_text_file(out_path, body);
}

ProfileKind parse_kind(const std::string& text) {
  if (text == "spacelike") return ProfileKind::spacelike;
  if (text == "timelike") return ProfileKind::timelike;
  throw Error(Errc::invalid_params,
              "kind must be 'spacelike' or 'timelike', got '" + text + "'");
}

// --- subcommand option bags -------------------------------------------------

struct ClassifyOpts {
  std::string curve, vector, range = "-1:1";
  int n = 64;
};

struct CurveOpts {
  std::string curve, range = "-1:1", out, format = "csv";
  int n = 100;
};

struct SurfaceOpts {
  std::string surface, urange = "0:1", vrange = "0:1", grid = "20x20";
  std::string format = "csv", out;
};

struct RevolveOpts {
  std::string family, profile, kind = "spacelike";
  double k0 = 0.0, h0 = 0.0, c1 = 0.0, c2 = 0.0;
  int sign = 1;
  bool has_k0 = false, has_h0 = false;
  std::string urange = "1:2", vrange = "0:1", grid = "50x50", out;
};

struct VerifyOpts {
  std::string suite = "all";
  double tol = 0.0;
  std::uint64_t seed = 74207281u;
  bool list = false;
};

struct ParseOpts {
  std::string expression, vars = "s,u,v,x,y";
};

// --- subcommand implementations ---------------------------------------------

int cmd_classify(const ClassifyOpts& o, std::ostream& out) {
  const bool has_curve = !o.curve.empty();
  const bool has_vector = !o.vector.empty();
  if (has_curve == has_vector)
    throw Error(Errc::invalid_params,
                "provide exactly one of --curve or --vector");

  if (has_vector) {
    const std::vector<std::string> parts = split(o.vector, ',');
    if (parts.size() != 3)
      throw Error(Errc::invalid_params,
                  "--vector expects three comma-separated numbers");
    const Vec3 v(parse_number(parts[0], "--vector"),
                 parse_number(parts[1], "--vector"),
                 parse_number(parts[2], "--vector"));
    out << causal_class_name(causal_class(v)) << "\n";
    return 0;
  }

  const Interval range = parse_range(o.range, "--range");
  const auto comps = parse_triple(o.curve, {"s"});
  const CurveJet c = CurveJet::from_exprs(comps[0], comps[1], comps[2], range);
  const CausalClass cls = classify_curve(c, o.n);
  if (cls == CausalClass::lightlike) {
    const LightlikePlane pl = lightlike_plane(c, o.n);
    out << "lightlike, plane x" << (pl.sign > 0 ? "+" : "-") << "y="
        << fmt_shortest(pl.c0) << "\n";
    return 0;
  }
  std::string report = causal_class_name(cls);
  if (cls == CausalClass::spacelike || cls == CausalClass::timelike) {
    if (is_admissible(c, o.n)) report += ", admissible";
    if (is_arclength(c, o.n)) report += ", arc-length";
  }
  out << report << "\n";
  return 0;
}

int cmd_curve(const CurveOpts& o, std::ostream& out) {
  if (o.format != "csv")
    throw Error(Errc::invalid_params, "curve output supports --format csv");
  const Interval range = parse_range(o.range, "--range");
  const auto comps = parse_triple(o.curve, {"s"});
  const CurveJet c = CurveJet::from_exprs(comps[0], comps[1], comps[2], range);

  std::ostringstream csv;
  csv << "s,x,y,z,kappa,tau,Tx,Ty,Tz,Nx,Ny,Nz\n";
  bool partial = false;
  const auto num = [](double v) { return fmt_general(v, 17); };
  for (double s : linspace(range, o.n)) {
    const CurvePoint cp = c(s);
    const double kappa = curvature(c, s);
    csv << num(s) << ',' << num(cp.p.x()) << ',' << num(cp.p.y()) << ','
        << num(cp.p.z()) << ',' << num(kappa) << ',';
    if (kappa < kZeroKappa) {
      // tau and the normal are undefined here; leave their fields empty.
      partial = true;
      csv << ',' << num(cp.d1.x()) << ',' << num(cp.d1.y()) << ','
          << num(cp.d1.z()) << ",,,\n";
      continue;
    }
    const double tau = torsion(c, s);
    const Vec3 N = cp.d2 / kappa;
    csv << num(tau) << ',' << num(cp.d1.x()) << ',' << num(cp.d1.y()) << ','
        << num(cp.d1.z()) << ',' << num(N.x()) << ',' << num(N.y()) << ','
        << num(N.z()) << "\n";
  }
  deliver(o.out, csv.str(), out);
  return partial ? 3 : 0;
}

int cmd_surface(const SurfaceOpts& o, std::ostream& out) {
  const Rect dom{parse_range(o.urange, "--urange"),
                 parse_range(o.vrange, "--vrange")};
  const auto [nu, nv] = parse_grid(o.grid);
  const auto comps = parse_triple(o.surface, {"u", "v"});
  const SurfaceJet sj = SurfaceJet::from_exprs(comps[0], comps[1], comps[2], dom);

  if (o.format == "obj") {
    deliver(o.out, to_obj(sample_surface_mesh(sj, nu, nv)), out);
    return 0;
  }
  if (o.format != "csv")
    throw Error(Errc::invalid_params,
                "surface output supports --format csv or obj");

  std::ostringstream csv;
  csv << "u,v,x,y,z,K,H\n";
  const auto num = [](double v) { return fmt_general(v, 17); };
  for (double u : linspace(dom.u, nu)) {
    for (double v : linspace(dom.v, nv)) {
      const SurfacePoint sp = sj(u, v);
      csv << num(u) << ',' << num(v) << ',' << num(sp.r.x()) << ','
          << num(sp.r.y()) << ',' << num(sp.r.z()) << ','
          << num(gauss_curvature(sj, u, v)) << ','
          << num(mean_curvature(sj, u, v)) << "\n";
    }
  }
  deliver(o.out, csv.str(), out);
  return 0;
}

ordered_json stats_json(const FieldStats& st) {
  return ordered_json{{"min", st.min}, {"max", st.max}, {"max_abs", st.max_abs}};
}

int cmd_revolve(const RevolveOpts& o, std::ostream& out) {
  const bool has_family = !o.family.empty();
  const bool has_profile = !o.profile.empty();
  if (has_family == has_profile)
    throw Error(Errc::invalid_params,
                "provide exactly one of --family or --profile");
  const Interval urange = parse_range(o.urange, "--urange");
  const Interval vrange = parse_range(o.vrange, "--vrange");
  const auto [nu, nv] = parse_grid(o.grid);
  const ProfileKind kind = parse_kind(o.kind);

  std::optional<ProfileFamily> fam;
  if (has_family) {
    if (o.family == "constant_k") {
      if (!o.has_k0)
        throw Error(Errc::invalid_params, "--family constant_k needs --k0");
      if (o.sign != 1 && o.sign != -1)
        throw Error(Errc::invalid_params, "--sign must be 1 or -1");
      fam = ConstantK{o.k0, o.c1, o.c2, o.sign};
    } else if (o.family == "constant_h") {
      if (!o.has_h0)
        throw Error(Errc::invalid_params, "--family constant_h needs --h0");
      fam = ConstantH{o.h0, o.c1, o.c2};
    } else if (o.family == "flat") {
      fam = Flat{o.c1, o.c2};
    } else if (o.family == "minimal") {
      fam = Minimal{o.c1, o.c2};
    } else if (o.family == "parabolic_sphere") {
      fam = ParabolicSphere{o.c1, o.c2};
    } else {
      throw Error(Errc::invalid_params,
                  "unknown family '" + o.family +
                      "' (constant_k, constant_h, flat, minimal, "
                      "parabolic_sphere)");
    }
  }

  const Profile profile =
      fam ? solve_profile(*fam, urange, kind)
          : Profile{ExprAst::parse(o.profile, {"u"}), kind, urange};
  const SurfaceJet sj = make_revolution(profile, vrange);
  if (!o.out.empty()) write_text_file(o.out, to_obj(sample_surface_mesh(sj, nu, nv)));

  ordered_json j;
  if (fam) {
    const FamilyReport rep = verify_family(*fam, urange, vrange, nu, nv);
    j["family"] = rep.family;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : rep.params) params[name] = value;
    j["params"] = params;
    j["grid"] = {rep.grid_nu, rep.grid_nv};
    j["K_stats"] = stats_json(rep.K_stats);
    j["H_stats"] = stats_json(rep.H_stats);
    j["max_abs_K_minus_K0"] =
        rep.max_abs_K_minus_K0 ? ordered_json(*rep.max_abs_K_minus_K0)
                               : ordered_json(nullptr);
    j["max_abs_H_minus_H0"] =
        rep.max_abs_H_minus_H0 ? ordered_json(*rep.max_abs_H_minus_H0)
                               : ordered_json(nullptr);
    j["max_abs_H2_minus_K"] = rep.max_abs_H2_minus_K;
  } else {
    FieldStats ks, hs;
    double dE = 0.0;
    bool first = true;
    for (double u : linspace(urange, nu)) {
      for (double v : linspace(vrange, nv)) {
        const double K = gauss_curvature(sj, u, v);
        const double H = mean_curvature(sj, u, v);
        if (first) {
          ks = {K, K, std::abs(K)};
          hs = {H, H, std::abs(H)};
          first = false;
        } else {
          ks.min = std::min(ks.min, K);
          ks.max = std::max(ks.max, K);
          ks.max_abs = std::max(ks.max_abs, std::abs(K));
          hs.min = std::min(hs.min, H);
          hs.max = std::max(hs.max, H);
          hs.max_abs = std::max(hs.max_abs, std::abs(H));
        }
        dE = std::max(dE, std::abs(H * H - K));
      }
    }
    j["family"] = "explicit";
    j["params"] = ordered_json::object();
    j["grid"] = {nu, nv};
    j["K_stats"] = stats_json(ks);
    j["H_stats"] = stats_json(hs);
    j["max_abs_K_minus_K0"] = nullptr;
    j["max_abs_H_minus_H0"] = nullptr;
    j["max_abs_H2_minus_K"] = dE;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.list) {
    for (const auto& [name, claim] : list_checks()) out << name << "\n";
    return 0;
  }
  if (o.tol < 0.0)
    throw Error(Errc::invalid_params, "--tol must be positive");
  const std::vector<CheckResult> results = run_checks(o.suite, o.tol, o.seed);

  ordered_json j;
  j["suite"] = o.suite;
  j["seed"] = o.seed;
  j["tolerance_override"] =
      o.tol > 0.0 ? ordered_json(o.tol) : ordered_json(nullptr);
  ordered_json checks = ordered_json::array();
  bool all_pass = true;
  for (const CheckResult& r : results) {
    checks.push_back(ordered_json{{"name", r.name},
                                  {"reference", r.reference},
                                  {"measured", r.measured},
                                  {"tolerance", r.tolerance},
                                  {"pass", r.pass}});
    all_pass = all_pass && r.pass;
  }
  j["checks"] = checks;
  j["pass"] = all_pass;
  out << j.dump(2) << "\n";
  return all_pass ? 0 : 4;
}

int cmd_parse(const ParseOpts& o, std::ostream& out) {
  std::vector<std::string> vars;
  for (const std::string& v : split(o.vars, ','))
    if (!v.empty()) vars.push_back(v);
  const ExprAst ast = ExprAst::parse(o.expression, vars);
  out << ast.to_string() << "\n" << ast.dump();
  return 0;
}

int code_for(Errc c) {
  switch (c) {
    case Errc::syntax_error:
    case Errc::unknown_identifier:
    case Errc::arity_error:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"differential geometry of the pseudo-isotropic 3-space"};
  app.name("pi3geo");
  app.require_subcommand(1);

  ClassifyOpts co;
  CLI::App* classify =
      app.add_subcommand("classify", "causal class of a vector or curve");
  classify->add_option("--curve", co.curve,
                       "curve as 'x,y,z' expressions in s");
  classify->add_option("--vector", co.vector, "vector as 'x,y,z' numbers");
  classify->add_option("--range", co.range, "parameter interval lo:hi");
  classify->add_option("-n,--n", co.n, "number of samples");

  CurveOpts cu;
  CLI::App* curve =
      app.add_subcommand("curve", "invariant table of an arc-length curve");
  curve->add_option("--curve", cu.curve, "curve as 'x,y,z' expressions in s")
      ->required();
  curve->add_option("--range", cu.range, "parameter interval lo:hi");
  curve->add_option("-n,--n", cu.n, "number of samples");
  curve->add_option("--out", cu.out, "write CSV to this file");
  curve->add_option("--format", cu.format, "output format (csv)");

  SurfaceOpts su;
  CLI::App* surface =
      app.add_subcommand("surface", "curvature table or mesh of a patch");
  surface
      ->add_option("--surface", su.surface,
                   "surface as 'x,y,z' expressions in u,v")
      ->required();
  surface->add_option("--urange", su.urange, "u interval lo:hi");
  surface->add_option("--vrange", su.vrange, "v interval lo:hi");
  surface->add_option("--grid", su.grid, "sample grid NxM");
  surface->add_option("--format", su.format, "output format (csv or obj)");
  surface->add_option("--out", su.out, "write output to this file");

  RevolveOpts re;
  CLI::App* revolve = app.add_subcommand(
      "revolve", "surface of revolution: OBJ mesh and JSON curvature summary");
  revolve->add_option("--family", re.family,
                      "profile family: constant_k, constant_h, flat, minimal, "
                      "parabolic_sphere");
  revolve->add_option("--profile", re.profile, "explicit height f(u)");
  revolve->add_option("--kind", re.kind, "axis kind: spacelike or timelike");
  revolve->add_option("--k0", re.k0, "target K for constant_k")
      ->each([&re](const std::string&) { re.has_k0 = true; });
  revolve->add_option("--h0", re.h0, "target H for constant_h")
      ->each([&re](const std::string&) { re.has_h0 = true; });
  revolve->add_option("--c1", re.c1, "first integration constant");
  revolve->add_option("--c2", re.c2, "second integration constant");
  revolve->add_option("--sign", re.sign, "slope sign for constant_k (+1/-1)");
  revolve->add_option("--urange", re.urange, "profile interval lo:hi");
  revolve->add_option("--vrange", re.vrange, "angle interval lo:hi");
  revolve->add_option("--grid", re.grid, "mesh grid NxM");
  revolve->add_option("--out", re.out, "write OBJ mesh to this file");

  VerifyOpts ve;
  CLI::App* verify =
      app.add_subcommand("verify", "run the numerical verification suite");
  verify->add_option("--suite", ve.suite,
                     "all, core, expr, curve, surface or revolution");
  verify->add_option("--tol", ve.tol, "override every check tolerance");
  verify->add_option("--seed", ve.seed, "random seed for the generators");
  verify->add_flag("--list", ve.list, "print check names without running");

  ParseOpts pa;
  CLI::App* parse_cmd =
      app.add_subcommand("parse", "print the parsed form of an expression");
  parse_cmd->add_option("expression", pa.expression, "expression text")
      ->required();
  parse_cmd->add_option("--vars", pa.vars, "comma-separated variable names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(co, out);
    if (curve->parsed()) return cmd_curve(cu, out);
    if (surface->parsed()) return cmd_surface(su, out);
    if (revolve->parsed()) return cmd_revolve(re, out);
    if (verify->parsed()) return cmd_verify(ve, out);
    if (parse_cmd->parsed()) return cmd_parse(pa, out);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.offset() >= 0) err << " (offset " << e.offset() << ")";
    err << "\n";
    return code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pi3
