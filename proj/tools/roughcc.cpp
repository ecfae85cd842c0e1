// roughcc -- step-2 rough path toolbox.
//
// Subcommands: sig, check, dist, geodesic, approx, project, wz.
// Exit codes: 0 ok, 1 check failure, 2 usage/schema, 3 I/O.
// All floats print with 17 significant digits; identical configuration and
// seed give byte-identical output (the `seconds` CSV column excepted).
// ROUGHCC_THREADS caps worker threads.

#include <roughcc/roughcc.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rc = roughcc;

namespace {

double parse_p(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    double p = std::stod(s, &pos);
    if (pos != s.size() || p < 1.0) throw std::invalid_argument(s);
    return p;
  } catch (const std::exception&) {
    throw rc::Error("--p must be a number >= 1 or 'inf'");
  }
}

std::vector<std::size_t> parse_meshes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw rc::Error("--meshes must be a comma-separated list of positive interval counts");
    }
  }
  if (out.empty()) throw rc::Error("--meshes must be non-empty");
  return out;
}

std::vector<int> parse_ranks(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(static_cast<int>(v));
    } catch (const std::exception&) {
      throw rc::Error("--rank must be a comma-separated list of positive integers");
    }
  }
  if (out.empty()) throw rc::Error("--rank must be non-empty");
  return out;
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty())
    std::cout << body;
  else
    rc::detail::write_file(out_path, body);
}

// options shared by the generator-backed subcommands
struct GenOpts {
  std::string kind;  // pure-area | random-wg | line-area
  int dim = 4;
  double alpha = 0.0;  // 0 = per-kind default
  std::uint64_t seed = 0;
  bool seed_given = false;
  int levels = 9;
  std::size_t grid = 257;
  std::string p_str = "2";
  std::string dump;  // write the generated driver here
  double gamma = 0.5, c1 = 1.0, c2 = 1.0, decay = 2.0;
};

void add_gen_flags(CLI::App* sub, GenOpts& g) {
  sub->add_option("--gen", g.kind, "generate the driver: pure-area | random-wg | line-area");
  sub->add_option("--dim", g.dim, "driver dimension for --gen");
  sub->add_option("--alpha", g.alpha, "Hölder exponent for --gen (default per kind)");
  sub->add_option("--seed", g.seed, "RNG seed (required with --gen)");
  sub->add_option("--levels", g.levels, "dyadic levels for --gen random-wg");
  sub->add_option("--grid", g.grid, "grid points for --gen pure-area / line-area");
  sub->add_option("--p", g.p_str, "Schatten exponent (>=1 or 'inf')");
  sub->add_option("--dump-driver", g.dump, "write the generated driver JSON here");
  sub->add_option("--gamma", g.gamma, "random-wg inner scaling exponent");
  sub->add_option("--c1", g.c1, "random-wg vector innovation scale");
  sub->add_option("--c2", g.c2, "random-wg area innovation scale");
  sub->add_option("--decay", g.decay, "random-wg area spectrum decay");
}

rc::RoughPath resolve_driver(const std::string& input, const CLI::App* sub, GenOpts& g) {
  g.seed_given = sub->count("--seed") > 0;
  if (input.empty() == g.kind.empty())
    throw rc::Error("give exactly one of an input file or --gen");
  if (!input.empty()) {
    if (sub->count("--p") > 0)
      std::cerr << "note: --p ignored, the input file carries p\n";
    return rc::load_roughpath(input);
  }
  if (!g.seed_given) throw rc::Error("--seed is required with --gen");
  rc::HomNorms norms(parse_p(g.p_str));
  if (g.dim < 2) throw rc::Error("--gen needs --dim >= 2");
  if (g.grid < 2) throw rc::Error("--gen needs --grid >= 2");
  rc::RoughPath x;
  if (g.kind == "pure-area") {
    rc::detail::Rng rng(g.seed);
    rc::Mat rate = rng.skew_with_spectrum(g.dim, 1.0, 1.0);
    std::vector<double> times(g.grid);
    for (std::size_t i = 0; i < g.grid; ++i)
      times[i] = static_cast<double>(i) / static_cast<double>(g.grid - 1);
    x = rc::synth_pure_area(times, rate, norms);  // alpha = 1/2 exactly
  } else if (g.kind == "random-wg") {
    rc::RandomWgParams prm;
    prm.dim = g.dim;
    prm.levels = g.levels;
    prm.alpha = g.alpha > 0.0 ? g.alpha : 0.45;
    prm.gamma = g.gamma;
    prm.c1 = g.c1;
    prm.c2 = g.c2;
    prm.decay = g.decay;
    prm.seed = g.seed;
    x = rc::synth_random_wg(prm, norms);
  } else if (g.kind == "line-area") {
    rc::detail::Rng rng(g.seed);
    rc::Mat drift = rng.skew_with_spectrum(g.dim, 1.0, 3.0);
    rc::SkewSpectrum sp = rc::skew_canonical(drift);
    rc::Vec v = sp.planes.empty() ? rc::Vec(rc::Vec::Unit(g.dim, 0)) : sp.planes[0].first;
    rc::PLPath line;
    for (std::size_t i = 0; i < g.grid; ++i) {
      double t = static_cast<double>(i) / static_cast<double>(g.grid - 1);
      line.times.push_back(t);
      line.points.push_back(rc::Vec(t * v));
    }
    x = rc::synth_lift_plus_area(line, drift, g.alpha > 0.0 ? g.alpha : 0.5, norms);
  } else {
    throw rc::Error("--gen must be pure-area, random-wg, or line-area");
  }
  if (!g.dump.empty()) rc::save_roughpath(g.dump, x);
  return x;
}

int cmd_sig(const std::string& input, const std::string& out) {
  rc::PLPath p = rc::load_plpath(input);
  rc::GroupElem g = rc::pl_signature(p);
  emit(out, rc::to_json(g) + "\n");
  return 0;
}

int cmd_check(const std::string& input, double tol) {
  rc::RawRoughInput in = rc::load_raw_roughpath(input);
  rc::CheckReport rep = rc::check_raw(in.raw, in.alpha, in.norms);
  std::string body;
  body += "max_defect " + rc::fmt17(rep.max_defect) + "\n";
  body += "holder_level1 " + rc::fmt17(rep.holder_level1) + "\n";
  body += "holder_level2 " + rc::fmt17(rep.holder_level2) + "\n";
  body += std::string("status ") + (rep.max_defect < tol ? "ok" : "defect") + "\n";
  std::cout << body;
  return rep.max_defect < tol ? 0 : 1;
}

int cmd_dist(const std::string& input, const std::string& p_str) {
  rc::GroupElem g = rc::load_group(input);
  rc::HomNorms norms(parse_p(p_str));
  rc::Control c = rc::connect(g);
  double lower = rc::triple_norm(g);
  std::string body;
  body += "triple_norm " + rc::fmt17(lower) + "\n";
  body += "triple_norm_x3 " + rc::fmt17(3.0 * lower) + "\n";
  body += "connect_length " + rc::fmt17(c.l1_norm()) + "\n";
  body += "hom_norm_p " + rc::fmt17(rc::hom_norm(g, norms)) + "\n";
  body += "schatten_1 " + rc::fmt17(rc::schatten(g.A, 1.0)) + "\n";
  body += "schatten_2 " + rc::fmt17(rc::schatten(g.A, 2.0)) + "\n";
  body += "schatten_inf " +
          rc::fmt17(rc::schatten(g.A, std::numeric_limits<double>::infinity())) + "\n";
  std::cout << body;
  return 0;
}

int cmd_geodesic(const std::string& input, int K, const std::string& out) {
  rc::GroupElem g = rc::load_group(input);
  rc::Control c = rc::connect(g);
  rc::PLPath p = rc::polygonize(c, static_cast<int>(g.a.size()), K);
  if (out.empty()) {
    std::cout << rc::to_csv(p);
    return 0;
  }
  rc::save_plpath(out, p);
  rc::GroupElem got = rc::pl_signature(p);
  double err = rc::metric_d(got, g, rc::HomNorms());
  std::string body;
  body += "control_l1 " + rc::fmt17(c.l1_norm()) + "\n";
  body += "pl_length " + rc::fmt17(p.length()) + "\n";
  body += "endpoint_error " + rc::fmt17(err) + "\n";
  std::cout << body;
  return 0;
}

int cmd_approx(const rc::RoughPath& x, double beta, const std::vector<std::size_t>& meshes,
               int K, const std::string& out) {
  rc::ConvergenceReport rep = rc::convergence_study(x, beta, meshes, K);
  emit(out, rc::to_csv(rep));
  if (!out.empty()) {
    // also materialize the interpolants next to the report
    std::string stem = out;
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv")
      stem = stem.substr(0, stem.size() - 4);
    for (std::size_t m : meshes) {
      rc::PLPath p = rc::geodesic_interpolation(x, rc::uniform_partition(x, m), K);
      rc::save_plpath(stem + "_m" + std::to_string(m) + ".csv", p);
    }
  }
  return 0;
}

int cmd_project(const rc::RoughPath& x, const std::vector<int>& ranks,
                const std::vector<std::size_t>& meshes, const std::string& out) {
  // reuses the 5-column convergence schema; here d_beta carries the proved
  // bound 2 o_|Pi| + tail_n and param carries the rank
  std::string body = "mesh,param,d_beta,sup_d,seconds\n";
  for (int r : ranks) {
    for (std::size_t m : meshes) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<std::size_t> Pi = rc::uniform_partition(x, m);
      rc::ProjectionResult res = rc::project_roughpath(x, r, Pi);
      double mesh = 0.0;
      for (std::size_t k = 0; k + 1 < Pi.size(); ++k)
        mesh = std::max(mesh, x.times[Pi[k + 1]] - x.times[Pi[k]]);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      body += rc::fmt17(mesh) + "," + rc::fmt17(static_cast<double>(r)) + "," +
              rc::fmt17(res.bound()) + "," + rc::fmt17(res.realized) + "," +
              rc::fmt17(secs) + "\n";
    }
  }
  emit(out, body);
  return 0;
}

int cmd_wz(const rc::RoughPath& x, const std::string& basis_name,
           const std::vector<std::size_t>& meshes, int K, int y0_grid,
           const std::string& out) {
  rc::FieldBasis basis = rc::make_basis(basis_name);
  std::vector<rc::Vec> y0s = rc::y0_lattice(basis.m, y0_grid);
  rc::WzReport rep = rc::wong_zakai_table(x, basis, y0s, meshes, K);
  emit(out, rc::to_csv(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"step-2 rough path toolbox"};
  app.require_subcommand(1);

  // sig
  auto* sig = app.add_subcommand("sig", "step-2 signature of a PL path CSV");
  std::string sig_in, sig_out;
  sig->add_option("input", sig_in, "PL path CSV (header t,x1,...,xd)")->required();
  sig->add_option("--out", sig_out, "output JSON path (default stdout)");

  // check
  auto* chk = app.add_subcommand("check", "validate a rough path JSON");
  std::string chk_in;
  double chk_tol = 1e-8;
  chk->add_option("input", chk_in, "rough path JSON")->required();
  chk->add_option("--tol", chk_tol, "weak-geometricity defect tolerance");

  // dist
  auto* dst = app.add_subcommand("dist", "norms and distance bounds of a group element");
  std::string dst_in, dst_p = "2";
  dst->add_option("input", dst_in, "group element JSON")->required();
  dst->add_option("--p", dst_p, "Schatten exponent (>=1 or 'inf')");

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "polygonal geodesic reaching a group element");
  std::string geo_in, geo_out;
  int geo_k = 64;
  geo->add_option("input", geo_in, "group element JSON")->required();
  geo->add_option("--polygon-k", geo_k, "vertices per full turn")->check(CLI::Range(4, 1 << 20));
  geo->add_option("--out", geo_out, "PL path CSV output (default: CSV to stdout)");

  // approx
  auto* apx = app.add_subcommand("approx", "geodesic interpolation convergence study");
  std::string apx_in, apx_meshes, apx_out;
  double apx_beta = 0.35;
  int apx_k = 64;
  GenOpts apx_gen;
  apx->add_option("input", apx_in, "rough path JSON (or use --gen)");
  apx->add_option("--beta", apx_beta, "target Hölder exponent (1/3 < beta < alpha)")->required();
  apx->add_option("--meshes", apx_meshes, "comma-separated interval counts")->required();
  apx->add_option("--polygon-k", apx_k, "vertices per full turn")->check(CLI::Range(4, 1 << 20));
  apx->add_option("--out", apx_out, "report CSV path (default stdout); also writes <out>_m<N>.csv paths");
  add_gen_flags(apx, apx_gen);

  // project
  auto* prj = app.add_subcommand("project", "finite-rank projection error study");
  std::string prj_in, prj_meshes, prj_ranks, prj_out;
  GenOpts prj_gen;
  prj->add_option("input", prj_in, "rough path JSON (or use --gen)");
  prj->add_option("--rank", prj_ranks, "comma-separated spectral ranks")->required();
  prj->add_option("--meshes", prj_meshes, "comma-separated interval counts")->required();
  prj->add_option("--out", prj_out, "report CSV path (default stdout)");
  add_gen_flags(prj, prj_gen);

  // wz
  auto* wz = app.add_subcommand("wz", "Wong-Zakai table: ODE flows of interpolants vs rough flow");
  std::string wz_in, wz_meshes, wz_out, wz_basis = "sine";
  int wz_k = 64, wz_y0 = 2;
  GenOpts wz_gen;
  wz->add_option("input", wz_in, "rough path JSON (or use --gen)");
  wz->add_option("--basis", wz_basis, "field basis: commuting | linear | sine | bump");
  wz->add_option("--meshes", wz_meshes, "comma-separated interval counts")->required();
  wz->add_option("--polygon-k", wz_k, "vertices per full turn")->check(CLI::Range(4, 1 << 20));
  wz->add_option("--y0-grid", wz_y0, "initial-condition lattice points per axis")->check(CLI::Range(1, 8));
  wz->add_option("--out", wz_out, "table CSV path (default stdout)");
  add_gen_flags(wz, wz_gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : 2;
  }

  try {
    if (sig->parsed()) return cmd_sig(sig_in, sig_out);
    if (chk->parsed()) return cmd_check(chk_in, chk_tol);
    if (dst->parsed()) return cmd_dist(dst_in, dst_p);
    if (geo->parsed()) return cmd_geodesic(geo_in, geo_k, geo_out);
    if (apx->parsed()) {
      rc::RoughPath x = resolve_driver(apx_in, apx, apx_gen);
      return cmd_approx(x, apx_beta, parse_meshes(apx_meshes), apx_k, apx_out);
    }
    if (prj->parsed()) {
      rc::RoughPath x = resolve_driver(prj_in, prj, prj_gen);
      return cmd_project(x, parse_ranks(prj_ranks), parse_meshes(prj_meshes), prj_out);
    }
    if (wz->parsed()) {
      rc::RoughPath x = resolve_driver(wz_in, wz, wz_gen);
      return cmd_wz(x, wz_basis, parse_meshes(wz_meshes), wz_k, wz_y0, wz_out);
    }
  } catch (const rc::NotWeaklyGeometric& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const rc::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rc::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
