// Acceptance gate: ten numbered criteria, one PASS/FAIL line each.
// Exit code = number of failed criteria.  All tolerances are pinned here.

#include <roughcc/roughcc.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace roughcc;

namespace {

std::string g3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// small deterministic helper for test-shape choices (dims, counts, scales)
struct Pick {
  std::mt19937_64 e;
  explicit Pick(std::uint64_t seed) : e(seed) {}
  int in(int lo, int hi) { return lo + static_cast<int>(e() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(e() >> 11) * 0x1.0p-53);
  }
};

double coef_gap(const GroupElem& g, const GroupElem& h) {
  return std::max((g.a - h.a).cwiseAbs().maxCoeff(), (g.A - h.A).cwiseAbs().maxCoeff());
}

double coef_max(const GroupElem& g) {
  return std::max(g.a.cwiseAbs().maxCoeff(), g.A.cwiseAbs().maxCoeff());
}

// ---------------------------------------------------------------- criterion 1

bool criterion1(std::string& note) {
  const double tol = 1e-12, budget_s = 10.0;
  const double t0 = now_s();
  detail::Rng rng(101);
  Pick pick(102);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = pick.in(1, 6);
    const std::size_t segs = static_cast<std::size_t>(pick.in(1, 20));
    PLPath p;
    for (std::size_t i = 0; i <= segs; ++i) {
      p.times.push_back(static_cast<double>(i));
      p.points.push_back(rng.gvec(d));
    }
    const std::size_t cut = static_cast<std::size_t>(pick.in(0, static_cast<int>(segs)));
    GroupElem full = pl_signature(p);
    GroupElem glued = gmul(pl_signature_between(p, 0, cut),
                           pl_signature_between(p, cut, segs));
    worst = std::max(worst, coef_gap(full, glued) / std::max(1.0, coef_max(full)));
  }
  const double secs = now_s() - t0;
  note = "worst rel err " + g3(worst) + ", " + g3(secs) + " s";
  return worst < tol && secs < budget_s;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2(std::string& note) {
  const double tol = 1e-12;
  detail::Rng rng(201);
  double worst = 0.0;
  // one full turn of the planar geodesic returns to the start and encloses
  // signed area -|u0|^2 / (4 pi)
  for (int rep = 0; rep < 6; ++rep) {
    Vec u0 = rng.gvec(2) * std::pow(10.0, rep - 3);
    GeodesicParams gp;
    gp.u0 = u0;
    gp.Lambda = 2.0 * kPi * wedge(Vec::Unit(2, 0), Vec::Unit(2, 1));
    GroupElem g = geodesic_endpoint(gp, 1.0);
    const double sigma = -u0.squaredNorm() / (4.0 * kPi);
    const double scale = std::max(1.0, std::abs(sigma));
    worst = std::max(worst, g.a.cwiseAbs().maxCoeff() / std::max(1.0, u0.norm()));
    worst = std::max(worst, std::abs(g.A(0, 1) - sigma) / scale);
  }
  // distance to a purely horizontal element equals its Euclidean length
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 2 + rep % 4;
    Vec a = rng.gvec(d) * std::pow(10.0, rep % 5 - 2);
    GroupElem g(a, Mat::Zero(d, d));
    Control c = connect(g);
    const double scale = std::max(1.0, a.norm());
    worst = std::max(worst, std::abs(c.l1_norm() - a.norm()) / scale);
    worst = std::max(worst, std::abs(triple_norm(g) - a.norm()) / scale);
    worst = std::max(worst, coef_gap(evolve(c, d), g) / scale);
  }
  note = "worst rel err " + g3(worst);
  return worst < tol;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3(std::string& note) {
  const double tol_end = 1e-9, tol_len = 1e-12, budget_s = 30.0;
  const double t0 = now_s();
  detail::Rng rng(301);
  Pick pick(302);
  double worst_end = 0.0, worst_len = 0.0;
  for (int d = 2; d <= 8; ++d) {
    for (int rep = 0; rep < 6; ++rep) {
      const double scale = std::pow(10.0, rep % 3 - 1);
      const double decay = 0.5 + 1.25 * (rep % 3);
      Mat A = rng.skew_with_spectrum(d, scale, decay);
      Control c = vertical_geodesic(A);
      GroupElem e = evolve(c, d);
      worst_end = std::max(worst_end, std::max(e.a.cwiseAbs().maxCoeff(),
                                               (e.A - A).cwiseAbs().maxCoeff()));
      const double want = 2.0 * std::sqrt(kPi) * cc_half(A);
      worst_len = std::max(worst_len, std::abs(c.l1_norm() - want) / std::max(1.0, want));
    }
  }
  // winding optimality: over injective n : {1..k} -> {1..k+2}, the cost
  // sum 4 pi n_j sigma_j is minimized exactly at n_j = j
  bool windings_ok = true;
  for (int k = 1; k <= 4; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> sig(k);
      for (int j = 0; j < k; ++j) sig[j] = (k - j) + pick.real(0.0, 0.5);  // strictly decreasing
      std::vector<int> tuple(k);
      std::function<void(int, unsigned)> visit = [&](int pos, unsigned used) {
        if (pos == k) {
          double cost = 0.0, cost_id = 0.0;
          bool is_id = true;
          for (int j = 0; j < k; ++j) {
            cost += 4.0 * kPi * tuple[j] * sig[j];
            cost_id += 4.0 * kPi * (j + 1) * sig[j];
            is_id = is_id && tuple[j] == j + 1;
          }
          if (!is_id && cost <= cost_id) windings_ok = false;
          return;
        }
        for (int v = 1; v <= k + 2; ++v) {
          if (used & (1u << v)) continue;
          tuple[pos] = v;
          visit(pos + 1, used | (1u << v));
        }
      };
      visit(0, 0u);
    }
  }
  const double secs = now_s() - t0;
  note = "worst endpoint err " + g3(worst_end) + ", worst length rel err " +
         g3(worst_len) + ", windings " + (windings_ok ? "ok" : "BAD") + ", " +
         g3(secs) + " s";
  return worst_end < tol_end && worst_len < tol_len && windings_ok && secs < budget_s;
}

// ----------------------------------------------------- random control factory

Control random_control(detail::Rng& rng, Pick& pick, int d) {
  Control c;
  const int nseg = pick.in(1, 4);
  std::vector<double> dur(nseg);
  double total = 0.0;
  for (double& t : dur) {
    t = pick.real(0.2, 1.0);
    total += t;
  }
  for (double& t : dur) t /= total;
  for (int s = 0; s < nseg; ++s) {
    ControlSegment seg;
    seg.duration = dur[s];
    const double scale = pick.real(0.2, 3.0);
    if (pick.in(0, 1) == 0) {
      seg.kind = ControlSegment::CONSTANT;
      seg.vel = scale * rng.gvec(d);
    } else {
      seg.kind = ControlSegment::SPIRAL;
      Mat Q = rng.orthogonal(d);
      const int np = pick.in(1, d / 2);
      for (int j = 0; j < np; ++j) {
        SpiralPlane pl;
        pl.X = Q.col(2 * j);
        pl.Y = Q.col(2 * j + 1);
        pl.w = std::complex<double>(scale * rng.gaussian(), scale * rng.gaussian());
        pl.n = (pick.in(0, 1) ? 1 : -1) * pick.in(1, 3);
        seg.planes.push_back(std::move(pl));
      }
    }
    c.segs.push_back(std::move(seg));
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4(std::string& note) {
  const double slack = 1e-9;
  detail::Rng rng(401);
  Pick pick(402);
  int violations = 0;
  double worst = -1e300;
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = pick.in(2, 6);
    Control c = random_control(rng, pick, d);
    const double excess = triple_norm(evolve(c, d)) - c.l1_norm();
    worst = std::max(worst, excess);
    if (excess > slack) ++violations;
  }
  note = std::to_string(violations) + " violations, worst excess " + g3(worst);
  return violations == 0;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5(std::string& note) {
  const double tol = 1e-9;
  detail::Rng rng(501);
  Pick pick(502);
  int violations = 0;
  double worst_end = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = pick.in(2, 8);
    const double scale = pick.real(0.2, 3.0);
    GroupElem g(scale * rng.gvec(d),
                rng.skew_with_spectrum(d, scale, pick.real(0.5, 3.0)));
    Control c = connect(g);
    worst_end = std::max(worst_end, coef_gap(evolve(c, d), g));
    const double len = c.l1_norm();
    const double want = g.a.norm() + 2.0 * std::sqrt(kPi) * cc_half(g.A);
    if (std::abs(len - want) > tol) ++violations;
    if (len > 3.0 * triple_norm(g) + tol) ++violations;
  }
  note = "worst endpoint err " + g3(worst_end) + ", " +
         std::to_string(violations) + " length violations";
  return worst_end < tol && violations == 0;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(std::string& note) {
  const double slack = 1e-10;
  detail::Rng rng(601);
  Pick pick(602);
  int violations = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int d = pick.in(2, 8);
    const double scale = std::pow(10.0, pick.in(-2, 2));
    Mat A, B;
    if (rep % 2 == 0) {
      A = rng.skew_with_spectrum(d, scale, pick.real(0.0, 3.0));
      B = rng.skew_with_spectrum(d, scale, pick.real(0.0, 3.0));
    } else {
      A = scale * skew_part(Mat(rng.gvec(d) * rng.gvec(d).transpose()));
      B = scale * skew_part(Mat(rng.gvec(d) * rng.gvec(d).transpose()));
    }
    if (0.5 * schatten(A, 1.0) > cc_norm(A) + slack) ++violations;
    if (cc_norm(A) > 0.25 * schatten(A, 0.5) + slack) ++violations;
    if (cc_half(A + B) > cc_half(A) + cc_half(B) + slack) ++violations;
    const double cscale = pick.real(0.1, 4.0);
    if (std::abs(cc_half(cscale * A) - std::sqrt(cscale) * cc_half(A)) > slack) ++violations;
  }
  note = std::to_string(violations) + " violations over 10000 pairs";
  return violations == 0;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7(std::string& note) {
  const double slack = 1e-10;
  detail::Rng rng(701);
  Pick pick(702);
  int violations = 0;
  const double ps[3] = {1.0, 2.0, std::numeric_limits<double>::infinity()};
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = pick.in(3, 8);
    GroupElem g(rng.gvec(d), skew_part(Mat(rng.gvec(d) * rng.gvec(d).transpose() +
                                           rng.gvec(d) * rng.gvec(d).transpose())));
    GroupElem h(rng.gvec(d), skew_part(Mat(rng.gvec(d) * rng.gvec(d).transpose() +
                                           rng.gvec(d) * rng.gvec(d).transpose())));
    const int k = pick.in(1, d - 1);
    Mat span(d, k);
    for (int c = 0; c < k; ++c) span.col(c) = rng.gvec(d);
    Subspace F = Subspace::from_span(span);
    for (double p : ps) {
      HomNorms norms(p);
      if (metric_d(project_group(g, F), project_group(h, F), norms) >
          metric_d(g, h, norms) + slack)
        ++violations;
    }
  }
  note = std::to_string(violations) + " violations over 1000 triples x 3 norms";
  return violations == 0;
}

// ---------------------------------------------------------------- criterion 8

struct StudyVerdict {
  bool ok = true;
  double match = 0.0;
};

StudyVerdict check_study(const RoughPath& x, double beta, int K) {
  const std::vector<std::size_t> meshes = {4, 8, 16, 32, 64, 128, 256, 512};
  ConvergenceReport rep = convergence_study(x, beta, meshes, K);
  StudyVerdict v;
  // interpolant signatures reproduce every partition increment
  for (std::size_t m : meshes) {
    std::vector<std::size_t> Pi = uniform_partition(x, m);
    PLPath pl = geodesic_interpolation(x, Pi, K);
    for (std::size_t k = 0; k + 1 < Pi.size(); ++k) {
      const double t0 = x.times[Pi[k]], t1 = x.times[Pi[k + 1]];
      std::size_t i0 = 0, i1 = 0;
      for (std::size_t vtx = 0; vtx < pl.times.size(); ++vtx) {
        if (pl.times[vtx] <= t0 + 1e-12) i0 = vtx;
        if (pl.times[vtx] <= t1 + 1e-12) i1 = vtx;
      }
      v.match = std::max(v.match, coef_gap(pl_signature_between(pl, i0, i1),
                                           x.increment(Pi[k], Pi[k + 1])));
    }
  }
  v.ok = v.ok && v.match < 1e-8;
  // d_beta strictly decreasing, and at least halved overall
  for (std::size_t r = 0; r + 1 < rep.rows.size(); ++r)
    v.ok = v.ok && rep.rows[r + 1].d_beta < rep.rows[r].d_beta;
  v.ok = v.ok && rep.rows.back().d_beta <= 0.5 * rep.rows.front().d_beta;
  // interpolation inequality per row: d_beta <= eps^theta * C^(1-theta)
  const double theta = 1.0 - beta / x.alpha;
  for (const ConvergenceRow& r : rep.rows) {
    const double C = std::max(r.holder_x, r.holder_y);
    const double bound = std::pow(r.eps_pairs, theta) * std::pow(C, 1.0 - theta);
    v.ok = v.ok && r.d_beta <= bound * (1.0 + 1e-12);
  }
  return v;
}

bool criterion8(std::string& note) {
  const double budget_s = 120.0;
  const double t0 = now_s();
  std::vector<double> times(513);
  for (int i = 0; i < 513; ++i) times[i] = i / 512.0;
  Mat rate = wedge(Vec::Unit(2, 0), Vec::Unit(2, 1));
  StudyVerdict pure = check_study(synth_pure_area(times, rate), 0.35, 64);

  RandomWgParams prm;
  prm.dim = 4;
  prm.levels = 9;
  prm.alpha = 0.45;
  prm.gamma = 0.65;
  prm.c1 = 1.0;
  prm.c2 = 0.05;
  prm.decay = 2.0;
  prm.seed = 1;
  StudyVerdict wg4 = check_study(synth_random_wg(prm), 0.35, 8);
  prm.dim = 50;
  StudyVerdict wg50 = check_study(synth_random_wg(prm), 0.35, 8);

  const double secs = now_s() - t0;
  note = "pure " + std::string(pure.ok ? "ok" : "BAD") + ", wg d=4 " +
         (wg4.ok ? "ok" : "BAD") + ", wg d=50 " + (wg50.ok ? "ok" : "BAD") +
         ", worst match " +
         g3(std::max({pure.match, wg4.match, wg50.match})) + ", " +
         g3(secs) + " s";
  return pure.ok && wg4.ok && wg50.ok && secs < budget_s;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9(std::string& note) {
  const double slack = 1e-9;
  detail::Rng rng(901);
  const int d = 100;
  PLPath line;
  Vec v = rng.unit(d);
  for (int i = 0; i <= 64; ++i) {
    line.times.push_back(i / 64.0);
    line.points.push_back(Vec((i / 64.0) * v));
  }
  Mat drift = rng.skew_with_spectrum(d, 1.0, 3.0);  // sigma_j ~ j^-3
  RoughPath x = synth_lift_plus_area(line, drift, 0.5);
  int violations = 0;
  for (std::size_t m : {4, 8, 16, 32}) {
    std::vector<std::size_t> Pi = uniform_partition(x, m);
    double prev = 1e300;
    for (int n : {2, 5, 12, 30}) {
      ProjectionResult res = project_roughpath(x, n, Pi);
      if (res.realized > res.bound() + slack) ++violations;
      if (res.realized > prev + 1e-12) ++violations;
      prev = res.realized;
    }
  }
  note = std::to_string(violations) + " violations over the 4x4 (rank, partition) grid";
  return violations == 0;
}

// --------------------------------------------------------------- criterion 10

bool criterion10(std::string& note) {
  std::vector<double> times(513);
  for (int i = 0; i < 513; ++i) times[i] = i / 512.0;
  detail::Rng rng(3);
  Mat rate = rng.skew_with_spectrum(2, 1.0, 1.0);
  RoughPath x = synth_pure_area(times, rate);
  std::vector<Vec> y0s = y0_lattice(2, 2);
  const std::vector<std::size_t> meshes = {8, 16, 32, 64, 128};

  WzReport rough = wong_zakai_table(x, make_basis("sine"), y0s, meshes, 16);
  bool monotone = rough.rows.size() == meshes.size() * y0s.size();
  for (std::size_t y = 0; monotone && y < y0s.size(); ++y) {
    for (std::size_t m = 0; m + 1 < meshes.size(); ++m) {
      const WzRow& cur = rough.rows[m * y0s.size() + y];
      const WzRow& nxt = rough.rows[(m + 1) * y0s.size() + y];
      monotone = monotone && cur.y0_index == static_cast<int>(y) &&
                 nxt.sup_err < cur.sup_err;
    }
  }

  WzReport flat = wong_zakai_table(x, make_basis("commuting"), y0s, meshes, 16);
  double worst_flat = 0.0;
  for (const WzRow& r : flat.rows) worst_flat = std::max(worst_flat, r.sup_err);

  note = std::string("non-commuting ") + (monotone ? "monotone" : "NOT monotone") +
         ", commuting worst " + g3(worst_flat);
  return monotone && worst_flat < 1e-8;
}

}  // namespace

int main() {
  struct Entry {
    const char* what;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {
      {"Chen relation exact on 1000 random PL paths", criterion1},
      {"planar closed forms: full-turn area and horizontal distance", criterion2},
      {"vertical geodesics: endpoint, length formula, winding optimality", criterion3},
      {"lower bound: endpoint norm never exceeds control length", criterion4},
      {"upper bound: connect reproduces targets within 3x the norm", criterion5},
      {"norm sandwich and sqrt-homogeneous subadditivity", criterion6},
      {"projections contract the homogeneous metric", criterion7},
      {"geodesic interpolation converges for pure-area and random drivers", criterion8},
      {"finite-rank projection bound holds on a d=100 path", criterion9},
      {"Wong-Zakai: monotone for non-commuting fields, flat for commuting", criterion10},
  };
  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = entries[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s — %s (%s)\n", i + 1, ok ? "PASS" : "FAIL",
                entries[i].what, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
