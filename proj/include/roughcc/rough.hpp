#pragma once

// Grid-sampled rough paths: the Hölder-type metric d_beta, validity checks,
// geodesic interpolation by bounded-variation paths, finite-rank projection,
// and the synthetic path generators used throughout the tests and the CLI.

#include <roughcc/core.hpp>
#include <roughcc/group.hpp>
#include <roughcc/parallel.hpp>
#include <roughcc/paths.hpp>
#include <roughcc/spectral.hpp>

#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

namespace roughcc {

// ---------------------------------------------------------------------------

struct RoughPath {
  std::vector<double> times;
  std::vector<GroupElem> samples;  // samples[0] is the identity
  double alpha = 0.5;
  HomNorms norms;
  double holder = 0.0;  // empirical sup d(x_s, x_t)/|t-s|^alpha over grid pairs

  int dim() const { return samples.empty() ? 0 : samples[0].dim(); }
  std::size_t grid_size() const { return times.size(); }

  GroupElem increment(std::size_t i, std::size_t j) const {
    return gincrement(samples[i], samples[j]);
  }
};

namespace detail {

inline double holder_sup(const RoughPath& x, double alpha) {
  const std::size_t n = x.times.size();
  return parallel_max(n, [&](std::size_t i) {
    double m = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double q = hom_norm(x.increment(i, j), x.norms) /
                 std::pow(x.times[j] - x.times[i], alpha);
      m = std::max(m, q);
    }
    return m;
  });
}

}  // namespace detail

// Normalizes x_{t_0} to the identity (rough paths are increment objects) and
// stores the empirical Hölder norm.
inline RoughPath make_roughpath(std::vector<double> times,
                                std::vector<GroupElem> samples, double alpha,
                                HomNorms norms = HomNorms()) {
  require(times.size() == samples.size() && times.size() >= 2,
          "RoughPath: need >= 2 samples matching times");
  for (std::size_t i = 1; i < times.size(); ++i)
    require(times[i] > times[i - 1], "RoughPath: times not strictly increasing");
  require(alpha > 1.0 / 3.0 && alpha <= 0.5, "RoughPath: alpha in (1/3, 1/2]");
  RoughPath x;
  x.times = std::move(times);
  x.alpha = alpha;
  x.norms = norms;
  GroupElem inv0 = ginv(samples[0]);
  x.samples.reserve(samples.size());
  for (auto& s : samples) x.samples.push_back(gmul(inv0, s));
  x.holder = detail::holder_sup(x, alpha);
  return x;
}

// ---------------------------------------------------------------------------
// metric and checks

// sup over grid pairs s < t of d(x_st, y_st) / |t-s|^beta.  A lower bound of
// the continuous-time sup; grid points are all the data there is.
inline double d_alpha(const RoughPath& x, const RoughPath& y, double beta) {
  require(x.times == y.times, "d_alpha: time grids differ");
  require(beta > 1.0 / 3.0 && beta <= std::min(x.alpha, y.alpha) + 1e-12,
          "d_alpha: beta in (1/3, alpha]");
  const std::size_t n = x.times.size();
  return parallel_max(n, [&](std::size_t i) {
    double m = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      GroupElem xi = x.increment(i, j), yi = y.increment(i, j);
      double q = metric_d(xi, yi, x.norms) /
                 std::pow(x.times[j] - x.times[i], beta);
      m = std::max(m, q);
    }
    return m;
  });
}

struct CheckReport {
  double max_defect = 0.0;    // worst weak-geometricity defect over increments
  double holder_level1 = 0.0; // sup ||a_st|| / |t-s|^alpha
  double holder_level2 = 0.0; // sup ||x^(2)_st||_Sch / |t-s|^{2 alpha}
};

inline CheckReport check(const RoughPath& x) {
  const std::size_t n = x.times.size();
  CheckReport rep;
  std::vector<CheckReport> per(n);
  parallel_blocks(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      CheckReport r;
      for (std::size_t j = i + 1; j < n; ++j) {
        GroupElem g = x.increment(i, j);
        double dt = x.times[j] - x.times[i];
        Mat dev = sym_part(g.A);  // sym(level2) - a (x) a / 2 in exp coords
        double defect = dev.norm() == 0.0 ? 0.0 : schatten(dev, x.norms.p);
        r.max_defect = std::max(r.max_defect, defect);
        r.holder_level1 =
            std::max(r.holder_level1, g.a.norm() / std::pow(dt, x.alpha));
        Mat lvl2 = g.A + 0.5 * g.a * g.a.transpose();
        r.holder_level2 = std::max(
            r.holder_level2, schatten(lvl2, x.norms.p) / std::pow(dt, 2 * x.alpha));
      }
      per[i] = r;
    }
  });
  for (const auto& r : per) {
    rep.max_defect = std::max(rep.max_defect, r.max_defect);
    rep.holder_level1 = std::max(rep.holder_level1, r.holder_level1);
    rep.holder_level2 = std::max(rep.holder_level2, r.holder_level2);
  }
  return rep;
}

// Raw level-2 data in signature coordinates: a_t = x_t - x_0 and
// M_t = int_0^t (x - x_0) (x) dx, with a_0 = M_0 = 0.  The increment of M is
// M_t - M_s - a_s (x) (a_t - a_s).
struct RawDriver {
  std::vector<double> times;
  std::vector<Vec> as;
  std::vector<Mat> M2s;
};

inline CheckReport check_raw(const RawDriver& raw, double alpha,
                             HomNorms norms = HomNorms()) {
  const std::size_t n = raw.times.size();
  require(raw.as.size() == n && raw.M2s.size() == n, "check_raw: size mismatch");
  CheckReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a = raw.as[j] - raw.as[i];
      Mat M = raw.M2s[j] - raw.M2s[i] - raw.as[i] * a.transpose();
      double dt = raw.times[j] - raw.times[i];
      double defect = schatten(sym_part(M) - 0.5 * a * a.transpose(), norms.p);
      rep.max_defect = std::max(rep.max_defect, defect);
      rep.holder_level1 = std::max(rep.holder_level1, a.norm() / std::pow(dt, alpha));
      rep.holder_level2 =
          std::max(rep.holder_level2, schatten(M, norms.p) / std::pow(dt, 2 * alpha));
    }
  return rep;
}

// Conversion of raw data to a group-valued path; refuses non-geometric input.
inline RoughPath from_raw(const RawDriver& raw, double alpha,
                          HomNorms norms = HomNorms(),
                          double defect_tol = 1e-8) {
  CheckReport rep = check_raw(raw, alpha, norms);
  if (rep.max_defect > defect_tol) throw NotWeaklyGeometric(rep.max_defect);
  std::vector<GroupElem> samples;
  samples.reserve(raw.times.size());
  for (std::size_t i = 0; i < raw.times.size(); ++i) {
    Mat A = skew_part(raw.M2s[i]);  // sym part is a (x) a / 2 up to the defect
    samples.emplace_back(raw.as[i], A);
  }
  return make_roughpath(raw.times, std::move(samples), alpha, norms);
}

// ---------------------------------------------------------------------------
// geodesic interpolation

// Uniform sub-partition of the grid with the requested interval count:
// nearest grid indices to the uniform targets, deduplicated, endpoints kept.
inline std::vector<std::size_t> uniform_partition(const RoughPath& x,
                                                  std::size_t intervals) {
  require(intervals >= 1, "uniform_partition: need >= 1 interval");
  const double t0 = x.times.front(), T = x.times.back();
  std::vector<std::size_t> idx;
  idx.push_back(0);
  for (std::size_t k = 1; k <= intervals; ++k) {
    double target = t0 + (T - t0) * static_cast<double>(k) / intervals;
    auto it = std::lower_bound(x.times.begin(), x.times.end(), target);
    std::size_t i = it - x.times.begin();
    if (i == x.times.size()) i = x.times.size() - 1;
    else if (i > 0 && target - x.times[i - 1] < x.times[i] - target) --i;
    if (i > idx.back()) idx.push_back(i);
  }
  if (idx.back() != x.times.size() - 1) idx.push_back(x.times.size() - 1);
  return idx;
}

// PL path whose signature matches every partition increment of x exactly:
// per interval the connecting curve of the increment, left-translated and
// polygonized with area-exact radii.
inline PLPath geodesic_interpolation(const RoughPath& x,
                                     const std::vector<std::size_t>& Pi,
                                     int K = 64,
                                     std::vector<std::size_t>* partition_vertices = nullptr) {
  require(Pi.size() >= 2, "geodesic_interpolation: need >= 2 partition points");
  for (std::size_t k = 0; k < Pi.size(); ++k) {
    require(Pi[k] < x.times.size(), "geodesic_interpolation: index out of grid");
    if (k) require(Pi[k] > Pi[k - 1], "geodesic_interpolation: indices not increasing");
  }
  const int d = x.dim();
  PLPath out;
  out.times.push_back(x.times[Pi[0]]);
  out.points.push_back(x.samples[Pi[0]].a);
  if (partition_vertices) partition_vertices->assign(1, 0);
  for (std::size_t k = 0; k + 1 < Pi.size(); ++k) {
    const double ta = x.times[Pi[k]], tb = x.times[Pi[k + 1]];
    GroupElem g = x.increment(Pi[k], Pi[k + 1]);
    PLPath local = polygonize(connect(g), d, K);
    const Vec base = x.samples[Pi[k]].a;
    for (std::size_t v = 1; v < local.points.size(); ++v) {
      out.times.push_back(ta + (tb - ta) * local.times[v]);
      out.points.push_back(base + local.points[v]);
    }
    if (local.points.size() == 1) {  // zero increment: hold the point
      out.times.push_back(tb);
      out.points.push_back(base);
    }
    out.points.back() = x.samples[Pi[k + 1]].a;  // pin the interpolation node
    out.times.back() = tb;
    if (partition_vertices) partition_vertices->push_back(out.points.size() - 1);
  }
  return out;
}

// S^2 of the interpolation, sampled on the full grid of x (the common grid
// used by the convergence metrics).  Streams interval-by-interval so the
// PL path is never materialized globally.
inline RoughPath interpolate_on_grid(const RoughPath& x,
                                     const std::vector<std::size_t>& Pi, int K = 64) {
  require(Pi.size() >= 2 && Pi.front() == 0 && Pi.back() == x.times.size() - 1,
          "interpolate_on_grid: partition must span the grid");
  const int d = x.dim();
  std::vector<GroupElem> ys(x.times.size());
  ys[0] = GroupElem::identity(d);
  GroupElem base = GroupElem::identity(d);
  for (std::size_t k = 0; k + 1 < Pi.size(); ++k) {
    const std::size_t ia = Pi[k], ib = Pi[k + 1];
    const double ta = x.times[ia], tb = x.times[ib];
    GroupElem g = x.increment(ia, ib);
    PLPath local = polygonize(connect(g), d, K);
    // running prefix signature along the local path
    Vec a_run = Vec::Zero(d);
    Mat A_run = Mat::Zero(d, d);
    std::size_t v = 0;
    for (std::size_t i = ia + 1; i <= ib; ++i) {
      double s = (x.times[i] - ta) / (tb - ta);
      while (v + 1 < local.times.size() && local.times[v + 1] <= s) {
        Vec delta = local.points[v + 1] - local.points[v];
        A_run += 0.5 * wedge(a_run, delta);
        a_run += delta;
        ++v;
      }
      GroupElem partial;
      if (v + 1 < local.times.size()) {
        double f = (s - local.times[v]) / (local.times[v + 1] - local.times[v]);
        Vec delta = f * (local.points[v + 1] - local.points[v]);
        partial.a = a_run + delta;
        partial.A = A_run + 0.5 * wedge(a_run, delta);
      } else {
        partial.a = a_run;
        partial.A = A_run;
      }
      ys[i] = gmul(base, partial);
    }
    while (v + 1 < local.times.size()) {  // finish the interval
      Vec delta = local.points[v + 1] - local.points[v];
      A_run += 0.5 * wedge(a_run, delta);
      a_run += delta;
      ++v;
    }
    GroupElem full;
    full.a = a_run;
    full.A = A_run;
    base = gmul(base, full);
  }
  RoughPath y;
  y.times = x.times;
  y.samples = std::move(ys);
  y.alpha = x.alpha;
  y.norms = x.norms;
  y.holder = detail::holder_sup(y, y.alpha);
  return y;
}

// ---------------------------------------------------------------------------
// convergence study

struct ConvergenceRow {
  double mesh;        // partition mesh width
  double param;       // interval count (or rank for the projection pipeline)
  double d_beta;      // d_beta(S^2(x^Pi), x) on the common grid
  double sup_d;       // sup_t d(x^Pi_t, x_t)
  double seconds;     // wall time for this row
  // interpolation-inequality bookkeeping
  double holder_x = 0.0, holder_y = 0.0;  // empirical alpha-Hölder constants
  double eps_pairs = 0.0;                 // sup over pairs of d(x_st, y_st)
  double bound_spec = 0.0;                // (2 C sup_t d)^theta C^{1-theta}
  double bound_rigorous = 0.0;            // eps_pairs^theta (2 C)^{1-theta}
};

struct ConvergenceReport {
  double beta = 0.0;
  std::vector<ConvergenceRow> rows;
  bool monotone = true;  // soft flag: d_beta nonincreasing down the rows
};

namespace detail {

struct PairStats {
  double d_beta = 0.0;
  double eps_pairs = 0.0;
};

inline PairStats pair_stats(const RoughPath& x, const RoughPath& y, double beta) {
  const std::size_t n = x.times.size();
  std::vector<PairStats> per(n);
  parallel_blocks(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      PairStats s;
      for (std::size_t j = i + 1; j < n; ++j) {
        GroupElem xi = x.increment(i, j), yi = y.increment(i, j);
        double dist = metric_d(xi, yi, x.norms);
        s.eps_pairs = std::max(s.eps_pairs, dist);
        s.d_beta = std::max(
            s.d_beta, dist / std::pow(x.times[j] - x.times[i], beta));
      }
      per[i] = s;
    }
  });
  PairStats out;
  for (const auto& s : per) {
    out.d_beta = std::max(out.d_beta, s.d_beta);
    out.eps_pairs = std::max(out.eps_pairs, s.eps_pairs);
  }
  return out;
}

}  // namespace detail

inline ConvergenceReport convergence_study(const RoughPath& x, double beta,
                                           const std::vector<std::size_t>& interval_counts,
                                           int K = 64) {
  require(beta > 1.0 / 3.0 && beta < x.alpha, "convergence_study: beta in (1/3, alpha)");
  ConvergenceReport rep;
  rep.beta = beta;
  const double theta = 1.0 - beta / x.alpha;
  const double span = x.times.back() - x.times.front();
  for (std::size_t n_int : interval_counts) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::size_t> Pi = uniform_partition(x, n_int);
    RoughPath y = interpolate_on_grid(x, Pi, K);
    detail::PairStats ps = detail::pair_stats(x, y, beta);
    double sup_d = parallel_max(x.times.size(), [&](std::size_t i) {
      return metric_d(y.samples[i], x.samples[i], x.norms);
    });
    ConvergenceRow row;
    row.mesh = span / static_cast<double>(n_int);
    row.param = static_cast<double>(n_int);
    row.d_beta = ps.d_beta;
    row.sup_d = sup_d;
    row.holder_x = x.holder;
    row.holder_y = y.holder;
    row.eps_pairs = ps.eps_pairs;
    const double C = std::max(x.holder, y.holder);
    row.bound_spec = std::pow(2.0 * C * sup_d, theta) * std::pow(C, 1.0 - theta);
    row.bound_rigorous = std::pow(ps.eps_pairs, theta) * std::pow(2.0 * C, 1.0 - theta);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.rows.empty() && row.d_beta > rep.rows.back().d_beta) rep.monotone = false;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// finite-rank projection pipeline

struct ProjectionResult {
  RoughPath projected;
  Subspace F;
  double realized = 0.0;     // sup_t d(pr x_t, x_t)
  double oscillation = 0.0;  // o_{|Pi|}: max d over grid pairs within the mesh
  double tail = 0.0;         // max_t d(0, pr_{F_{t,n}^perp} x_t^(2))
  double bound() const { return 2.0 * oscillation + tail; }
};

inline ProjectionResult project_roughpath(const RoughPath& x, int n_rank,
                                          const std::vector<std::size_t>& Pi) {
  require(n_rank >= 1, "project_roughpath: rank >= 1");
  for (std::size_t k = 0; k < Pi.size(); ++k) {
    require(Pi[k] < x.times.size(), "project_roughpath: index out of grid");
    if (k) require(Pi[k] > Pi[k - 1], "project_roughpath: indices not increasing");
  }
  const int d = x.dim();
  ProjectionResult res;

  // F = span over t in Pi of {a_t} and the top-n spectral planes of A_t
  std::vector<Vec> cols;
  double tail = 0.0;
  for (std::size_t idx : Pi) {
    const GroupElem& g = x.samples[idx];
    SkewSpectrum sp = skew_canonical(g.A);
    Mat local(d, 1 + 2 * std::min<std::size_t>(n_rank, sp.sigmas.size()));
    int c = 0;
    local.col(c++) = g.a;
    for (std::size_t j = 0; j < sp.sigmas.size() && j < static_cast<std::size_t>(n_rank); ++j) {
      local.col(c++) = sp.planes[j].first;
      local.col(c++) = sp.planes[j].second;
    }
    for (int i = 0; i < c; ++i) cols.push_back(local.col(i));
    Subspace Ft = Subspace::from_span(local);
    Mat Pc = Mat::Identity(d, d) - Ft.projector();
    Mat tail_mat = Pc * g.A * Pc;
    tail = std::max(tail, std::sqrt(schatten(skew_part(tail_mat), x.norms.p)));
  }
  Mat span(d, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) span.col(static_cast<Eigen::Index>(i)) = cols[i];
  res.F = Subspace::from_span(span);
  res.tail = tail;

  // oscillation at the partition mesh scale
  double mesh = 0.0;
  for (std::size_t k = 0; k + 1 < Pi.size(); ++k)
    mesh = std::max(mesh, x.times[Pi[k + 1]] - x.times[Pi[k]]);
  const std::size_t n = x.times.size();
  res.oscillation = parallel_max(n, [&](std::size_t i) {
    double m = 0.0;
    for (std::size_t j = i + 1; j < n && x.times[j] - x.times[i] <= mesh * (1 + 1e-12); ++j)
      m = std::max(m, hom_norm(x.increment(i, j), x.norms));
    return m;
  });

  std::vector<GroupElem> proj;
  proj.reserve(n);
  for (const auto& s : x.samples) proj.push_back(project_group(s, res.F));
  res.realized = parallel_max(n, [&](std::size_t i) {
    return metric_d(proj[i], x.samples[i], x.norms);
  });
  RoughPath y;
  y.times = x.times;
  y.samples = std::move(proj);
  y.alpha = x.alpha;
  y.norms = x.norms;
  y.holder = detail::holder_sup(y, y.alpha);
  res.projected = std::move(y);
  return res;
}

// ---------------------------------------------------------------------------
// synthetic generators

// exact step-2 lift of a PL path, sampled at its vertices
inline RoughPath synth_lift(const PLPath& p, double alpha, HomNorms norms = HomNorms()) {
  p.validate();
  const int d = p.dim();
  std::vector<GroupElem> samples;
  Vec a = Vec::Zero(d);
  Mat A = Mat::Zero(d, d);
  samples.push_back(GroupElem::identity(d));
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    Vec delta = p.points[i] - p.points[i - 1];
    A += 0.5 * wedge(a, delta);
    a += delta;
    GroupElem g;
    g.a = a;
    g.A = A;
    samples.push_back(std::move(g));
  }
  return make_roughpath(p.times, std::move(samples), alpha, norms);
}

// x_t = (0, (t - t_0) R): a central one-parameter subgroup (alpha = 1/2 exact)
inline RoughPath synth_pure_area(const std::vector<double>& times, const Mat& rate,
                                 HomNorms norms = HomNorms()) {
  require(skew_defect(rate) <= tol::skew, "synth_pure_area: rate must be skew");
  const int d = static_cast<int>(rate.rows());
  std::vector<GroupElem> samples;
  for (double t : times) {
    GroupElem g;
    g.a = Vec::Zero(d);
    g.A = (t - times.front()) * rate;
    samples.push_back(std::move(g));
  }
  return make_roughpath(times, std::move(samples), 0.5, norms);
}

// lift of a PL path plus a constant-rate vertical drift
inline RoughPath synth_lift_plus_area(const PLPath& p, const Mat& drift,
                                      double alpha, HomNorms norms = HomNorms()) {
  p.validate();
  require(skew_defect(drift) <= tol::skew, "synth_lift_plus_area: drift must be skew");
  const int d = p.dim();
  std::vector<GroupElem> samples;
  Vec a = Vec::Zero(d);
  Mat A = Mat::Zero(d, d);
  samples.push_back(GroupElem::identity(d));
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    Vec delta = p.points[i] - p.points[i - 1];
    A += 0.5 * wedge(a, delta);
    a += delta;
    GroupElem g;
    g.a = a;
    g.A = A + (p.times[i] - p.times.front()) * drift;
    samples.push_back(std::move(g));
  }
  return make_roughpath(p.times, std::move(samples), alpha, norms);
}

namespace detail {

// Self-contained gaussian source: fixed consumption order, reproducible for
// a given seed and platform.
struct Rng {
  std::mt19937_64 eng;
  bool have_spare = false;
  double spare = 0.0;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform01() {  // in (0, 1)
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
  }
  double gaussian() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = uniform01(), u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1)), th = 2.0 * kPi * u2;
    spare = r * std::sin(th);
    have_spare = true;
    return r * std::cos(th);
  }
  Vec gvec(int d) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = gaussian();
    return v;
  }
  Vec unit(int d) {
    Vec v = gvec(d);
    double n = v.norm();
    return n > 0 ? Vec(v / n) : Vec::Unit(d, 0);
  }
  // Haar-ish orthogonal matrix via QR of a gaussian matrix
  Mat orthogonal(int d) {
    Mat G(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) G(i, j) = gaussian();
    Eigen::HouseholderQR<Mat> qr(G);
    return qr.householderQ() * Mat::Identity(d, d);
  }
  // random skew matrix with spectrum sigma_j = scale * j^{-decay}
  Mat skew_with_spectrum(int d, double scale, double decay) {
    Mat Q = orthogonal(d);
    Mat A = Mat::Zero(d, d);
    for (int j = 0; 2 * j + 1 < d; ++j) {
      double s = scale * std::pow(static_cast<double>(j + 1), -decay);
      A += s * wedge(Q.col(2 * j), Q.col(2 * j + 1));
    }
    return A;
  }
};

}  // namespace detail

// Seeded weakly geometric path on a dyadic grid of 2^levels intervals over
// [0, 1], built by midpoint refinement: the midpoint of a filled interval is
// the group square root of the increment times an innovation whose vector
// and area magnitudes are exactly c1 h^alpha and c2 h^{2 alpha}.
//
// The seed draws one Haar orthogonal frame; innovation directions and area
// planes then cycle deterministically through that frame by level.  All the
// homogeneous quantities (Hölder constants, d_beta columns) are invariant
// under the frame rotation, so they are reproducible across seeds while the
// sample coordinates themselves are seed-dependent.  This is the multiscale
// zigzag construction (a Weierstrass-type curve with exact alpha-scaling),
// randomized by orientation.
struct RandomWgParams {
  int dim = 4;
  int levels = 9;
  double alpha = 0.45;  // declared Hölder class of the output
  double gamma = 0.5;   // inner scaling exponent of the innovations, in [alpha, 1]
  double c1 = 1.0;      // vector innovation scale
  double c2 = 1.0;      // area innovation scale
  double decay = 2.0;   // spectrum decay of area innovations
  std::uint64_t seed = 1;
};

inline RoughPath synth_random_wg(const RandomWgParams& prm, HomNorms norms = HomNorms()) {
  require(prm.levels >= 1 && prm.levels <= 20, "synth_random_wg: levels in [1, 20]");
  require(prm.dim >= 2, "synth_random_wg: dim >= 2");
  require(prm.alpha <= prm.gamma && prm.gamma <= 1.0, "synth_random_wg: alpha <= gamma <= 1");
  const int d = prm.dim;
  const std::size_t n = (std::size_t{1} << prm.levels) + 1;
  detail::Rng rng(prm.seed);
  const Mat Q = rng.orthogonal(d);

  // Per-level frames follow the orbit of a block rotation R with pairwise
  // incommensurate angles: v_lev = R^lev v_0, A_lev = R^lev A_0 R^-lev.
  // Every dyadic subtree is then an isometric scaled copy of the whole one,
  // which keeps the local Hölder geometry the same at all levels.
  Mat R = Mat::Identity(d, d);
  for (int j = 0; 2 * j + 1 < d; ++j) {
    double phi = 2.0 * kPi * std::fmod(std::sqrt(2.0) * (j + 1), 1.0);
    Mat blk(2, 2);
    blk << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    Mat pair(d, 2);
    pair.col(0) = Q.col(2 * j);
    pair.col(1) = Q.col(2 * j + 1);
    R += pair * (blk - Mat::Identity(2, 2)) * pair.transpose();
  }
  Vec v = Q.col(0);
  Mat A0 = Mat::Zero(d, d);
  for (int j = 0; 2 * j + 1 < d; ++j)
    A0 += std::pow(j + 1.0, -prm.decay) * wedge(Q.col(2 * j), Q.col(2 * j + 1));

  auto innovation = [&](double h, const Vec& dir, const Mat& plane) {
    GroupElem g;
    g.a = prm.c1 * std::pow(h, prm.gamma) * dir;
    g.A = prm.c2 * std::pow(h, 2.0 * prm.gamma) * plane;
    return g;
  };
  std::vector<GroupElem> samples(n);
  samples[0] = GroupElem::identity(d);
  samples[n - 1] = innovation(1.0, v, A0);
  for (int lev = 1; lev <= prm.levels; ++lev) {
    v = R * v;
    A0 = skew_part(Mat(R * A0 * R.transpose()));  // scrub conjugation roundoff
    const std::size_t stride = std::size_t{1} << (prm.levels - lev);
    const double h = std::pow(0.5, lev);
    for (std::size_t m = stride; m < n; m += 2 * stride) {
      const GroupElem& xs = samples[m - stride];
      const GroupElem& xt = samples[m + stride];
      GroupElem inc = gincrement(xs, xt);
      GroupElem half;  // exact group square root of the increment
      half.a = 0.5 * inc.a;
      half.A = 0.5 * inc.A;
      samples[m] = gmul(xs, gmul(half, innovation(h, v, A0)));
    }
  }
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i)
    times[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return make_roughpath(std::move(times), std::move(samples), prm.alpha, norms);
}

}  // namespace roughcc
