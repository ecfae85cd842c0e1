#pragma once

// Desk-scale rough drivers: a step-2 flow scheme (second-order Euler using
// exactly the data a step-2 rough path carries) and the Wong-Zakai table
// comparing ODE flows of the polygonal approximants against it.

#include <roughcc/core.hpp>
#include <roughcc/rough.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace roughcc {

// ---------------------------------------------------------------------------
// smooth vector-field families with exact Jacobians

struct Field {
  enum Kind { CONSTANT, LINEAR, SINE, BUMP } kind = CONSTANT;
  Vec v;        // CONSTANT value / SINE amplitude / BUMP amplitude
  Mat B;        // LINEAR matrix
  Vec k;        // SINE wave vector
  double phase = 0.0;
  Vec center;   // BUMP center

  Vec eval(const Vec& xi) const {
    switch (kind) {
      case CONSTANT: return v;
      case LINEAR: return B * xi;
      case SINE: return v * std::sin(k.dot(xi) + phase);
      case BUMP: return v / (1.0 + (xi - center).squaredNorm());
    }
    throw Error("Field: bad kind");
  }

  Mat jacobian(const Vec& xi) const {
    const int m = static_cast<int>(xi.size());
    switch (kind) {
      case CONSTANT: return Mat::Zero(m, m);
      case LINEAR: return B;
      case SINE: return std::cos(k.dot(xi) + phase) * (v * k.transpose());
      case BUMP: {
        double w = 1.0 + (xi - center).squaredNorm();
        return (-2.0 / (w * w)) * (v * (xi - center).transpose());
      }
    }
    throw Error("Field: bad kind");
  }
};

struct FieldBasis {
  int m = 0;  // state dimension
  std::vector<Field> fields;

  int driver_dim() const { return static_cast<int>(fields.size()); }

  // analytic Jacobians must agree with centered differences at a few probes
  void validate() const {
    require(m >= 1 && !fields.empty(), "FieldBasis: empty");
    const double h = 1e-6;
    for (int probe = 0; probe < 3; ++probe) {
      Vec xi(m);
      for (int i = 0; i < m; ++i) xi(i) = 0.3 * (probe + 1) * ((i % 2) ? -1.0 : 1.0) + 0.1 * i;
      for (const Field& f : fields) {
        Mat J = f.jacobian(xi);
        for (int c = 0; c < m; ++c) {
          Vec e = Vec::Zero(m);
          e(c) = h;
          Vec fd = (f.eval(xi + e) - f.eval(xi - e)) / (2.0 * h);
          require((fd - J.col(c)).norm() <= 1e-5 * (1.0 + J.col(c).norm()),
                  "FieldBasis: analytic Jacobian disagrees with finite differences");
        }
      }
    }
  }

  Mat values(const Vec& xi) const {  // m x M matrix of field values
    Mat F(m, driver_dim());
    for (int j = 0; j < driver_dim(); ++j) F.col(j) = fields[j].eval(xi);
    return F;
  }
};

// named bases for the CLI and the demos (state dimension 2)
inline FieldBasis make_basis(const std::string& name) {
  FieldBasis b;
  b.m = 2;
  auto vec2 = [](double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
  };
  if (name == "commuting") {  // constant fields: zero brackets, flat tables
    Field f1, f2;
    f1.kind = Field::CONSTANT;
    f1.v = vec2(0.7, 0.2);
    f2.kind = Field::CONSTANT;
    f2.v = vec2(-0.1, 0.5);
    b.fields = {f1, f2};
  } else if (name == "linear") {  // commuting linear pair
    Field f1, f2;
    f1.kind = Field::LINEAR;
    f1.B = (Mat(2, 2) << 0.4, 0.0, 0.0, -0.3).finished();
    f2.kind = Field::LINEAR;
    f2.B = (Mat(2, 2) << -0.2, 0.0, 0.0, 0.5).finished();
    b.fields = {f1, f2};
  } else if (name == "sine") {  // non-commuting smooth pair
    Field f1, f2;
    f1.kind = Field::SINE;
    f1.v = vec2(1.0, 0.0);
    f1.k = vec2(0.0, 1.3);
    f1.phase = 0.4;
    f2.kind = Field::SINE;
    f2.v = vec2(0.0, 1.0);
    f2.k = vec2(1.1, 0.0);
    f2.phase = -0.2;
    b.fields = {f1, f2};
  } else if (name == "bump") {  // non-commuting localized pair
    Field f1, f2;
    f1.kind = Field::BUMP;
    f1.v = vec2(1.0, 0.3);
    f1.center = vec2(0.5, -0.2);
    f2.kind = Field::BUMP;
    f2.v = vec2(-0.2, 1.0);
    f2.center = vec2(-0.4, 0.3);
    b.fields = {f1, f2};
  } else {
    throw Error("make_basis: unknown basis '" + name + "'");
  }
  b.validate();
  return b;
}

// ---------------------------------------------------------------------------
// the step-2 flow scheme

struct FlowResult {
  std::vector<double> times;
  std::vector<Vec> ys;
  std::string scheme;
  double mesh = 0.0;
};

// One step y <- y + f(y) a_st + sum_{k,l} Df_k(y) f_l(y) (x^2_st)_{lk} with
// x^2 = A + a (x) a / 2 (the (l,k) entry integrates dx^l-before-dx^k).
inline Vec flow_step(const FieldBasis& basis, const Vec& y, const GroupElem& inc) {
  Mat F = basis.values(y);                                   // m x M
  Mat X2 = inc.A + 0.5 * inc.a * inc.a.transpose();          // M x M
  Vec out = y + F * inc.a;
  for (int k = 0; k < basis.driver_dim(); ++k) {
    Vec w = F * X2.col(k);  // sum_l f_l(y) (x^2)_{lk}
    out += basis.fields[k].jacobian(y) * w;
  }
  return out;
}

inline FlowResult rough_flow(const RoughPath& x, const FieldBasis& basis, const Vec& y0) {
  require(basis.driver_dim() == x.dim(), "rough_flow: basis size != driver dim");
  require(y0.size() == basis.m, "rough_flow: initial state has wrong dimension");
  FlowResult res;
  res.scheme = "step2-euler";
  res.times = x.times;
  double mesh = 0.0;
  for (std::size_t i = 1; i < x.times.size(); ++i)
    mesh = std::max(mesh, x.times[i] - x.times[i - 1]);
  res.mesh = mesh;
  res.ys.reserve(x.times.size());
  Vec y = y0;
  res.ys.push_back(y);
  for (std::size_t i = 1; i < x.times.size(); ++i) {
    y = flow_step(basis, y, x.increment(i - 1, i));
    res.ys.push_back(y);
  }
  return res;
}

// Raw-data entry point: the weak-geometricity gate.  Refuses drivers whose
// symmetry defect exceeds the tolerance, reporting the measured defect.
inline FlowResult rough_flow(const RawDriver& raw, double alpha, const FieldBasis& basis,
                             const Vec& y0, HomNorms norms = HomNorms(),
                             double defect_tol = 1e-8) {
  RoughPath x = from_raw(raw, alpha, norms, defect_tol);  // throws with defect
  return rough_flow(x, basis, y0);
}

// ---------------------------------------------------------------------------
// ODE flows of the PL approximants and the Wong-Zakai table

// RK4 for y' = f(y) u with u constant per PL segment; steps aligned to the
// segment ends (and to requested sample times), substeps per segment fixed.
inline Vec ode_rk4_along(const FieldBasis& basis, const PLPath& path, const Vec& y0,
                         const std::vector<double>& sample_times,
                         std::vector<Vec>* samples_out = nullptr, int substeps = 4) {
  Vec y = y0;
  std::size_t si = 0;
  if (samples_out) samples_out->clear();
  auto emit = [&](double t) {
    while (si < sample_times.size() && sample_times[si] <= t + 1e-15) {
      if (samples_out) samples_out->push_back(y);
      ++si;
    }
  };
  emit(path.times.front());
  for (std::size_t seg = 1; seg < path.times.size(); ++seg) {
    const double t0 = path.times[seg - 1], t1 = path.times[seg];
    const Vec u = (path.points[seg] - path.points[seg - 1]) / (t1 - t0);
    // split at interior sample times so emissions are exact
    std::vector<double> cuts;
    cuts.push_back(t0);
    for (std::size_t k = si; k < sample_times.size() && sample_times[k] < t1 - 1e-15; ++k)
      if (sample_times[k] > t0 + 1e-15) cuts.push_back(sample_times[k]);
    cuts.push_back(t1);
    for (std::size_t c = 1; c < cuts.size(); ++c) {
      const double h = (cuts[c] - cuts[c - 1]) / substeps;
      for (int s = 0; s < substeps; ++s) {
        auto f = [&](const Vec& z) { return Vec(basis.values(z) * u); };
        Vec k1 = f(y);
        Vec k2 = f(y + 0.5 * h * k1);
        Vec k3 = f(y + 0.5 * h * k2);
        Vec k4 = f(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      emit(cuts[c]);
    }
  }
  emit(path.times.back() + 1.0);  // flush
  return y;
}

struct WzRow {
  double mesh;
  int y0_index;
  double sup_err;
};

struct WzReport {
  std::vector<WzRow> rows;
  std::vector<Vec> y0s;
  double seconds = 0.0;
};

// For each mesh: ODE-flow the polygonal interpolation from every initial
// point and record the sup over the partition nodes of the distance to the
// rough flow on the full grid (the reference).  Node times are where the
// interpolant agrees with the driver, so commuting examples come out flat at
// solver precision.  Surrogate for the C(R^m) norm: a fixed lattice of
// initial conditions.
inline WzReport wong_zakai_table(const RoughPath& x, const FieldBasis& basis,
                                 const std::vector<Vec>& y0s,
                                 const std::vector<std::size_t>& interval_counts,
                                 int K = 64, int substeps = 4) {
  require(basis.m <= 3, "wong_zakai_table: state dimension capped at 3");
  auto t_start = std::chrono::steady_clock::now();
  WzReport rep;
  rep.y0s = y0s;
  std::vector<FlowResult> refs;
  refs.reserve(y0s.size());
  for (const Vec& y0 : y0s) refs.push_back(rough_flow(x, basis, y0));
  const double span = x.times.back() - x.times.front();
  for (std::size_t n_int : interval_counts) {
    std::vector<std::size_t> Pi = uniform_partition(x, n_int);
    PLPath approx = geodesic_interpolation(x, Pi, K);
    std::vector<double> node_times;
    node_times.reserve(Pi.size());
    for (std::size_t idx : Pi) node_times.push_back(x.times[idx]);
    for (std::size_t yi = 0; yi < y0s.size(); ++yi) {
      std::vector<Vec> traj;
      ode_rk4_along(basis, approx, y0s[yi], node_times, &traj, substeps);
      require(traj.size() == Pi.size(), "wong_zakai_table: sampling misaligned");
      double err = 0.0;
      for (std::size_t k = 0; k < Pi.size(); ++k)
        err = std::max(err, (traj[k] - refs[yi].ys[Pi[k]]).norm());
      rep.rows.push_back({span / static_cast<double>(n_int), static_cast<int>(yi), err});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return rep;
}

// fixed lattice of initial conditions in [-1, 1]^m (documented in reports)
inline std::vector<Vec> y0_lattice(int m, int per_axis) {
  require(m >= 1 && per_axis >= 1, "y0_lattice: bad shape");
  std::vector<Vec> out;
  std::vector<int> idx(m, 0);
  for (;;) {
    Vec y(m);
    for (int i = 0; i < m; ++i)
      y(i) = per_axis == 1 ? 0.0 : -1.0 + 2.0 * idx[i] / (per_axis - 1.0);
    out.push_back(y);
    int c = 0;
    while (c < m && ++idx[c] == per_axis) idx[c++] = 0;
    if (c == m) break;
  }
  return out;
}

}  // namespace roughcc
