#pragma once

// Bounded-variation paths and their exact step-2 signatures; controls
// (piecewise-constant and spiral) with the closed-form evolution map;
// sub-Riemannian geodesics of the step-2 group; the explicit vertical
// geodesic; the connecting curve behind the CC upper bound; and the
// area-exact polygonal realization of controls.

#include <roughcc/core.hpp>
#include <roughcc/group.hpp>
#include <roughcc/spectral.hpp>

#include <complex>
#include <vector>

namespace roughcc {

// ---------------------------------------------------------------------------
// piecewise-linear paths

struct PLPath {
  std::vector<double> times;
  std::vector<Vec> points;

  void validate() const {
    require(times.size() == points.size() && times.size() >= 1,
            "PLPath: times/points size mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
      require(times[i] > times[i - 1], "PLPath: times not strictly increasing");
  }

  int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
  std::size_t segments() const { return times.empty() ? 0 : times.size() - 1; }

  double length() const {
    double L = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) L += (points[i] - points[i - 1]).norm();
    return L;
  }

  // position at time t (affine between vertices)
  Vec at(double t) const {
    if (t <= times.front()) return points.front();
    if (t >= times.back()) return points.back();
    std::size_t i = 1;
    while (times[i] < t) ++i;
    double f = (t - times[i - 1]) / (times[i] - times[i - 1]);
    return points[i - 1] + f * (points[i] - points[i - 1]);
  }
};

inline PLPath reverse(const PLPath& p) {
  PLPath r;
  const double T = p.times.back() + p.times.front();
  for (std::size_t i = p.times.size(); i-- > 0;) {
    r.times.push_back(T - p.times[i]);
    r.points.push_back(p.points[i]);
  }
  return r;
}

// Exact step-2 signature in exponential coordinates.  Each segment
// contributes (delta, 0); Chen's relation does the rest.
inline GroupElem pl_signature(const PLPath& p) {
  p.validate();
  const int d = p.dim();
  Vec a = Vec::Zero(d);
  Mat A = Mat::Zero(d, d);
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    Vec delta = p.points[i] - p.points[i - 1];
    A += 0.5 * wedge(a, delta);
    a += delta;
  }
  GroupElem g;
  g.a = std::move(a);
  g.A = std::move(A);
  return g;
}

// signature of the restriction to [times[i], times[j]] (vertex indices)
inline GroupElem pl_signature_between(const PLPath& p, std::size_t i, std::size_t j) {
  require(i <= j && j < p.points.size(), "pl_signature_between: bad indices");
  const int d = p.dim();
  Vec a = Vec::Zero(d);
  Mat A = Mat::Zero(d, d);
  for (std::size_t k = i + 1; k <= j; ++k) {
    Vec delta = p.points[k] - p.points[k - 1];
    A += 0.5 * wedge(a, delta);
    a += delta;
  }
  GroupElem g;
  g.a = std::move(a);
  g.A = std::move(A);
  return g;
}

// ---------------------------------------------------------------------------
// closed-form trigonometric calculus: finite sums of c * s^m * cos/sin(w s)
// with m in {0, 1}.  Everything the evolution map and the geodesics need
// integrates exactly within this family.

namespace trig {

struct Term {
  double c;      // coefficient
  int m;         // power of s (0 or 1)
  double w;      // angular frequency, >= 0 after normalization
  bool is_sin;   // sin vs cos
};

using Poly = std::vector<Term>;

inline void push(Poly& p, double c, int m, double w, bool is_sin) {
  if (c == 0.0) return;
  if (w < 0) {  // cos is even, sin is odd
    w = -w;
    if (is_sin) c = -c;
  }
  if (w == 0.0 && is_sin) return;  // sin(0) = 0
  p.push_back({c, m, w, is_sin});
}

// product of two polys (product-to-sum identities)
inline Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const Term& a : f)
    for (const Term& b : g) {
      double c = 0.5 * a.c * b.c;
      int m = a.m + b.m;
      double wm = a.w - b.w, wp = a.w + b.w;
      if (!a.is_sin && !b.is_sin) {        // cos cos
        push(out, c, m, wm, false);
        push(out, c, m, wp, false);
      } else if (a.is_sin && b.is_sin) {   // sin sin
        push(out, c, m, wm, false);
        push(out, -c, m, wp, false);
      } else if (a.is_sin && !b.is_sin) {  // sin cos
        push(out, c, m, wp, true);
        push(out, c, m, wm, true);
      } else {                             // cos sin
        push(out, c, m, wp, true);
        push(out, -c, m, wm, true);
      }
    }
  return out;
}

// int_0^t s^m cos(w s) ds and the sin version.  Series branch keeps small
// w t accurate (the closed forms cancel catastrophically near 0).
inline double integral(int m, double w, bool is_sin, double t) {
  const double x = w * t;
  if (std::abs(x) < 0.5) {
    double sum = 0.0, term;
    if (!is_sin) {
      // cos: t^{m+1} sum (-1)^k x^{2k} / ((2k)! (2k+m+1)) for m in {0,1}
      term = 1.0 / (m + 1);
      for (int k = 0;; ++k) {
        sum += term;
        double next = -term * x * x * (2.0 * k + m + 1) /
                      ((2.0 * k + 1) * (2.0 * k + 2) * (2.0 * k + m + 3));
        if (std::abs(next) < 1e-20 * std::abs(sum) + 1e-300) break;
        term = next;
      }
      return std::pow(t, m + 1) * sum;
    }
    // sin: t^{m+1} sum (-1)^k x^{2k+1} / ((2k+1)! (2k+m+2))
    term = x / (m + 2);
    for (int k = 0;; ++k) {
      sum += term;
      double next = -term * x * x * (2.0 * k + m + 2) /
                    ((2.0 * k + 2) * (2.0 * k + 3) * (2.0 * k + m + 4));
      if (std::abs(next) < 1e-20 * std::abs(sum) + 1e-300) break;
      term = next;
    }
    return std::pow(t, m + 1) * sum;
  }
  const double s = std::sin(x), c = std::cos(x);
  if (m == 0) return is_sin ? (1.0 - c) / w : s / w;
  if (m == 1)
    return is_sin ? (s / w - t * c) / w : ((c - 1.0) / w + t * s) / w;
  throw Error("trig::integral: unsupported power");
}

inline double integral(const Poly& p, double t) {
  double v = 0.0;
  for (const Term& a : p) v += a.c * integral(a.m, a.w, a.is_sin, t);
  return v;
}

inline double eval(const Poly& p, double t) {
  double v = 0.0;
  for (const Term& a : p) {
    double base = a.is_sin ? std::sin(a.w * t) : std::cos(a.w * t);
    v += a.c * (a.m == 0 ? base : t * base);
  }
  return v;
}

// indefinite integral from 0 as a Poly (velocity -> position); input terms
// must have m = 0, outputs may have m = 1 (only from w = 0 terms)
inline Poly antiderivative(const Poly& p) {
  Poly out;
  for (const Term& a : p) {
    require(a.m == 0, "trig::antiderivative: expected velocity terms");
    if (a.w == 0.0) {
      push(out, a.c, 1, 0.0, false);  // int c ds = c s
    } else if (a.is_sin) {
      // int_0^s c sin(w u) du = c/w - (c/w) cos(w s)
      push(out, a.c / a.w, 0, 0.0, false);
      push(out, -a.c / a.w, 0, a.w, false);
    } else {
      push(out, a.c / a.w, 0, a.w, true);
    }
  }
  return out;
}

// A curve given as sum_k f_k(s) v_k with scalar trig polys f_k.
struct Curve {
  std::vector<Poly> polys;
  std::vector<Vec> dirs;

  void add(Poly f, Vec v) {
    if (!f.empty()) {
      polys.push_back(std::move(f));
      dirs.push_back(std::move(v));
    }
  }

  Vec eval(int dim, double t) const {
    Vec x = Vec::Zero(dim);
    for (std::size_t k = 0; k < polys.size(); ++k) x += trig::eval(polys[k], t) * dirs[k];
    return x;
  }
};

// Horizontal lift of a velocity curve: position gamma(t) and signed area
// (1/2) int_0^t gamma ^ dgamma, all in closed form.
inline GroupElem lift_endpoint(const Curve& vel, int dim, double t) {
  Curve pos;
  for (std::size_t k = 0; k < vel.polys.size(); ++k)
    pos.add(antiderivative(vel.polys[k]), vel.dirs[k]);
  Vec a = pos.eval(dim, t);
  Mat A = Mat::Zero(dim, dim);
  for (std::size_t l = 0; l < pos.polys.size(); ++l)
    for (std::size_t k = 0; k < vel.polys.size(); ++k) {
      double coeff = 0.5 * integral(mul(pos.polys[l], vel.polys[k]), t);
      if (coeff != 0.0) A += coeff * wedge(pos.dirs[l], vel.dirs[k]);
    }
  GroupElem g;
  g.a = std::move(a);
  g.A = skew_part(A);  // wedge accumulation is skew up to roundoff
  return g;
}

}  // namespace trig

// ---------------------------------------------------------------------------
// controls: u : [0, 1] -> R^d, piecewise constant or spiral

struct SpiralPlane {
  Vec X, Y;                // orthonormal plane pair
  std::complex<double> w;  // amplitude (plane coordinates at s = 0 are Re w, Im w)
  long n;                  // signed winding count, != 0
};

struct ControlSegment {
  enum Kind { CONSTANT, SPIRAL } kind;
  double duration;
  Vec vel;                          // CONSTANT: u(s) = vel
  std::vector<SpiralPlane> planes;  // SPIRAL: u(s) = (1/tau) sum_j w_j e^{-2 pi i n_j s/tau}

  // L1 mass of the segment (its CC length contribution)
  double l1() const {
    if (kind == CONSTANT) return vel.norm() * duration;
    double s2 = 0.0;
    for (const auto& pl : planes) s2 += std::norm(pl.w);
    return std::sqrt(s2);  // |u| is constant 1/tau sqrt(sum |w|^2)
  }
};

struct Control {
  std::vector<ControlSegment> segs;

  void validate() const {
    double total = 0.0;
    for (const auto& s : segs) {
      require(s.duration > 0.0, "Control: durations must be positive");
      if (s.kind == ControlSegment::SPIRAL)
        for (const auto& pl : s.planes) require(pl.n != 0, "Control: winding 0");
      total += s.duration;
    }
    if (!segs.empty())
      require(std::abs(total - 1.0) <= 1e-12, "Control: durations must sum to 1");
  }

  double l1_norm() const {
    double L = 0.0;
    for (const auto& s : segs) L += s.l1();
    return L;
  }
};

namespace detail {

// velocity of a spiral segment as a closed-form curve on [0, tau]
inline trig::Curve spiral_velocity(const ControlSegment& seg) {
  trig::Curve vel;
  const double tau = seg.duration;
  for (const auto& pl : seg.planes) {
    const double mu = 2.0 * kPi * static_cast<double>(pl.n) / tau;
    const double p = pl.w.real() / tau, q = pl.w.imag() / tau;
    // w e^{-i mu s}: Re = p cos + q sin, Im = q cos - p sin
    trig::Poly fx, fy;
    trig::push(fx, p, 0, mu, false);
    trig::push(fx, q, 0, mu, true);
    trig::push(fy, q, 0, mu, false);
    trig::push(fy, -p, 0, mu, true);
    vel.add(std::move(fx), pl.X);
    vel.add(std::move(fy), pl.Y);
  }
  return vel;
}

inline GroupElem segment_lift(const ControlSegment& seg, int dim, double t) {
  if (seg.kind == ControlSegment::CONSTANT) {
    GroupElem g;
    g.a = t * seg.vel;
    g.A = Mat::Zero(dim, dim);
    return g;
  }
  return trig::lift_endpoint(spiral_velocity(seg), dim, t);
}

}  // namespace detail

// Endpoint of the horizontal lift of u starting at the identity.  CONSTANT
// segments are exact group exponentials; SPIRAL segments use the closed-form
// trigonometric integrals.  Length of the lift = l1_norm of the control.
inline GroupElem evolve(const Control& c, int dim) {
  c.validate();
  GroupElem g = GroupElem::identity(dim);
  for (const auto& seg : c.segs)
    g = gmul(g, detail::segment_lift(seg, dim, seg.duration));
  return g;
}

// sampled trace of the lift's first level (positions), n points per segment
inline PLPath evolve_trace(const Control& c, int dim, int per_segment = 64) {
  c.validate();
  PLPath out;
  Vec base = Vec::Zero(dim);
  double t0 = 0.0;
  out.times.push_back(0.0);
  out.points.push_back(base);
  for (const auto& seg : c.segs) {
    if (seg.kind == ControlSegment::CONSTANT) {
      base += seg.duration * seg.vel;
      t0 += seg.duration;
      out.times.push_back(t0);
      out.points.push_back(base);
      continue;
    }
    trig::Curve vel = detail::spiral_velocity(seg);
    trig::Curve pos;
    for (std::size_t k = 0; k < vel.polys.size(); ++k)
      pos.add(trig::antiderivative(vel.polys[k]), vel.dirs[k]);
    for (int i = 1; i <= per_segment; ++i) {
      double s = seg.duration * i / per_segment;
      out.times.push_back(t0 + s);
      out.points.push_back(base + pos.eval(dim, s));
    }
    base = out.points.back();
    t0 += seg.duration;
  }
  return out;
}

// ---------------------------------------------------------------------------
// geodesics gamma-dot(s) = e^{s Lambda} u0, evaluated blockwise

struct GeodesicParams {
  Vec u0;
  Mat Lambda;

  void validate() const {
    require(Lambda.rows() == u0.size() && Lambda.cols() == u0.size(),
            "GeodesicParams: shape mismatch");
    require(skew_defect(Lambda) <= tol::skew, "GeodesicParams: Lambda not skew");
  }
};

inline GroupElem geodesic_endpoint(const GeodesicParams& gp, double t) {
  gp.validate();
  require(t >= 0.0 && t <= 1.0, "geodesic_endpoint: t in [0,1]");
  const int d = static_cast<int>(gp.u0.size());
  SkewSpectrum sp = skew_canonical(gp.Lambda);
  trig::Curve vel;
  Vec residual = gp.u0;
  for (std::size_t j = 0; j < sp.sigmas.size(); ++j) {
    const double lam = sp.sigmas[j];
    const Vec& X = sp.planes[j].first;
    const Vec& Y = sp.planes[j].second;
    const double p = X.dot(gp.u0), q = Y.dot(gp.u0);
    residual -= p * X + q * Y;
    // e^{s Lambda} rotates plane coordinates by e^{-i lam s}
    trig::Poly fx, fy;
    trig::push(fx, p, 0, lam, false);
    trig::push(fx, q, 0, lam, true);
    trig::push(fy, q, 0, lam, false);
    trig::push(fy, -p, 0, lam, true);
    vel.add(std::move(fx), X);
    vel.add(std::move(fy), Y);
  }
  if (residual.norm() > 0.0) {  // motion on ker Lambda is straight
    trig::Poly one;
    trig::push(one, 1.0, 0, 0.0, false);
    vel.add(std::move(one), residual);
  }
  return trig::lift_endpoint(vel, d, t);
}

// ---------------------------------------------------------------------------
// the explicit vertical geodesic and the connecting curve

// Control whose lift ends at (0, A) with L1 length exactly
// 2 sqrt(pi) cc_half(A): one spiral, plane j wound j times with amplitude
// 2 sqrt(pi j sigma_j).  Plane pairs are swapped so the enclosed areas come
// out positive on the canonical planes.
inline Control vertical_geodesic(const Mat& A) {
  SkewSpectrum sp = skew_canonical(A);
  Control c;
  if (sp.sigmas.empty()) return c;  // zero matrix -> empty control
  ControlSegment seg;
  seg.kind = ControlSegment::SPIRAL;
  seg.duration = 1.0;
  for (std::size_t j = 0; j < sp.sigmas.size(); ++j) {
    SpiralPlane pl;
    pl.X = sp.planes[j].second;  // swapped: loop area lands on +X_j ^ Y_j
    pl.Y = sp.planes[j].first;
    pl.n = static_cast<long>(j + 1);
    pl.w = 2.0 * std::sqrt(kPi * static_cast<double>(j + 1) * sp.sigmas[j]);
    seg.planes.push_back(std::move(pl));
  }
  c.segs.push_back(std::move(seg));
  return c;
}

// Straight line to a, then the vertical loop for A (central, so order only
// affects the trace, not the endpoint).  Durations split by length.
inline Control connect(const GroupElem& g) {
  const double La = g.a.norm();
  Control vert = vertical_geodesic(g.A);
  const double Lv = vert.l1_norm();
  Control c;
  if (La + Lv == 0.0) return c;
  const double fa = La / (La + Lv);
  if (La > 0.0) {
    ControlSegment line;
    line.kind = ControlSegment::CONSTANT;
    line.duration = fa;
    line.vel = g.a / fa;
    c.segs.push_back(std::move(line));
  }
  if (Lv > 0.0) {
    ControlSegment loop = std::move(vert.segs[0]);
    loop.duration = 1.0 - fa;
    c.segs.push_back(std::move(loop));
  }
  return c;
}

// ---------------------------------------------------------------------------
// polygonal realization

// delta(K): worst-case relative length excess of the K-per-winding polygon
// after the area-exact radius correction
inline double polygon_length_excess(int K) {
  double x = kPi / K;
  return std::sqrt(std::tan(x) / x) - 1.0;
}

// PL realization of a control: CONSTANT segments verbatim; spirals sampled
// at K points per winding with per-plane radii rescaled so every enclosed PL
// area is exact.  Cross-plane PL areas vanish by discrete orthogonality, so
// pl_signature(polygonize(c)) reproduces evolve(c) up to roundoff.
inline PLPath polygonize(const Control& c, int dim, int K = 64) {
  require(K >= 3, "polygonize: K >= 3 required");
  c.validate();
  PLPath out;
  Vec base = Vec::Zero(dim);
  double t0 = 0.0;
  out.times.push_back(0.0);
  out.points.push_back(base);
  for (const auto& seg : c.segs) {
    if (seg.kind == ControlSegment::CONSTANT) {
      base += seg.duration * seg.vel;
      t0 += seg.duration;
      out.times.push_back(t0);
      out.points.push_back(base);
      continue;
    }
    long nmax = 0;
    for (const auto& pl : seg.planes) nmax = std::max(nmax, std::labs(pl.n));
    const long Ktot = static_cast<long>(K) * nmax;
    // per-plane corrected center offsets m_j = w_j / (i mu_j tau), scaled so
    // the K-gon area matches the continuous one exactly
    std::vector<std::complex<double>> center(seg.planes.size());
    for (std::size_t j = 0; j < seg.planes.size(); ++j) {
      const auto& pl = seg.planes[j];
      const double mu_tau = 2.0 * kPi * static_cast<double>(pl.n);
      std::complex<double> m = pl.w / std::complex<double>(0.0, mu_tau);
      const double x = 2.0 * kPi * static_cast<double>(pl.n) / static_cast<double>(Ktot);
      center[j] = m * std::sqrt(x / std::sin(x));
    }
    for (long i = 1; i <= Ktot; ++i) {
      Vec pos = base;
      for (std::size_t j = 0; j < seg.planes.size(); ++j) {
        const auto& pl = seg.planes[j];
        const double th =
            2.0 * kPi * static_cast<double>(pl.n) * static_cast<double>(i % Ktot) /
            static_cast<double>(Ktot);
        std::complex<double> z =
            center[j] * (1.0 - std::complex<double>(std::cos(th), -std::sin(th)));
        pos += z.real() * pl.X + z.imag() * pl.Y;
      }
      out.times.push_back(t0 + seg.duration * static_cast<double>(i) /
                                   static_cast<double>(Ktot));
      out.points.push_back(std::move(pos));
    }
    base = out.points.back();
    t0 += seg.duration;
  }
  return out;
}

}  // namespace roughcc
