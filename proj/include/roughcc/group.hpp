#pragma once

// The step-2 group G^2(R^d) in exponential coordinates: pairs (a, A) with a
// in R^d and A skew (the area), product adding a half-wedge correction.
// Conversions to/from signature coordinates, homogeneous norms, the
// left-invariant metric, and orthogonal projections.

#include <roughcc/core.hpp>
#include <roughcc/spectral.hpp>
#include <roughcc/tensor.hpp>

#include <iostream>

namespace roughcc {

struct GroupElem {
  Vec a;
  Mat A;

  GroupElem() = default;
  GroupElem(Vec a_, Mat A_) : a(std::move(a_)), A(std::move(A_)) {
    require(A.rows() == a.size() && A.cols() == a.size(),
            "GroupElem: shape mismatch between a and A");
    double defect = skew_defect(A);
    A = skew_part(A);  // clean up drift from long product chains
    if (defect > tol::skew)
      std::cerr << "[roughcc] warning: area matrix skew defect " << defect
                << " exceeds " << tol::skew << "; antisymmetrized\n";
  }

  static GroupElem identity(int dim) {
    return GroupElem(Vec::Zero(dim), Mat::Zero(dim, dim));
  }

  int dim() const { return static_cast<int>(a.size()); }
};

inline GroupElem gmul(const GroupElem& g, const GroupElem& h) {
  require(g.dim() == h.dim(), "gmul: dimension mismatch");
  GroupElem out;
  out.a = g.a + h.a;
  out.A = g.A + h.A + 0.5 * wedge(g.a, h.a);
  return out;
}

inline GroupElem ginv(const GroupElem& g) {
  GroupElem out;
  out.a = -g.a;
  out.A = -g.A;
  return out;
}

// increment g^{-1} h without forming intermediate temporaries beyond a wedge
inline GroupElem gincrement(const GroupElem& g, const GroupElem& h) {
  GroupElem out;
  out.a = h.a - g.a;
  out.A = h.A - g.A - 0.5 * wedge(g.a, h.a);
  return out;
}

// signature coordinates 1 + a + (A + a (x) a / 2)
inline TruncTensor to_sig(const GroupElem& g) {
  TruncTensor t(g.dim(), 2);
  t.level(0)(0) = 1.0;
  t.level(1) = g.a;
  t.set_level2(g.A + 0.5 * g.a * g.a.transpose());
  return t;
}

// symmetry defect of level 2 against a (x) a / 2 (0 iff weakly geometric)
inline double weak_geom_defect(const TruncTensor& s,
                               const HomNorms& norms = HomNorms()) {
  require(s.depth() >= 2, "weak_geom_defect: need depth >= 2");
  const Vec& a = s.level(1);
  Mat dev = sym_part(s.level2_matrix()) - 0.5 * a * a.transpose();
  return schatten(dev, norms.p);
}

inline GroupElem to_exp(const TruncTensor& s) {
  require(std::abs(s.scalar() - 1.0) <= tol::axioms,
          "to_exp: scalar level must be 1");
  double defect = weak_geom_defect(s);
  if (defect > tol::geo) throw NotWeaklyGeometric(defect);
  const Vec& a = s.level(1);
  Mat A = skew_part(s.level2_matrix() - 0.5 * a * a.transpose());
  GroupElem g;
  g.a = a;
  g.A = std::move(A);
  return g;
}

// |g| = max{ ||a||_2, ||level 2 of to_sig(g)||_{Sch^p}^{1/2} }
inline double hom_norm(const GroupElem& g, const HomNorms& norms = HomNorms()) {
  Mat lvl2 = g.A + 0.5 * g.a * g.a.transpose();
  return std::max(g.a.norm(), std::sqrt(schatten(lvl2, norms.p)));
}

// left-invariant metric d(g, h) = |g^{-1} h|
inline double metric_d(const GroupElem& g, const GroupElem& h,
                       const HomNorms& norms = HomNorms()) {
  return hom_norm(gincrement(g, h), norms);
}

// |||g||| = max{ ||a||_2, sqrt(pi) ||A||_cc^{1/2} }; equivalent to the CC
// distance from the identity within a factor of 3.
inline double triple_norm(const GroupElem& g) {
  return std::max(g.a.norm(), std::sqrt(kPi) * cc_half(g.A));
}

// pr_F in group coordinates: (P a, P A P).  A group homomorphism.
inline GroupElem project_group(const GroupElem& g, const Subspace& F) {
  require(F.ambient_dim() == g.dim(), "project_group: ambient dim mismatch");
  Mat P = F.projector();
  GroupElem out;
  out.a = P * g.a;
  out.A = P * g.A * P;
  return out;
}

// mixed block: the part of the area crossing F and its complement
inline Mat project_wedge(const GroupElem& g, const Subspace& F) {
  require(F.ambient_dim() == g.dim(), "project_wedge: ambient dim mismatch");
  Mat P = F.projector();
  Mat Pc = Mat::Identity(g.dim(), g.dim()) - P;
  return P * g.A * Pc + Pc * g.A * P;
}

}  // namespace roughcc
