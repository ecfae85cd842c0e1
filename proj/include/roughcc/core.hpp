#pragma once

// Shared aliases, pinned tolerances and the wedge/symmetrization helpers
// everything else is built on.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace roughcc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr double kPi = 3.14159265358979323846;

// Pinned tolerances. These are referenced by the validity checks in the
// library itself and by the test suite; they are not knobs.
namespace tol {
inline constexpr double skew = 1e-10;      // skew-symmetry defect of area matrices
inline constexpr double spec = 1e-9;       // orthonormality / spectral reconstruction
inline constexpr double geo = 1e-9;        // endpoint reproduction of closed-form curves
inline constexpr double rank_rel = 1e-10;  // relative cutoff for zero singular values
inline constexpr double axioms = 1e-12;    // exact algebraic identities, roundoff only
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when level-2 data fails the group-like (weakly geometric) test;
// carries the symmetry defect that was measured.
struct NotWeaklyGeometric : Error {
  double defect;
  explicit NotWeaklyGeometric(double def)
      : Error("not weakly geometric: symmetric part of level 2 deviates from "
              "a (x) a / 2 by " +
              std::to_string(def)),
        defect(def) {}
};

// x ^ y as a matrix: (x ^ y)_{mu nu} = x_mu y_nu - y_mu x_nu.  With this
// convention wedge matrices act on vectors by plain matrix multiplication,
// and the ccw unit square loop has area +1 * e1^e2.
inline Mat wedge(const Vec& x, const Vec& y) {
  return x * y.transpose() - y * x.transpose();
}

inline Mat sym_part(const Mat& m) { return 0.5 * (m + m.transpose()); }
inline Mat skew_part(const Mat& m) { return 0.5 * (m - m.transpose()); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace roughcc
