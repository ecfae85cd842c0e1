#pragma once

// Canonical form of skew-symmetric matrices and the norm family built on
// singular values: Schatten p-norms, the cc quasi-norm and its square root.

#include <roughcc/core.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace roughcc {

// Chosen Schatten exponent; selects the tensor norm used by homogeneous
// norms and metrics.  p >= 1 or infinity.
struct HomNorms {
  double p = 2.0;
  explicit HomNorms(double p_ = 2.0) : p(p_) {
    require(p >= 1.0, "HomNorms: p must be >= 1 (or infinity)");
  }
};

inline double skew_defect(const Mat& A) {
  return (A + A.transpose()).cwiseAbs().maxCoeff();
}

// Canonical form A = sum_j sigma_j (X_j Y_j^T - Y_j X_j^T) with
// sigma_1 >= sigma_2 >= ... > 0 and {X_j, Y_j} orthonormal.
struct SkewSpectrum {
  std::vector<double> sigmas;
  std::vector<std::pair<Vec, Vec>> planes;

  Mat reconstruct(int dim) const {
    Mat A = Mat::Zero(dim, dim);
    for (std::size_t j = 0; j < sigmas.size(); ++j)
      A += sigmas[j] * wedge(planes[j].first, planes[j].second);
    return A;
  }
};

// ell^p of a nonnegative list; p = infinity -> max, p = 1/2 allowed as the
// documented internal quasi-norm.
inline double lp_norm(const std::vector<double>& v, double p) {
  if (v.empty()) return 0.0;
  if (std::isinf(p)) return *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::pow(x, p);
  return std::pow(s, 1.0 / p);
}

// Singular values of an arbitrary matrix, nonincreasing.
inline std::vector<double> singular_values(const Mat& M) {
  Eigen::JacobiSVD<Mat> svd(M);
  std::vector<double> s(svd.singularValues().data(),
                        svd.singularValues().data() + svd.singularValues().size());
  return s;
}

inline SkewSpectrum skew_canonical(const Mat& A);

// ell^p of the doubled spectrum {sigma_j, sigma_j}: the 2^{1/p} prefactor of
// the skew convention (each sigma_j is a double singular value of A).
inline double schatten_from_sigmas(const std::vector<double>& sigmas, double p) {
  if (std::isinf(p)) return lp_norm(sigmas, p);
  return std::pow(2.0, 1.0 / p) * lp_norm(sigmas, p);
}

// Schatten p-norm: ell^p norm of all singular values.  Skew inputs go through
// the canonical spectrum so norms sharing it agree to roundoff; any other
// matrix uses plain singular values (the doubling is automatic for skew ones).
inline double schatten(const Mat& M, double p) {
  require(p >= 1.0 || p == 0.5,
          "schatten: p must be >= 1, infinity, or the internal quasi-norm 1/2");
  if (p == 2.0) return M.norm();  // Frobenius, identical value, cheaper
  if (M.rows() == M.cols() && skew_defect(M) <= tol::skew)
    return schatten_from_sigmas(skew_canonical(M).sigmas, p);
  return lp_norm(singular_values(M), p);
}

inline SkewSpectrum skew_canonical(const Mat& A) {
  const double defect = A.size() == 0 ? 0.0 : skew_defect(A);
  require(defect <= tol::skew,
          "skew_canonical: input not skew, defect " + std::to_string(defect));
  const int d = static_cast<int>(A.rows());
  SkewSpectrum out;
  if (d == 0) return out;

  // Real Schur form: U^T A U is block diagonal with 2x2 blocks ~[0 b; c 0],
  // bc < 0, one per rotation plane.  Working on A itself (rather than -A^2)
  // resolves sigma down to eps * sigma_1, which is what makes the relative
  // rank cutoff meaningful; squaring would lift the noise floor to
  // sqrt(eps) * sigma_1.
  Eigen::RealSchur<Mat> schur(A);
  const Mat& T = schur.matrixT();
  const Mat& U = schur.matrixU();

  double sigma1 = 0.0;
  std::vector<std::pair<double, int>> blocks;  // (sigma, first column of block)
  for (int i = 0; i + 1 < d;) {
    if (T(i + 1, i) != 0.0) {  // converged 1x1 blocks have exact zeros below
      double sigma = std::sqrt(std::max(0.0, -T(i, i + 1) * T(i + 1, i)));
      blocks.emplace_back(sigma, i);
      sigma1 = std::max(sigma1, sigma);
      i += 2;
    } else {
      ++i;
    }
  }
  const double cut = tol::rank_rel * sigma1;
  if (sigma1 <= 0.0) return out;

  struct Plane {
    double sigma;
    Vec X, Y;
  };
  std::vector<Plane> planes;
  for (const auto& blk : blocks) {
    if (blk.first <= cut) continue;
    Vec X = U.col(blk.second);
    Vec Y = -(A * X) / blk.first;
    // deterministic orientation: first significantly nonzero entry of X > 0
    for (int k = 0; k < d; ++k) {
      if (std::abs(X(k)) > 1e-12) {
        if (X(k) < 0) {
          X = -X;
          Y = -Y;
        }
        break;
      }
    }
    planes.push_back({blk.first, std::move(X), std::move(Y)});
  }
  // sigma descending; exact ties ordered by the entries of X lexicographically
  std::sort(planes.begin(), planes.end(), [](const Plane& a, const Plane& b) {
    if (a.sigma != b.sigma) return a.sigma > b.sigma;
    for (int k = 0; k < a.X.size(); ++k)
      if (a.X(k) != b.X(k)) return a.X(k) > b.X(k);
    return false;
  });
  for (auto& pl : planes) {
    out.sigmas.push_back(pl.sigma);
    out.planes.emplace_back(std::move(pl.X), std::move(pl.Y));
  }
  return out;
}

// ||A||_cc = sum_j j * sigma_j over the nonincreasing spectrum; the CC length
// scale of the vertical direction.  cc_half is its square root (a 1/2-norm).
inline double cc_norm(const Mat& A) {
  SkewSpectrum sp = skew_canonical(A);
  double s = 0.0;
  for (std::size_t j = 0; j < sp.sigmas.size(); ++j)
    s += static_cast<double>(j + 1) * sp.sigmas[j];
  return s;
}

inline double cc_half(const Mat& A) { return std::sqrt(cc_norm(A)); }

// Orthonormal basis of a subspace F of R^d, held as columns.
struct Subspace {
  Mat basis;  // d x r, B^T B = I

  static Subspace from_span(const Mat& spanning) {
    Eigen::ColPivHouseholderQR<Mat> qr(spanning);
    qr.setThreshold(1e-10);
    Eigen::Index r = qr.rank();
    Subspace f;
    f.basis = qr.householderQ() * Mat::Identity(spanning.rows(), r);
    return f;
  }

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int rank() const { return static_cast<int>(basis.cols()); }
  Mat projector() const { return basis * basis.transpose(); }

  void validate() const {
    Mat gram = basis.transpose() * basis;
    double err = (gram - Mat::Identity(rank(), rank())).cwiseAbs().maxCoeff();
    require(err <= tol::spec, "Subspace: basis not orthonormal");
  }
};

}  // namespace roughcc
