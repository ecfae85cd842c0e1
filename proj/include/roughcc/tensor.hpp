#pragma once

// Truncated tensor algebra A_N over R^d: graded levels 0..N with the
// multiplication that drops everything above level N, plus the truncated
// exp/log pair.  Levels are stored flat; level k entry (i_1,...,i_k) sits at
// index i_1*d^{k-1} + ... + i_k.

#include <roughcc/core.hpp>

#include <vector>

namespace roughcc {

class TruncTensor {
 public:
  TruncTensor(int dim, int depth) : dim_(dim), depth_(depth) {
    require(dim >= 1 && depth >= 1, "TruncTensor: need dim >= 1, depth >= 1");
    std::size_t sz = 1;
    levels_.resize(depth + 1);
    for (int k = 0; k <= depth; ++k) {
      levels_[k] = Vec::Zero(static_cast<Eigen::Index>(sz));
      sz *= static_cast<std::size_t>(dim);
    }
  }

  static TruncTensor unit(int dim, int depth) {
    TruncTensor t(dim, depth);
    t.levels_[0](0) = 1.0;
    return t;
  }

  int dim() const { return dim_; }
  int depth() const { return depth_; }

  double scalar() const { return levels_[0](0); }
  Vec& level(int k) { return levels_[k]; }
  const Vec& level(int k) const { return levels_[k]; }

  // level 2 viewed as a d x d matrix, row index first
  Mat level2_matrix() const {
    require(depth_ >= 2, "TruncTensor: no level 2");
    Mat m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = levels_[2](i * dim_ + j);
    return m;
  }

  void set_level2(const Mat& m) {
    require(depth_ >= 2 && m.rows() == dim_ && m.cols() == dim_,
            "TruncTensor: bad level-2 shape");
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) levels_[2](i * dim_ + j) = m(i, j);
  }

  TruncTensor& operator+=(const TruncTensor& o) {
    check_same_shape(o);
    for (int k = 0; k <= depth_; ++k) levels_[k] += o.levels_[k];
    return *this;
  }
  TruncTensor& operator*=(double c) {
    for (auto& l : levels_) l *= c;
    return *this;
  }
  friend TruncTensor operator+(TruncTensor a, const TruncTensor& b) { return a += b; }
  friend TruncTensor operator*(double c, TruncTensor a) { return a *= c; }

  double max_abs_diff(const TruncTensor& o) const {
    check_same_shape(o);
    double m = 0.0;
    for (int k = 0; k <= depth_; ++k)
      m = std::max(m, (levels_[k] - o.levels_[k]).cwiseAbs().maxCoeff());
    return m;
  }

  void check_same_shape(const TruncTensor& o) const {
    require(dim_ == o.dim_ && depth_ == o.depth_,
            "TruncTensor: dimension/depth mismatch");
  }

 private:
  int dim_;
  int depth_;
  std::vector<Vec> levels_;
};

// graded product, truncated at depth N
inline TruncTensor tmul(const TruncTensor& a, const TruncTensor& b) {
  a.check_same_shape(b);
  const int d = a.dim();
  TruncTensor out(d, a.depth());
  for (int k = 0; k <= a.depth(); ++k) {
    Vec& r = out.level(k);
    for (int n = 0; n <= k; ++n) {
      const Vec& u = a.level(n);  // d^n entries
      const Vec& v = b.level(k - n);
      // (u (x) v)[i*d^{k-n} + j] = u[i] v[j]; the column-major map makes the
      // whole level-k contribution the outer product v u^T
      Eigen::Map<Mat> block(r.data(), v.size(), u.size());
      block += v * u.transpose();
    }
  }
  return out;
}

// truncated exponential; requires scalar level 0
inline TruncTensor texp(const TruncTensor& x) {
  require(std::abs(x.scalar()) == 0.0, "texp: scalar level must be 0");
  TruncTensor acc = TruncTensor::unit(x.dim(), x.depth());
  TruncTensor pw = TruncTensor::unit(x.dim(), x.depth());
  double fact = 1.0;
  for (int n = 1; n <= x.depth(); ++n) {
    pw = tmul(pw, x);
    fact *= n;
    acc += (1.0 / fact) * pw;
  }
  return acc;
}

// truncated logarithm; requires scalar level 1
inline TruncTensor tlog(const TruncTensor& y) {
  require(std::abs(y.scalar() - 1.0) == 0.0, "tlog: scalar level must be 1");
  TruncTensor Y = y;
  Y.level(0)(0) = 0.0;  // Y = y - 1
  TruncTensor acc(y.dim(), y.depth());
  TruncTensor pw = TruncTensor::unit(y.dim(), y.depth());
  double sign = 1.0;
  for (int n = 1; n <= y.depth(); ++n) {
    pw = tmul(pw, Y);
    acc += (sign / n) * pw;
    sign = -sign;
  }
  return acc;
}

}  // namespace roughcc
