#include <roughcc/tensor.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace roughcc;

namespace {

// Reference product, written against the definition: for every pair of word
// lengths n + m = k and every pair of words, concatenate the words digit by
// digit.  No shared code with tmul's mapped-block version.
TruncTensor oracle_mul(const TruncTensor& a, const TruncTensor& b) {
  const int d = a.dim(), N = a.depth();
  auto decode = [d](std::size_t flat, int len) {
    std::vector<int> w(len);
    for (int i = len - 1; i >= 0; --i) {
      w[i] = static_cast<int>(flat % d);
      flat /= d;
    }
    return w;
  };
  auto encode = [d](const std::vector<int>& w) {
    std::size_t flat = 0;
    for (int digit : w) flat = flat * d + digit;
    return flat;
  };
  TruncTensor out(d, N);
  for (int k = 0; k <= N; ++k)
    for (int n = 0; n <= k; ++n) {
      const int m = k - n;
      for (Eigen::Index ia = 0; ia < a.level(n).size(); ++ia)
        for (Eigen::Index ib = 0; ib < b.level(m).size(); ++ib) {
          std::vector<int> word = decode(static_cast<std::size_t>(ia), n);
          std::vector<int> wb = decode(static_cast<std::size_t>(ib), m);
          word.insert(word.end(), wb.begin(), wb.end());
          out.level(k)(static_cast<Eigen::Index>(encode(word))) +=
              a.level(n)(ia) * b.level(m)(ib);
        }
    }
  return out;
}

TruncTensor random_tensor(int d, int N, std::mt19937& gen, bool group_like_scalar) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TruncTensor t(d, N);
  for (int k = 0; k <= N; ++k)
    for (Eigen::Index i = 0; i < t.level(k).size(); ++i) t.level(k)(i) = u(gen);
  t.level(0)(0) = group_like_scalar ? 1.0 : 0.0;
  return t;
}

}  // namespace

TEST_CASE("unit is a two-sided identity") {
  std::mt19937 gen(7);
  for (int d : {1, 2, 5}) {
    TruncTensor x = random_tensor(d, 2, gen, true);
    TruncTensor e = TruncTensor::unit(d, 2);
    REQUIRE(tmul(e, x).max_abs_diff(x) == 0.0);
    REQUIRE(tmul(x, e).max_abs_diff(x) == 0.0);
  }
}

TEST_CASE("graded product matches the word-concatenation oracle") {
  std::mt19937 gen(11);
  for (int d : {1, 2, 3, 4}) {
    for (int N : {2, 3}) {
      for (int rep = 0; rep < 5; ++rep) {
        TruncTensor a = random_tensor(d, N, gen, rep % 2 == 0);
        TruncTensor b = random_tensor(d, N, gen, rep % 2 == 1);
        TruncTensor viaMap = tmul(a, b);
        TruncTensor viaWords = oracle_mul(a, b);
        REQUIRE(viaMap.max_abs_diff(viaWords) < 1e-14);
      }
    }
  }
}

TEST_CASE("product is associative") {
  std::mt19937 gen(13);
  for (int rep = 0; rep < 10; ++rep) {
    TruncTensor a = random_tensor(3, 2, gen, true);
    TruncTensor b = random_tensor(3, 2, gen, true);
    TruncTensor c = random_tensor(3, 2, gen, true);
    REQUIRE(tmul(tmul(a, b), c).max_abs_diff(tmul(a, tmul(b, c))) < 1e-13);
  }
}

TEST_CASE("exp and log invert each other") {
  std::mt19937 gen(17);
  for (int rep = 0; rep < 10; ++rep) {
    TruncTensor v = random_tensor(4, 2, gen, false);
    REQUIRE(tlog(texp(v)).max_abs_diff(v) < 1e-13);
    TruncTensor g = random_tensor(4, 2, gen, true);
    REQUIRE(texp(tlog(g)).max_abs_diff(g) < 1e-13);
  }
}

TEST_CASE("exp of a level-1 element fills level 2 with half the square") {
  std::mt19937 gen(19);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = 3;
  TruncTensor x(d, 2);
  Vec a(d);
  for (int i = 0; i < d; ++i) a(i) = u(gen);
  x.level(1) = a;
  TruncTensor g = texp(x);
  REQUIRE(g.scalar() == 1.0);
  REQUIRE((g.level(1) - a).cwiseAbs().maxCoeff() == 0.0);
  Mat expect = 0.5 * a * a.transpose();
  REQUIRE((g.level2_matrix() - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("product of two exponentials has the expected level 2") {
  std::mt19937 gen(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = 4;
  Vec a(d), b(d);
  for (int i = 0; i < d; ++i) {
    a(i) = u(gen);
    b(i) = u(gen);
  }
  TruncTensor xa(d, 2), xb(d, 2);
  xa.level(1) = a;
  xb.level(1) = b;
  TruncTensor g = tmul(texp(xa), texp(xb));
  // level 2 of exp(a) exp(b): a a^T/2 + a b^T + b b^T/2 (first index = row)
  Mat expect = 0.5 * a * a.transpose() + a * b.transpose() + 0.5 * b * b.transpose();
  REQUIRE((g.level2_matrix() - expect).cwiseAbs().maxCoeff() < 1e-14);
  REQUIRE((g.level(1) - (a + b)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("log of a product of exponentials picks up half the bracket") {
  // log(e^x e^y) = x + y + [x,y]/2 at depth 2
  std::mt19937 gen(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = 3;
  Vec a(d), b(d);
  for (int i = 0; i < d; ++i) {
    a(i) = u(gen);
    b(i) = u(gen);
  }
  TruncTensor xa(d, 2), xb(d, 2);
  xa.level(1) = a;
  xb.level(1) = b;
  TruncTensor z = tlog(tmul(texp(xa), texp(xb)));
  Mat half_bracket = 0.5 * (a * b.transpose() - b * a.transpose());
  REQUIRE((z.level(1) - (a + b)).cwiseAbs().maxCoeff() < 1e-15);
  REQUIRE((z.level2_matrix() - half_bracket).cwiseAbs().maxCoeff() < 1e-14);
}
