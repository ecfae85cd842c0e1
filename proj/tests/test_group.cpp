#include <catch2/catch_amalgamated.hpp>

#include <roughcc/group.hpp>
#include <roughcc/rough.hpp>
#include <roughcc/tensor.hpp>

using namespace roughcc;

namespace {

GroupElem random_elem(detail::Rng& rng, int d) {
  GroupElem g;
  g.a = rng.gvec(d);
  g.A = skew_part(Mat(rng.gvec(d) * rng.gvec(d).transpose()));
  return g;
}

double elem_diff(const GroupElem& g, const GroupElem& h) {
  return std::max((g.a - h.a).cwiseAbs().maxCoeff(),
                  (g.A - h.A).cwiseAbs().maxCoeff());
}

}  // namespace

// The tensor algebra is the oracle: group operations in exponential
// coordinates must match signature-coordinate products computed by tmul.
TEST_CASE("gmul matches the tensor-algebra product") {
  detail::Rng rng(101);
  for (int d : {2, 3, 5}) {
    for (int rep = 0; rep < 20; ++rep) {
      GroupElem g = random_elem(rng, d), h = random_elem(rng, d);
      TruncTensor lhs = to_sig(gmul(g, h));
      TruncTensor rhs = tmul(to_sig(g), to_sig(h));
      REQUIRE(lhs.max_abs_diff(rhs) < 1e-13);
    }
  }
}

TEST_CASE("group axioms") {
  detail::Rng rng(102);
  for (int d : {2, 4}) {
    GroupElem e = GroupElem::identity(d);
    for (int rep = 0; rep < 20; ++rep) {
      GroupElem g = random_elem(rng, d), h = random_elem(rng, d),
                k = random_elem(rng, d);
      REQUIRE(elem_diff(gmul(g, e), g) == 0.0);
      REQUIRE(elem_diff(gmul(e, g), g) == 0.0);
      REQUIRE(elem_diff(gmul(g, ginv(g)), e) < 1e-14);
      REQUIRE(elem_diff(gmul(ginv(g), g), e) < 1e-14);
      GroupElem ab_c = gmul(gmul(g, h), k);
      GroupElem a_bc = gmul(g, gmul(h, k));
      REQUIRE(elem_diff(ab_c, a_bc) < 1e-13);
    }
  }
}

TEST_CASE("gincrement solves g * inc = h") {
  detail::Rng rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    GroupElem g = random_elem(rng, 3), h = random_elem(rng, 3);
    GroupElem inc = gincrement(g, h);
    REQUIRE(elem_diff(gmul(g, inc), h) < 1e-13);
    REQUIRE(elem_diff(inc, gmul(ginv(g), h)) < 1e-13);
  }
}

TEST_CASE("to_sig / to_exp round-trip and the log identity") {
  detail::Rng rng(104);
  for (int rep = 0; rep < 30; ++rep) {
    GroupElem g = random_elem(rng, 4);
    TruncTensor s = to_sig(g);
    REQUIRE(std::abs(s.scalar() - 1.0) == 0.0);
    GroupElem back = to_exp(s);
    REQUIRE(elem_diff(back, g) < 1e-13);
    // step-2 logarithm of the signature is exactly (a, A)
    TruncTensor l = tlog(s);
    REQUIRE((l.level(1) - g.a).cwiseAbs().maxCoeff() < 1e-13);
    REQUIRE((l.level2_matrix() - g.A).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("weak geometricity defect and the to_exp gate") {
  detail::Rng rng(105);
  GroupElem g = random_elem(rng, 4);
  TruncTensor s = to_sig(g);
  REQUIRE(weak_geom_defect(s) < 1e-13);

  // inject a known symmetric deviation into level 2
  Mat S = sym_part(Mat(rng.gvec(4) * rng.gvec(4).transpose()));
  const double eps = 1e-3;
  TruncTensor bad = s;
  bad.set_level2(s.level2_matrix() + eps * S);
  const double expected = eps * S.norm();  // Schatten-2 of the deviation
  REQUIRE(weak_geom_defect(bad) == Catch::Approx(expected).epsilon(1e-10));
  REQUIRE_THROWS_AS(to_exp(bad), NotWeaklyGeometric);
  try {
    to_exp(bad);
  } catch (const NotWeaklyGeometric& e) {
    REQUIRE(e.defect == Catch::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("homogeneous norm scales under dilations") {
  detail::Rng rng(106);
  for (double lam : {0.25, 2.0, 7.5}) {
    for (int rep = 0; rep < 10; ++rep) {
      GroupElem g = random_elem(rng, 3);
      GroupElem gl;
      gl.a = lam * g.a;
      gl.A = lam * lam * g.A;
      REQUIRE(hom_norm(gl) == Catch::Approx(lam * hom_norm(g)).epsilon(1e-12));
      REQUIRE(triple_norm(gl) == Catch::Approx(lam * triple_norm(g)).epsilon(1e-12));
    }
  }
}

TEST_CASE("metric is left-invariant and symmetric enough") {
  detail::Rng rng(107);
  for (int rep = 0; rep < 20; ++rep) {
    GroupElem g = random_elem(rng, 3), h = random_elem(rng, 3),
              k = random_elem(rng, 3);
    double d0 = metric_d(g, h);
    double dl = metric_d(gmul(k, g), gmul(k, h));
    REQUIRE(dl == Catch::Approx(d0).epsilon(1e-10));
    REQUIRE(metric_d(g, g) == 0.0);
    REQUIRE(d0 > 0.0);
  }
}

TEST_CASE("hom_norm respects the Schatten exponent") {
  detail::Rng rng(108);
  GroupElem g = random_elem(rng, 4);
  Mat lvl2 = g.A + 0.5 * g.a * g.a.transpose();
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    double expected = std::max(g.a.norm(), std::sqrt(schatten(lvl2, p)));
    REQUIRE(hom_norm(g, HomNorms(p)) == Catch::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("project_group is a group homomorphism") {
  detail::Rng rng(109);
  const int d = 5;
  Mat span(d, 2);
  span.col(0) = rng.gvec(d);
  span.col(1) = rng.gvec(d);
  Subspace F = Subspace::from_span(span);
  F.validate();
  for (int rep = 0; rep < 20; ++rep) {
    GroupElem g = random_elem(rng, d), h = random_elem(rng, d);
    GroupElem lhs = project_group(gmul(g, h), F);
    GroupElem rhs = gmul(project_group(g, F), project_group(h, F));
    REQUIRE(elem_diff(lhs, rhs) < 1e-12);
  }
  // identity maps to identity, projection is idempotent
  GroupElem e = GroupElem::identity(d);
  REQUIRE(elem_diff(project_group(e, F), e) == 0.0);
  GroupElem g = random_elem(rng, d);
  REQUIRE(elem_diff(project_group(project_group(g, F), F), project_group(g, F)) < 1e-13);
}

TEST_CASE("area splits into projected, crossed and residual blocks") {
  detail::Rng rng(110);
  const int d = 4;
  Mat span(d, 2);
  span.col(0) = rng.gvec(d);
  span.col(1) = rng.gvec(d);
  Subspace F = Subspace::from_span(span);
  Mat P = F.projector();
  Mat Pc = Mat::Identity(d, d) - P;
  GroupElem g = random_elem(rng, d);
  Mat recon = P * g.A * P + project_wedge(g, F) + Pc * g.A * Pc;
  REQUIRE((recon - g.A).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("constructor antisymmetrizes small drift") {
  Vec a = Vec::Zero(2);
  Mat A(2, 2);
  A << 1e-13, 1.0, -1.0 + 1e-13, -1e-13;  // tiny symmetric contamination
  GroupElem g(a, A);
  REQUIRE(skew_defect(g.A) == 0.0);
  REQUIRE(g.A(0, 1) == Catch::Approx(1.0).margin(1e-12));
}
