// Reach a random group element by an explicit horizontal control, then check
// the length against the homogeneous norm bounds.
#include <roughcc/roughcc.hpp>

#include <cstdio>

using namespace roughcc;

int main() {
  detail::Rng rng(7);
  const int d = 5;
  GroupElem g(rng.gvec(d), rng.skew_with_spectrum(d, 1.0, 1.5));

  Control c = connect(g);
  GroupElem reached = evolve(c, d);
  std::printf("endpoint gap: %.3g\n",
              std::max((reached.a - g.a).cwiseAbs().maxCoeff(),
                       (reached.A - g.A).cwiseAbs().maxCoeff()));

  const double lower = triple_norm(g), len = c.l1_norm();
  std::printf("|||g||| = %.6g <= control length %.6g <= 3|||g||| = %.6g\n",
              lower, len, 3.0 * lower);

  // sample the control into a polygon; its signature still hits g
  PLPath poly = polygonize(c, d, 128);
  GroupElem via_poly = pl_signature(poly);
  std::printf("polygon: %zu vertices, length %.6g, endpoint gap %.3g\n",
              poly.points.size(), poly.length(),
              std::max((via_poly.a - g.a).cwiseAbs().maxCoeff(),
                       (via_poly.A - g.A).cwiseAbs().maxCoeff()));
  return 0;
}
