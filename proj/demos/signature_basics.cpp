// Signatures of piecewise linear paths and the group operations on them.
#include <roughcc/roughcc.hpp>

#include <cstdio>
#include <iostream>

using namespace roughcc;

int main() {
  // a square loop in the plane: net displacement 0, enclosed area 1
  PLPath square;
  square.times = {0, 0.25, 0.5, 0.75, 1.0};
  Vec p(2);
  p << 0, 0;
  square.points.push_back(p);
  p << 1, 0;
  square.points.push_back(p);
  p << 1, 1;
  square.points.push_back(p);
  p << 0, 1;
  square.points.push_back(p);
  p << 0, 0;
  square.points.push_back(p);

  GroupElem g = pl_signature(square);
  std::printf("square loop: |a| = %.3g, area a12 = %.17g\n", g.a.norm(), g.A(0, 1));

  // Chen: the signature of the whole equals the product over a split
  GroupElem left = pl_signature_between(square, 0, 2);
  GroupElem right = pl_signature_between(square, 2, 4);
  GroupElem glued = gmul(left, right);
  std::printf("chen gap: %.3g\n", std::max((glued.a - g.a).cwiseAbs().maxCoeff(),
                                           (glued.A - g.A).cwiseAbs().maxCoeff()));

  // signatures invert by running the path backwards
  GroupElem back = pl_signature(reverse(square));
  GroupElem round = gmul(g, back);
  std::printf("loop . loop^-1 deviation: %.3g\n",
              std::max(round.a.norm(), round.A.norm()));

  std::cout << to_json(g) << "\n";
  return 0;
}
