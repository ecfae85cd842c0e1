// Geodesic interpolation of a synthetic rough path: the d_beta column of the
// report shrinks as the partition refines.
#include <roughcc/roughcc.hpp>

#include <iostream>

using namespace roughcc;

int main() {
  RandomWgParams prm;
  prm.dim = 4;
  prm.levels = 7;
  prm.alpha = 0.45;
  prm.gamma = 0.65;
  prm.c2 = 0.05;
  prm.seed = 1;
  RoughPath x = synth_random_wg(prm);

  ConvergenceReport rep = convergence_study(x, 0.35, {4, 8, 16, 32, 64}, 16);
  std::cout << to_csv(rep);
  return 0;
}
