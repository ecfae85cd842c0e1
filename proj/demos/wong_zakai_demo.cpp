// ODE flows along interpolants vs the rough flow.  With non-commuting fields
// the gap closes as the mesh refines; with commuting fields the area never
// enters and the table is flat at solver precision.
#include <roughcc/roughcc.hpp>

#include <iostream>

using namespace roughcc;

int main() {
  std::vector<double> times(257);
  for (int i = 0; i < 257; ++i) times[i] = i / 256.0;
  detail::Rng rng(3);
  RoughPath x = synth_pure_area(times, rng.skew_with_spectrum(2, 1.0, 1.0));

  for (const char* name : {"sine", "commuting"}) {
    std::cout << "# basis " << name << "\n";
    WzReport rep = wong_zakai_table(x, make_basis(name), y0_lattice(2, 2), {8, 16, 32, 64}, 16);
    std::cout << to_csv(rep);
  }
  return 0;
}
