// Draw a uniformly random matching of D_m with heights, and print its
// shuffle trace.
//   sample_and_render [m] [seed] [out.svg]
#include <fstream>
#include <iostream>

#include <dp3/dp3.hpp>

int main(int argc, char** argv) {
  using namespace dp3;
  Order m = Order::parse(argc > 1 ? argv[1] : "20");
  std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 1;
  std::string path = argc > 3 ? argv[3] : "sample.svg";

  Matching mm = sample(m, seed, [](const ShuffleTrace& t) { std::cout << trace_to_json(t).dump() << "\n"; });
  std::cout << "|M| = " << mm.size() << ", count " << count_formula(m) << "\n";

  RenderOptions opt;
  opt.fill = FaceFill::Height;
  opt.show_graph = false;
  std::ofstream(path) << render_svg(mm.diamond(), &mm, opt);
  std::cout << "wrote " << path << "\n";
}
