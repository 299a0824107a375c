// Prints the edge types in M_m (x) M_n that survive the integer conditions,
// and checks two known edge states numerically.

#include "conewit/conewit.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  using namespace conewit;
  const std::size_t m = argc > 2 ? std::strtoul(argv[1], nullptr, 10) : 3;
  const std::size_t n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;

  const TypeCatalog cat = admissible_edge_types(m, n);
  std::printf("%zu x %zu, up to symmetry:", m, n);
  for (const auto& [p, q] : cat.up_to_symmetry()) std::printf(" (%zu,%zu)", p, q);
  std::printf("\n%s\n", cat.note.c_str());

  for (const auto& [name, state] : {std::pair{"Choi", choi_ppt_state()}, std::pair{"Stormer", stormer_state(1.0)}}) {
    const EdgeReport r = is_edge(state);
    std::printf("%s state: type (%zu,%zu), edge %s\n", name, r.p, r.q, to_string(r.edge.status));
  }
  return 0;
}
