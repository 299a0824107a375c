// Walks through the Choi map Phi[1,0,1]: closed-form classification, a
// numerical positivity check, the zero set of the witness and a PPT state it
// detects.

#include "conewit/conewit.hpp"

#include <cmath>
#include <cstdio>

int main() {
  using namespace conewit;
  const LinMap phi = phi_family(1, 0, 1);

  const FamilyClassification f = classify(1, 0, 1);
  std::printf("positive %d, decomposable %d, CP %d\n", f.positive, f.decomposable, f.completely_positive);

  SearchConfig cfg;
  cfg.restarts = 128;
  const Verdict bp = is_block_positive(phi, cfg);
  std::printf("block-positive: %s (min pairing %.3g)\n", to_string(bp.status), bp.stats->best);

  const WitnessReport w = witness_analysis(phi, cfg);
  std::printf("zero set spans %zu dims, partial conjugates span %zu\n", w.span_dim, w.conj_span_dim);

  Vector e1 = Vector::Zero(3);
  e1(0) = 1.0;
  const CMat state = x_state(1.0 / std::sqrt(2.0), e1, e1, e1);
  const Verdict d = is_decomposable(phi, {}, {state});
  std::printf("decomposable: %s (witness pairing %.3g)\n", to_string(d.status), d.certificate->value);
  return 0;
}
