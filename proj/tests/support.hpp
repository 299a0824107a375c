#ifndef CONEWIT_TESTS_SUPPORT_HPP
#define CONEWIT_TESTS_SUPPORT_HPP

#include "conewit/conewit.hpp"

#include <random>

namespace testing_support {

using namespace conewit;

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  Matrix a(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) a(i, j) = cplx(g(rng), g(rng));
  return a;
}

inline Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  const Matrix a = random_matrix(rng, d, d);
  return (a + a.adjoint()) / 2.0;
}

inline Matrix random_psd(std::mt19937_64& rng, Eigen::Index d, Eigen::Index rank) {
  const Matrix a = random_matrix(rng, d, rank);
  return a * a.adjoint();
}

inline Vector random_unit(std::mt19937_64& rng, Eigen::Index d) {
  Vector v = random_matrix(rng, d, 1).col(0);
  return v / v.norm();
}

/// A map with a random Hermitian Choi matrix.
inline LinMap random_map(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  return LinMap::from_choi(random_hermitian(rng, static_cast<Eigen::Index>(m * n)), Dims{m, n});
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// A state detected by Phi[1,0,1]: the Choi PPT state with the roles of the
/// two off-diagonal weights exchanged (lambda = 1/sqrt 2).
inline CMat mirrored_choi_state() {
  Vector e1 = Vector::Zero(3);
  e1(0) = 1.0;
  return x_state(1.0 / std::sqrt(2.0), e1, e1, e1);
}

}  // namespace testing_support

#endif  // CONEWIT_TESTS_SUPPORT_HPP
