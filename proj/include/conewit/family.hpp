#ifndef CONEWIT_FAMILY_HPP
#define CONEWIT_FAMILY_HPP

// The three-parameter Choi-type family Phi[a,b,c] : M_3 -> M_3,
//
//   Phi[a,b,c](X) = [ a x11 + b x22 + c x33   -x12                     -x13
//                     -x21                     c x11 + a x22 + b x33   -x23
//                     -x31                     -x32   b x11 + c x22 + a x33 ]
//
// together with the closed-form classification of its positivity cones.

#include "conewit/maps.hpp"

#include <initializer_list>
#include <utility>

namespace conewit {

struct FamilyClassification {
  bool positive = false;
  bool two_positive = false;
  bool completely_positive = false;
  bool completely_copositive = false;  // equivalently 2-copositive for this family
  bool decomposable = false;
  bool choi_matrix_ppt = false;
};

namespace detail {
inline void check_family_params(double a, double b, double c) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0)) {
    throw DomainError("family: parameters a, b, c must be nonnegative");
  }
}
}  // namespace detail

/// A[a,b,c], the Choi matrix of Phi[a,b,c].
inline Matrix family_choi(double a, double b, double c) {
  detail::check_family_params(a, b, c);
  Matrix m = Matrix::Zero(9, 9);
  const double diag[9] = {a, c, b, b, a, c, c, b, a};
  for (int i = 0; i < 9; ++i) m(i, i) = diag[i];
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{0, 4}, {0, 8}, {4, 8}}) {
    m(i, j) = -1.0;
    m(j, i) = -1.0;
  }
  return m;
}

inline LinMap phi_family(double a, double b, double c) {
  return LinMap::from_choi(family_choi(a, b, c), Dims{3, 3});
}

/// Exact comparisons on the inputs; boundary points belong to the cones.
inline FamilyClassification classify(double a, double b, double c) {
  detail::check_family_params(a, b, c);
  FamilyClassification r;
  const double bc = b * c;
  r.positive = (a + b + c >= 2.0) && (!(a <= 1.0) || bc >= (1.0 - a) * (1.0 - a));
  // The literal 2-positivity predicate also admits b = c = 0 with 1 <= a < 2,
  // where the map is not even positive; intersect with positivity.
  const bool two_pos_literal = a >= 2.0 || (a >= 1.0 && a < 2.0 && bc >= (2.0 - a) * (b + c));
  r.two_positive = two_pos_literal && r.positive;
  r.completely_positive = a >= 2.0;
  r.completely_copositive = bc >= 1.0;
  r.decomposable = !(a <= 2.0) || bc >= ((2.0 - a) / 2.0) * ((2.0 - a) / 2.0);
  r.choi_matrix_ppt = r.completely_positive && r.completely_copositive;
  return r;
}

}  // namespace conewit

#endif  // CONEWIT_FAMILY_HPP
