#ifndef CONEWIT_MAPS_HPP
#define CONEWIT_MAPS_HPP

// Linear maps M_m -> M_n in Choi form, Kraus constructions, the bilinear
// pairing <A, phi> = Tr(A C_phi^T), and the standard example states.

#include "conewit/matcore.hpp"

#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conewit {

/// Kraus witness of a decomposable map: sum_V V^* X V + sum_W W^* X^T W.
struct KrausForm {
  std::vector<Matrix> cp;   // each m x n
  std::vector<Matrix> ccp;  // each m x n
};

/// A linear map M_m -> M_n stored as its Choi matrix sum_ij e_ij (x) phi(e_ij).
class LinMap {
 public:
  LinMap() = default;

  /// Wraps a Choi matrix; the bipartite tag fixes (m, n).
  static LinMap from_choi(CMat choi) {
    const Dims d = choi.require_dims("LinMap::from_choi");
    LinMap f;
    f.dims_ = d;
    f.choi_ = std::move(choi);
    return f;
  }

  static LinMap from_choi(Matrix choi, Dims d) { return from_choi(CMat(std::move(choi), d)); }

  std::size_t m() const { return dims_.m; }
  std::size_t n() const { return dims_.n; }
  Dims dims() const { return dims_; }
  const CMat& choi() const { return choi_; }
  const std::optional<KrausForm>& kraus() const { return kraus_; }

  LinMap with_kraus(KrausForm k) const {
    LinMap f = *this;
    f.kraus_ = std::move(k);
    return f;
  }

  LinMap without_kraus() const {
    LinMap f = *this;
    f.kraus_.reset();
    return f;
  }

 private:
  Dims dims_{};
  CMat choi_;
  std::optional<KrausForm> kraus_;
};

/// A product vector xi (x) eta with both factors normalized.
class ProductVector {
 public:
  ProductVector() = default;

  ProductVector(Vector xi, Vector eta) : xi_(std::move(xi)), eta_(std::move(eta)) {
    if (xi_.size() == 0 || eta_.size() == 0) throw DomainError("ProductVector: empty factor");
    if (std::abs(xi_.norm() - 1.0) > 1e-12 || std::abs(eta_.norm() - 1.0) > 1e-12) {
      throw DomainError("ProductVector: factors must be unit vectors");
    }
  }

  /// Normalizes both factors; throws on a zero factor.
  static ProductVector normalized(const Vector& xi, const Vector& eta) {
    const double a = xi.norm();
    const double b = eta.norm();
    if (a == 0.0 || b == 0.0) throw DomainError("ProductVector: zero factor");
    return ProductVector(xi / a, eta / b);
  }

  const Vector& xi() const { return xi_; }
  const Vector& eta() const { return eta_; }
  std::size_t m() const { return static_cast<std::size_t>(xi_.size()); }
  std::size_t n() const { return static_cast<std::size_t>(eta_.size()); }

  Vector tensor() const { return kron(xi_, eta_); }
  /// conj(xi) (x) eta.
  Vector partial_conjugate() const { return kron(Vector(xi_.conjugate()), eta_); }

  Matrix projector() const {
    const Vector z = tensor();
    return z * z.adjoint();
  }

 private:
  Vector xi_;
  Vector eta_;
};

/// w = sum_i e_i (x) V_i^*, the vector whose rank-one projector is C_{phi_V}.
inline Vector kraus_vector(const Matrix& v) { return mat_vec(v.conjugate()); }

inline LinMap choi_of_kraus(Dims d, std::vector<Matrix> cp, std::vector<Matrix> ccp = {}) {
  const auto mi = static_cast<Eigen::Index>(d.m);
  const auto ni = static_cast<Eigen::Index>(d.n);
  const auto t = mi * ni;
  Matrix choi = Matrix::Zero(t, t);
  for (const auto& v : cp) {
    if (v.rows() != mi || v.cols() != ni) throw DomainError("choi_of_kraus: Kraus matrix is not m x n");
    const Vector w = kraus_vector(v);
    choi += w * w.adjoint();
  }
  if (!ccp.empty()) {
    Matrix acc = Matrix::Zero(t, t);
    for (const auto& v : ccp) {
      if (v.rows() != mi || v.cols() != ni) throw DomainError("choi_of_kraus: Kraus matrix is not m x n");
      const Vector w = kraus_vector(v);
      acc += w * w.adjoint();
    }
    choi += partial_transpose(acc, d);
  }
  return LinMap::from_choi(std::move(choi), d).with_kraus({std::move(cp), std::move(ccp)});
}

/// phi(X) = sum_ij X_ij phi(e_ij), where phi(e_ij) is block (i,j) of the Choi matrix.
inline Matrix apply(const LinMap& phi, const Matrix& x) {
  const auto m = static_cast<Eigen::Index>(phi.m());
  const auto n = static_cast<Eigen::Index>(phi.n());
  if (x.rows() != m || x.cols() != m) throw DomainError("apply: input must be m x m");
  Matrix out = Matrix::Zero(n, n);
  const Matrix& c = phi.choi().mat();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (x(i, j) != cplx(0.0)) out += x(i, j) * c.block(i * n, j * n, n, n);
  return out;
}

/// <A, phi> = Tr(A C_phi^T) = sum_ij A_ij (C_phi)_ij.
inline double pair(const Matrix& a, const LinMap& phi) {
  const Matrix& c = phi.choi().mat();
  if (a.rows() != c.rows() || a.cols() != c.cols()) throw DomainError("pair: dimension mismatch");
  if (!is_hermitian(a)) throw DomainError("pair: state is not Hermitian");
  return (a.array() * c.array()).sum().real();
}

inline double pair(const CMat& a, const LinMap& phi) {
  if (a.dims() && *a.dims() != phi.dims()) throw DomainError("pair: bipartite dims differ");
  return pair(a.mat(), phi);
}

/// phi o tp: Choi matrix is the partial transpose; phi_V o tp = phi^V.
inline LinMap compose_transpose(const LinMap& phi) {
  LinMap out = LinMap::from_choi(partial_transpose(phi.choi()));
  if (phi.kraus()) out = out.with_kraus({phi.kraus()->ccp, phi.kraus()->cp});
  return out;
}

/// tp o phi: every n x n block transposed; tp o phi_V = phi^{conj V}.
inline LinMap transpose_compose(const LinMap& phi) {
  const auto m = static_cast<Eigen::Index>(phi.m());
  const auto n = static_cast<Eigen::Index>(phi.n());
  const Matrix& c = phi.choi().mat();
  Matrix out(c.rows(), c.cols());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = c.block(i * n, j * n, n, n).transpose();
  LinMap f = LinMap::from_choi(std::move(out), phi.dims());
  if (phi.kraus()) {
    KrausForm k;
    for (const auto& v : phi.kraus()->ccp) k.cp.push_back(v.conjugate());
    for (const auto& v : phi.kraus()->cp) k.ccp.push_back(v.conjugate());
    f = f.with_kraus(std::move(k));
  }
  return f;
}

/// X -> Tr(X) I_n; its Choi matrix is the identity.
inline LinMap trace_map(std::size_t m, std::size_t n) {
  std::vector<Matrix> cp;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix e = Matrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = 1.0;
      cp.push_back(std::move(e));
    }
  return choi_of_kraus(Dims{m, n}, std::move(cp));
}

/// The transpose map on M_d (Choi matrix = swap operator).
inline LinMap transpose_map(std::size_t d) {
  const auto di = static_cast<Eigen::Index>(d);
  Matrix c = Matrix::Zero(di * di, di * di);
  for (Eigen::Index i = 0; i < di; ++i)
    for (Eigen::Index j = 0; j < di; ++j) c(i * di + j, j * di + i) = 1.0;
  return LinMap::from_choi(std::move(c), Dims{d, d});
}

// ---------------------------------------------------------------------------
// Example states in M_3 (x) M_3

namespace detail {
inline void symmetric_set(Matrix& a, Eigen::Index i, Eigen::Index j, cplx v) {
  a(i, j) = v;
  a(j, i) = std::conj(v);
}
inline void check_unit(const Vector& v, const char* what) {
  if (v.size() != 3 || std::abs(v.norm() - 1.0) > 1e-12) {
    throw DomainError(std::string(what) + ": expected a unit vector in C^3");
  }
}
}  // namespace detail

/// Choi's 3x3 PPT entangled state, type (4,4).
inline CMat choi_ppt_state() {
  Matrix a = Matrix::Zero(9, 9);
  const double diag[9] = {1.0, 2.0, 0.5, 0.5, 1.0, 2.0, 2.0, 0.5, 1.0};
  for (int i = 0; i < 9; ++i) a(i, i) = diag[i];
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{0, 4}, {0, 8}, {4, 8}, {1, 3}, {2, 6}, {5, 7}})
    detail::symmetric_set(a, i, j, 1.0);
  return CMat(std::move(a), Dims{3, 3});
}

/// Stormer's PPT state; an edge of type (7,6) unless mu = 1/2.
inline CMat stormer_state(double mu) {
  if (!(mu > 0.0)) throw DomainError("stormer_state: mu must be positive");
  Matrix a = Matrix::Zero(9, 9);
  const double p = 2.0 * mu;
  const double q = 4.0 * mu * mu;
  const double diag[9] = {p, q, 1.0, 1.0, p, q, q, 1.0, p};
  for (int i = 0; i < 9; ++i) a(i, i) = diag[i];
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{0, 4}, {0, 8}, {4, 8}}) detail::symmetric_set(a, i, j, p);
  return CMat(std::move(a), Dims{3, 3});
}

/// The X-shaped family with mu = 1/lambda; (x|y) = sum_i x_i conj(y_i).
inline CMat x_state(double lambda, const Vector& xi, const Vector& eta, const Vector& zeta) {
  if (!(lambda > 0.0)) throw DomainError("x_state: lambda must be positive");
  detail::check_unit(xi, "x_state");
  detail::check_unit(eta, "x_state");
  detail::check_unit(zeta, "x_state");
  const auto ip = [](const Vector& x, const Vector& y) { return y.dot(x); };
  const double l2 = lambda * lambda;
  const double m2 = 1.0 / l2;
  Matrix a = Matrix::Zero(9, 9);
  const double diag[9] = {1.0, l2, m2, m2, 1.0, l2, l2, m2, 1.0};
  for (int i = 0; i < 9; ++i) a(i, i) = diag[i];
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{0, 4}, {0, 8}, {4, 8}}) detail::symmetric_set(a, i, j, 1.0);
  detail::symmetric_set(a, 1, 3, ip(eta, xi));
  detail::symmetric_set(a, 2, 6, ip(zeta, xi));
  detail::symmetric_set(a, 5, 7, ip(zeta, eta));
  return CMat(std::move(a), Dims{3, 3});
}

/// lambda = 1 gives mu = lambda; such states are not edges.
inline bool x_state_degenerate(double lambda) { return lambda == 1.0; }

}  // namespace conewit

#endif  // CONEWIT_MAPS_HPP
