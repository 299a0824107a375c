#ifndef CONEWIT_MATCORE_HPP
#define CONEWIT_MATCORE_HPP

// Dense complex linear algebra shared by the rest of the library.
//
// Conventions (fixed for the whole library):
//   * a vector z in C^m (x) C^n is indexed as z[i*n + k], i.e. the first
//     tensor factor is the slow (row) index;
//   * vec_mat(z) is the m x n matrix whose row i is z_i^T, where
//     z = sum_i e_i (x) z_i;
//   * the partial transpose acts on the first factor (block-wise transpose
//     of an m x m array of n x n blocks).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conewit {

using cplx = std::complex<double>;
using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Bipartite tag: the matrix lives in M_m (x) M_n.
struct Dims {
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t total() const { return m * n; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Thrown when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace tolerance {
/// PSD test: lambda_min >= -psd * max(1, lambda_max).
inline constexpr double psd = 1e-9;
/// Rank cutoff: sigma > rank * sigma_max.
inline constexpr double rank = 1e-8;
/// Hermiticity: ||A - A^*||_F <= hermitian * (1 + ||A||_F).
inline constexpr double hermitian = 1e-9;
}  // namespace tolerance

/// Dense complex matrix with an optional bipartite tag.
class CMat {
 public:
  CMat() = default;

  explicit CMat(Matrix entries) : a_(std::move(entries)) {}

  CMat(Matrix entries, Dims dims) : a_(std::move(entries)), dims_(dims) {
    if (a_.rows() != a_.cols() || static_cast<std::size_t>(a_.rows()) != dims.total()) {
      throw DomainError("CMat: bipartite tag (" + std::to_string(dims.m) + "," +
                        std::to_string(dims.n) + ") does not match a " +
                        std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()) +
                        " matrix");
    }
  }

  static CMat zero(std::size_t rows, std::size_t cols) {
    return CMat(Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols)));
  }
  static CMat zero(Dims d) {
    const auto t = static_cast<Eigen::Index>(d.total());
    return CMat(Matrix::Zero(t, t), d);
  }
  static CMat identity(Dims d) {
    const auto t = static_cast<Eigen::Index>(d.total());
    return CMat(Matrix::Identity(t, t), d);
  }
  static CMat identity(std::size_t size) {
    const auto t = static_cast<Eigen::Index>(size);
    return CMat(Matrix::Identity(t, t));
  }

  std::size_t rows() const { return static_cast<std::size_t>(a_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(a_.cols()); }
  bool is_square() const { return a_.rows() == a_.cols(); }

  cplx operator()(std::size_t i, std::size_t j) const {
    return a_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  const Matrix& mat() const { return a_; }
  const std::optional<Dims>& dims() const { return dims_; }

  Dims require_dims(const char* what) const {
    if (!dims_) throw DomainError(std::string(what) + ": matrix carries no bipartite tag");
    return *dims_;
  }

  CMat with_dims(Dims d) const { return CMat(a_, d); }

  CMat adjoint() const { return retag(a_.adjoint()); }
  CMat conjugate() const { return retag(a_.conjugate()); }

  double norm() const { return a_.norm(); }

  friend CMat operator+(const CMat& x, const CMat& y) { return x.retag(x.a_ + y.a_); }
  friend CMat operator-(const CMat& x, const CMat& y) { return x.retag(x.a_ - y.a_); }
  friend CMat operator*(double s, const CMat& x) { return x.retag(s * x.a_); }
  friend CMat operator*(cplx s, const CMat& x) { return x.retag(s * x.a_); }

 private:
  CMat retag(Matrix m) const {
    if (dims_ && m.rows() == a_.rows() && m.cols() == a_.cols()) return CMat(std::move(m), *dims_);
    return CMat(std::move(m));
  }

  Matrix a_;
  std::optional<Dims> dims_;
};

/// Orthonormal basis of a subspace of C^ambient, stored as the columns of a matrix.
class Subspace {
 public:
  Subspace() = default;

  /// Empty subspace of C^ambient.
  explicit Subspace(std::size_t ambient)
      : basis_(Matrix::Zero(static_cast<Eigen::Index>(ambient), 0)) {}

  /// Span of the columns of `spanning`, orthonormalized; directions with
  /// singular value <= tol * sigma_max are dropped.
  static Subspace span(const Matrix& spanning, double tol = tolerance::rank) {
    Subspace s(static_cast<std::size_t>(spanning.rows()));
    if (spanning.cols() == 0 || spanning.norm() == 0.0) return s;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(spanning), Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cut = tol * sv(0);
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    s.basis_ = svd.matrixU().leftCols(r);
    return s;
  }

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient,
                       double tol = tolerance::rank) {
    Matrix m(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (static_cast<std::size_t>(vectors[j].size()) != ambient) {
        throw DomainError("Subspace::span: vector length mismatch");
      }
      m.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    return span(m, tol);
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::Identity(static_cast<Eigen::Index>(ambient),
                                static_cast<Eigen::Index>(ambient));
    return s;
  }

  std::size_t ambient_dim() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  bool empty() const { return basis_.cols() == 0; }

  /// ambient x dim, orthonormal columns.
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t j) const { return basis_.col(static_cast<Eigen::Index>(j)); }

  Matrix projector() const { return basis_ * basis_.adjoint(); }

  Subspace complement() const {
    const auto n = basis_.rows();
    Matrix p = Matrix::Identity(n, n) - projector();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(p)};
    Subspace s(ambient_dim());
    const Eigen::Index k = n - basis_.cols();
    // eigenvalues of I - P are 0 (dim times) then 1 (k times)
    s.basis_ = es.eigenvectors().rightCols(k);
    return s;
  }

  /// Squared norm of the orthogonal projection of v.
  double projected_norm2(const Vector& v) const {
    return (basis_.adjoint() * v).squaredNorm();
  }

 private:
  Matrix basis_;
};

struct SpectralDecomp {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // column j belongs to eigenvalue j
};

inline bool is_hermitian(const Matrix& a, double tol = tolerance::hermitian) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol * (1.0 + a.norm());
}

/// (A+A^*)/2 when A is Hermitian within tolerance, otherwise DomainError.
inline Matrix hermitian_part(const Matrix& a, const char* what) {
  if (!is_hermitian(a)) throw DomainError(std::string(what) + ": matrix is not Hermitian");
  return (a + a.adjoint()) / 2.0;
}

inline CMat kron(const CMat& a, const CMat& b) {
  const auto& x = a.mat();
  const auto& y = b.mat();
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  if (a.is_square() && b.is_square()) return CMat(std::move(out), Dims{a.rows(), b.rows()});
  return CMat(std::move(out));
}

inline Vector kron(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return out;
}

/// Block (i,j) of the result is block (j,i) of `a`, blocks being n x n.
inline Matrix partial_transpose(const Matrix& a, Dims d) {
  const auto m = static_cast<Eigen::Index>(d.m);
  const auto n = static_cast<Eigen::Index>(d.n);
  if (a.rows() != m * n || a.cols() != m * n) {
    throw DomainError("partial_transpose: matrix size does not match bipartite dims");
  }
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out.block(i * n, j * n, n, n) = a.block(j * n, i * n, n, n);
  return out;
}

inline CMat partial_transpose(const CMat& a) {
  const Dims d = a.require_dims("partial_transpose");
  return CMat(partial_transpose(a.mat(), d), d);
}

inline SpectralDecomp hermitian_eig(const Matrix& a) {
  const Matrix h = hermitian_part(a, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(h)};
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

inline SpectralDecomp hermitian_eig(const CMat& a) { return hermitian_eig(a.mat()); }

inline RealVector singular_values(const Matrix& a) {
  if (a.size() == 0) return RealVector();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd{Eigen::MatrixXcd(a)};
  return svd.singularValues();
}

inline std::size_t numerical_rank(const Matrix& a, double tol = tolerance::rank) {
  const RealVector sv = singular_values(a);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol * sv(0);
  return static_cast<std::size_t>((sv.array() > cut).count());
}

inline std::size_t numerical_rank(const CMat& a, double tol = tolerance::rank) {
  return numerical_rank(a.mat(), tol);
}

namespace detail {

// Split C^rows into range and kernel of `a`. Hermitian input goes through the
// eigendecomposition, anything else through the SVD.
inline std::pair<Subspace, Subspace> range_kernel(const Matrix& a, double tol) {
  const auto n = a.rows();
  Subspace range(static_cast<std::size_t>(n));
  Subspace kernel(static_cast<std::size_t>(n));
  Matrix rb, kb;
  if (is_hermitian(a)) {
    const auto sd = hermitian_eig(a);
    const double top = sd.eigenvalues.cwiseAbs().maxCoeff();
    std::vector<Eigen::Index> in, out;
    for (Eigen::Index j = 0; j < n; ++j)
      (top > 0.0 && std::abs(sd.eigenvalues(j)) > tol * top ? in : out).push_back(j);
    rb.resize(n, static_cast<Eigen::Index>(in.size()));
    kb.resize(n, static_cast<Eigen::Index>(out.size()));
    for (std::size_t j = 0; j < in.size(); ++j)
      rb.col(static_cast<Eigen::Index>(j)) = sd.eigenvectors.col(in[j]);
    for (std::size_t j = 0; j < out.size(); ++j)
      kb.col(static_cast<Eigen::Index>(j)) = sd.eigenvectors.col(out[j]);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(a),
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv(0) > 0.0 && sv(r) > tol * sv(0)) ++r;
    rb = svd.matrixU().leftCols(r);
    kb = svd.matrixV().rightCols(n - r);
  }
  return {Subspace::span(rb, 0.5), Subspace::span(kb, 0.5)};
}

}  // namespace detail

inline Subspace range_basis(const Matrix& a, double tol = tolerance::rank) {
  return detail::range_kernel(a, tol).first;
}
inline Subspace kernel_basis(const Matrix& a, double tol = tolerance::rank) {
  return detail::range_kernel(a, tol).second;
}
inline Subspace range_basis(const CMat& a, double tol = tolerance::rank) {
  return range_basis(a.mat(), tol);
}
inline Subspace kernel_basis(const CMat& a, double tol = tolerance::rank) {
  return kernel_basis(a.mat(), tol);
}

/// z = sum_i e_i (x) z_i  ->  m x n matrix with row i = z_i^T.
inline Matrix vec_mat(const Vector& z, std::size_t m, std::size_t n) {
  if (static_cast<std::size_t>(z.size()) != m * n) throw DomainError("vec_mat: length mismatch");
  Matrix out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index k = 0; k < out.cols(); ++k) out(i, k) = z(i * out.cols() + k);
  return out;
}

inline Vector mat_vec(const Matrix& x) {
  Vector z(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index k = 0; k < x.cols(); ++k) z(i * x.cols() + k) = x(i, k);
  return z;
}

/// lambda_min >= -tol * max(1, lambda_max).
inline bool is_psd(const Matrix& a, double tol = tolerance::psd) {
  const auto sd = hermitian_eig(a);
  const double lo = sd.eigenvalues(0);
  const double hi = sd.eigenvalues(sd.eigenvalues.size() - 1);
  return lo >= -tol * std::max(1.0, hi);
}

inline bool is_psd(const CMat& a, double tol = tolerance::psd) { return is_psd(a.mat(), tol); }

/// Hermitian projection onto the PSD cone (negative eigenvalues clipped).
inline Matrix psd_clip(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd((a + a.adjoint()) / 2.0)};
  const RealVector w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace conewit

#endif  // CONEWIT_MATCORE_HPP
