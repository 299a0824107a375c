#ifndef CONEWIT_PRODSEARCH_HPP
#define CONEWIT_PRODSEARCH_HPP

// Bilinear optimization over product vectors xi (x) eta.
//
// Every objective handled here is a Hermitian quadratic form in eta for fixed
// xi and in xi for fixed eta, so a search alternates exact eigen-steps: the
// bottom (or top) eigenvector of the reduced form is the optimal factor. The
// objective is monotone along every run. Restarts are seeded independently
// from (seed, restart index) and merged by (value, restart index), so the
// result does not depend on the order in which restarts are evaluated.

#include "conewit/maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace conewit {

struct SearchConfig {
  std::size_t restarts = 64;
  std::size_t max_iters = 200;
  double conv_tol = 1e-12;  // relative change of the objective
  std::uint64_t seed = 0;
  double dedup_overlap = 1.0 - 1e-6;
  bool record_trace = false;

  void validate() const {
    if (restarts < 1) throw DomainError("SearchConfig: restarts must be >= 1");
    if (!(dedup_overlap > 0.0 && dedup_overlap < 1.0)) {
      throw DomainError("SearchConfig: dedup_overlap must lie in (0,1)");
    }
  }
};

enum class Sense { Minimize, Maximize };

struct SearchResult {
  double value = 0.0;     // best objective over restarts
  double residual = 0.0;  // distance of `value` from the ideal optimum (max modes), else = value
  ProductVector best;
  std::size_t best_restart = 0;
  std::size_t n_converged = 0;
  std::vector<double> per_restart_values;
  std::vector<ProductVector> per_restart_points;
  std::vector<std::vector<double>> traces;  // objective after each half-step, if recorded
};

/// "Found" threshold for max-mode searches.
inline constexpr double found_residual = 1e-8;

namespace detail {

inline std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(restart) >> 32)};
  return std::mt19937_64(seq);
}

inline Vector random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
  return v / v.norm();
}

/// (xi (x) I)^* H (xi (x) I), an n x n form.
inline Matrix contract_first(const Matrix& h, const Vector& xi, Eigen::Index n) {
  const Eigen::Index m = xi.size();
  Matrix q = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (xi(i) == cplx(0.0)) continue;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (xi(j) == cplx(0.0)) continue;
      q += (std::conj(xi(i)) * xi(j)) * h.block(i * n, j * n, n, n);
    }
  }
  return q;
}

/// (I (x) eta)^* H (I (x) eta), an m x m form.
inline Matrix contract_second(const Matrix& h, const Vector& eta, Eigen::Index m) {
  const Eigen::Index n = eta.size();
  Matrix r(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) r(i, j) = eta.dot(h.block(i * n, j * n, n, n) * eta);
  return r;
}

inline Vector extreme_eigenvector(const Matrix& form, Sense sense) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd((form + form.adjoint()) / 2.0)};
  const Eigen::Index k = sense == Sense::Minimize ? 0 : form.rows() - 1;
  return es.eigenvectors().col(k);
}

inline double form_value(const Matrix& form, const Vector& v) { return v.dot(form * v).real(); }

struct BilinearForms {
  std::size_t m = 0;
  std::size_t n = 0;
  std::function<Matrix(const Vector& xi)> eta_form;   // n x n
  std::function<Matrix(const Vector& eta)> xi_form;   // m x m
};

using Initializer = std::function<std::pair<Vector, Vector>(std::mt19937_64&, std::size_t)>;

inline bool improves(double candidate, double incumbent, Sense sense) {
  return sense == Sense::Minimize ? candidate < incumbent : candidate > incumbent;
}

inline SearchResult alternate(const BilinearForms& f, Sense sense, const SearchConfig& cfg,
                              const Initializer& init = {}) {
  cfg.validate();
  SearchResult out;
  out.per_restart_values.reserve(cfg.restarts);
  out.per_restart_points.reserve(cfg.restarts);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    auto rng = restart_rng(cfg.seed, r);
    Vector xi, eta;
    if (init) {
      std::tie(xi, eta) = init(rng, r);
    } else {
      xi = random_unit(f.m, rng);
      eta = random_unit(f.n, rng);
    }
    std::vector<double> trace;
    double prev = form_value(f.eta_form(xi), eta);
    if (cfg.record_trace) trace.push_back(prev);
    bool converged = false;
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
      eta = extreme_eigenvector(f.eta_form(xi), sense);
      if (cfg.record_trace) trace.push_back(form_value(f.eta_form(xi), eta));
      const Matrix rx = f.xi_form(eta);
      xi = extreme_eigenvector(rx, sense);
      const double cur = form_value(rx, xi);
      if (cfg.record_trace) trace.push_back(cur);
      if (std::isfinite(prev) &&
          std::abs(cur - prev) <= cfg.conv_tol * std::max(std::abs(cur), std::abs(prev))) {
        converged = true;
        prev = cur;
        break;
      }
      prev = cur;
    }
    ProductVector pv = ProductVector::normalized(xi, eta);
    const double value = form_value(f.eta_form(pv.xi()), pv.eta());
    if (converged) ++out.n_converged;
    if (r == 0 || improves(value, out.value, sense)) {
      out.value = value;
      out.best = pv;
      out.best_restart = r;
    }
    out.per_restart_values.push_back(value);
    out.per_restart_points.push_back(std::move(pv));
    if (cfg.record_trace) out.traces.push_back(std::move(trace));
  }
  out.residual = out.value;
  return out;
}

inline BilinearForms quadratic_forms(const Matrix& h, std::size_t m, std::size_t n) {
  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  return {m, n, [h, ni](const Vector& xi) { return contract_first(h, xi, ni); },
          [h, mi](const Vector& eta) { return contract_second(h, eta, mi); }};
}

/// Forms of z^* H1 z + w^* H2 w with z = xi (x) eta, w = conj(xi) (x) eta.
/// In xi the second term is conj(xi)^* N conj(xi) = xi^* N^T xi.
inline BilinearForms paired_forms(const Matrix& h1, const Matrix& h2, std::size_t m, std::size_t n) {
  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  return {m, n,
          [h1, h2, ni](const Vector& xi) {
            return Matrix(contract_first(h1, xi, ni) + contract_first(h2, xi.conjugate(), ni));
          },
          [h1, h2, mi](const Vector& eta) {
            return Matrix(contract_second(h1, eta, mi) + contract_second(h2, eta, mi).transpose());
          }};
}

/// Restarts from given points instead of random ones.
inline Initializer start_from(std::vector<ProductVector> points) {
  return [pts = std::move(points)](std::mt19937_64&, std::size_t r) {
    return std::pair{pts.at(r).xi(), pts.at(r).eta()};
  };
}

inline void check_subspace(const Subspace& p, Dims d, const char* what) {
  if (p.ambient_dim() != d.total()) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace detail

/// pair((xi (x) eta)(xi (x) eta)^*, phi) = z^* conj(C_phi) z.
inline double product_pairing(const LinMap& phi, const ProductVector& pv) {
  const Vector z = pv.tensor();
  return z.dot(phi.choi().mat().conjugate() * z).real();
}

/// Minimizes the pairing of phi against product projectors.
inline SearchResult min_pairing_over_products(const LinMap& phi, const SearchConfig& cfg = {},
                                              const detail::Initializer& init = {}) {
  const Matrix c = hermitian_part(phi.choi().mat(), "min_pairing_over_products").conjugate();
  return detail::alternate(detail::quadratic_forms(c, phi.m(), phi.n()), Sense::Minimize, cfg, init);
}

/// Maximizes ||Pi_P (xi (x) eta)||^2; residual = 1 - value.
inline SearchResult best_product_in_subspace(const Subspace& p, Dims d, const SearchConfig& cfg = {}) {
  detail::check_subspace(p, d, "best_product_in_subspace");
  if (p.empty()) throw DomainError("best_product_in_subspace: empty subspace");
  SearchResult r = detail::alternate(detail::quadratic_forms(p.projector(), d.m, d.n),
                                     Sense::Maximize, cfg);
  r.residual = 1.0 - r.value;
  return r;
}

/// Maximizes ||Pi_D (xi (x) eta)||^2 + ||Pi_E (conj(xi) (x) eta)||^2; residual = 2 - value.
inline SearchResult best_product_in_pair(const Subspace& dsp, const Subspace& esp, Dims d,
                                         const SearchConfig& cfg = {},
                                         const detail::Initializer& init = {}) {
  detail::check_subspace(dsp, d, "best_product_in_pair");
  detail::check_subspace(esp, d, "best_product_in_pair");
  const detail::BilinearForms f =
      detail::paired_forms(dsp.projector(), esp.projector(), d.m, d.n);
  SearchResult r = detail::alternate(f, Sense::Maximize, cfg, init);
  r.residual = 2.0 - r.value;
  return r;
}

/// Overlap |<z1, z2>| of the normalized tensors; product lines are compared up to phase.
inline double line_overlap(const Vector& z1, const Vector& z2) {
  return std::abs(z1.dot(z2)) / (z1.norm() * z2.norm());
}

/// Appends `candidate` unless it spans a line already present.
inline bool add_distinct_line(std::vector<ProductVector>& lines, const ProductVector& candidate,
                              double dedup_overlap) {
  const Vector z = candidate.tensor();
  for (const auto& l : lines)
    if (line_overlap(l.tensor(), z) > dedup_overlap) return false;
  lines.push_back(candidate);
  return true;
}

/// Distinct product lines inside P found by multistart maximization.
inline std::vector<ProductVector> enumerate_product_lines(const Subspace& p, Dims d,
                                                          const SearchConfig& cfg = {}) {
  detail::check_subspace(p, d, "enumerate_product_lines");
  std::vector<ProductVector> lines;
  if (p.empty()) return lines;
  const SearchResult r = best_product_in_subspace(p, d, cfg);
  std::vector<std::size_t> order(r.per_restart_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.per_restart_values[a] > r.per_restart_values[b];
  });
  for (std::size_t i : order) {
    if (1.0 - r.per_restart_values[i] >= found_residual) break;
    add_distinct_line(lines, r.per_restart_points[i], cfg.dedup_overlap);
  }
  return lines;
}

/// Product lines gathered by a deflated multistart search.
struct LineCollection {
  std::vector<ProductVector> lines;
  std::size_t restarts_run = 0;
  std::size_t n_converged = 0;
  double best_value = 0.0;  // best plain objective seen
};

/// Deflation schedule: extra rounds whose objective is penalized on the spans
/// of the lines (and partial conjugates) found so far; every candidate is then
/// polished on the plain objective.
struct DeflationConfig {
  std::size_t rounds = 4;
  std::vector<double> weights{1.0, 0.5, 0.25, 2.0};  // cycled, relative to the objective scale
  double span_tol = 1e-4;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Subspace line_span(const std::vector<ProductVector>& lines, bool conjugated, Dims d,
                          double tol) {
  std::vector<Vector> v;
  v.reserve(lines.size());
  for (const auto& l : lines) v.push_back(conjugated ? l.partial_conjugate() : l.tensor());
  return Subspace::span(v, d.total(), tol);
}

// Lines optimal for z^* H1 z + w^* H2 w (accepted by `good`), with deflation.
inline LineCollection collect_lines(const Matrix& h1, const Matrix& h2, Dims d, Sense sense,
                                    const std::function<bool(double)>& good, double scale,
                                    const SearchConfig& cfg, const DeflationConfig& dc) {
  LineCollection out;
  const BilinearForms plain = paired_forms(h1, h2, d.m, d.n);
  auto absorb = [&](const SearchResult& r) {
    out.restarts_run += r.per_restart_values.size();
    out.n_converged += r.n_converged;
    if (out.restarts_run == r.per_restart_values.size() || improves(r.value, out.best_value, sense)) {
      out.best_value = r.value;
    }
    for (std::size_t i = 0; i < r.per_restart_values.size(); ++i)
      if (good(r.per_restart_values[i])) add_distinct_line(out.lines, r.per_restart_points[i], cfg.dedup_overlap);
  };
  absorb(alternate(plain, sense, cfg));
  const double sign = sense == Sense::Minimize ? 1.0 : -1.0;
  for (std::size_t round = 0; round < dc.rounds && !out.lines.empty() && !dc.weights.empty(); ++round) {
    const Subspace zs = line_span(out.lines, false, d, dc.span_tol);
    const Subspace ws = line_span(out.lines, true, d, dc.span_tol);
    if (zs.dim() == d.total() && ws.dim() == d.total()) break;
    const double rho = sign * scale * dc.weights[round % dc.weights.size()];
    SearchConfig rc = cfg;
    rc.restarts = std::max<std::size_t>(1, cfg.restarts / 4);
    rc.seed = splitmix64(cfg.seed + round + 1);
    rc.record_trace = false;
    const SearchResult pen =
        alternate(paired_forms(h1 + rho * zs.projector(), h2 + rho * ws.projector(), d.m, d.n),
                  sense, rc);
    absorb(alternate(plain, sense, rc, start_from(pen.per_restart_points)));
  }
  return out;
}

}  // namespace detail

/// Distinct product vectors xi (x) eta in D with conj(xi) (x) eta in E.
inline LineCollection enumerate_product_pairs(const Subspace& dsp, const Subspace& esp, Dims d,
                                              const SearchConfig& cfg = {},
                                              const DeflationConfig& dc = {}) {
  detail::check_subspace(dsp, d, "enumerate_product_pairs");
  detail::check_subspace(esp, d, "enumerate_product_pairs");
  return detail::collect_lines(
      dsp.projector(), esp.projector(), d, Sense::Maximize,
      [](double v) { return 2.0 - v < found_residual; }, 1.0, cfg, dc);
}

inline std::size_t schmidt_rank(const Vector& z, std::size_t m, std::size_t n,
                                double tol = tolerance::rank) {
  if (static_cast<std::size_t>(z.size()) != m * n) throw DomainError("schmidt_rank: length mismatch");
  if (z.norm() == 0.0) throw DomainError("schmidt_rank: zero vector");
  return numerical_rank(vec_mat(z, m, n), tol);
}

// ---------------------------------------------------------------------------
// s-simple vectors: z = mat_vec(X Y^T) with X m x s, Y n x s.

struct SimpleSearchResult {
  double value = 0.0;  // min of z^* conj(C) z / z^* z
  Vector z;            // unit, Schmidt rank <= s
  std::size_t s = 1;
  std::size_t n_converged = 0;
  std::vector<double> per_restart_values;
};

namespace detail {

inline Matrix orthonormal_columns(const Matrix& a) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr{Eigen::MatrixXcd(a)};
  return Matrix(qr.householderQ() * Eigen::MatrixXcd::Identity(a.rows(), a.cols()));
}

// x-block: z = (I_m (x) Y) vec(X), vec(X) indexed (i,k).
inline Matrix lift_x(const Matrix& y, Eigen::Index m) {
  const Eigen::Index n = y.rows();
  const Eigen::Index s = y.cols();
  Matrix l = Matrix::Zero(m * n, m * s);
  for (Eigen::Index i = 0; i < m; ++i) l.block(i * n, i * s, n, s) = y;
  return l;
}

// y-block: z = (X (x) I_n) v, v indexed (k,a) with v_(k,a) = Y(a,k).
inline Matrix lift_y(const Matrix& x, Eigen::Index n) {
  const Eigen::Index m = x.rows();
  const Eigen::Index s = x.cols();
  Matrix l = Matrix::Zero(m * n, s * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index k = 0; k < s; ++k)
      l.block(i * n, k * n, n, n) = x(i, k) * Matrix::Identity(n, n);
  return l;
}

}  // namespace detail

/// Minimizes the normalized pairing over vectors of Schmidt rank <= s.
inline SimpleSearchResult min_pairing_over_s_simple(const LinMap& phi, std::size_t s,
                                                    const SearchConfig& cfg = {}) {
  cfg.validate();
  const std::size_t cap = std::min(phi.m(), phi.n());
  if (s < 1 || s > cap) throw DomainError("min_pairing_over_s_simple: s out of range");
  const Matrix c = hermitian_part(phi.choi().mat(), "min_pairing_over_s_simple").conjugate();
  const auto m = static_cast<Eigen::Index>(phi.m());
  const auto n = static_cast<Eigen::Index>(phi.n());
  const auto si = static_cast<Eigen::Index>(s);

  SimpleSearchResult out;
  out.s = s;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    auto rng = detail::restart_rng(cfg.seed, r);
    Matrix y = vec_mat(detail::random_unit(static_cast<std::size_t>(n * si), rng),
                       static_cast<std::size_t>(n), s);
    y = detail::orthonormal_columns(y);
    Vector z;
    double prev = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (std::size_t it = 0; it < std::max<std::size_t>(cfg.max_iters, 1); ++it) {
      // x-step with Y orthonormal: the lift is an isometry
      const Matrix lx = detail::lift_x(y, m);
      const Matrix fx = lx.adjoint() * c * lx;
      const Vector xv = detail::extreme_eigenvector(fx, Sense::Minimize);
      const Matrix x = vec_mat(xv, static_cast<std::size_t>(m), s);
      // X Y^T = Q (Y R^T)^T; only the column space of X matters for the y-step
      const Matrix q = detail::orthonormal_columns(x);
      // y-step
      const Matrix ly = detail::lift_y(q, n);
      const Matrix fy = ly.adjoint() * c * ly;
      const Vector v = detail::extreme_eigenvector(fy, Sense::Minimize);
      z = ly * v;
      const double cur = detail::form_value(c, z) / z.squaredNorm();
      // Y from v, v_(k,a) = Y(a,k)
      Matrix yv(n, si);
      for (Eigen::Index k = 0; k < si; ++k)
        for (Eigen::Index a = 0; a < n; ++a) yv(a, k) = v(k * n + a);
      y = detail::orthonormal_columns(yv);
      if (std::isfinite(prev) &&
          std::abs(cur - prev) <= cfg.conv_tol * std::max(std::abs(cur), std::abs(prev))) {
        converged = true;
        prev = cur;
        break;
      }
      prev = cur;
    }
    z /= z.norm();
    const double value = detail::form_value(c, z);
    if (converged) ++out.n_converged;
    if (r == 0 || value < out.value) {
      out.value = value;
      out.z = z;
    }
    out.per_restart_values.push_back(value);
  }
  return out;
}

}  // namespace conewit

#endif  // CONEWIT_PRODSEARCH_HPP
