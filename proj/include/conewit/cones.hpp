#ifndef CONEWIT_CONES_HPP
#define CONEWIT_CONES_HPP

// Cone membership for maps (CP, co-CP, block-positive, s-positive,
// decomposable) and for states (PPT, separability). Certified answers carry a
// certificate that can be checked independently; heuristic answers carry the
// search statistics they were based on.

#include "conewit/prodsearch.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conewit {

enum class Status { CertifiedYes, CertifiedNo, HeuristicYes, HeuristicNo, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::CertifiedYes: return "CertifiedYes";
    case Status::CertifiedNo: return "CertifiedNo";
    case Status::HeuristicYes: return "HeuristicYes";
    case Status::HeuristicNo: return "HeuristicNo";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

enum class CertificateKind {
  Eigenvector,     // v with v^* M v = value < 0; `side` names M
  ProductVector,   // product z with pairing value < 0
  SimpleVector,    // Schmidt rank <= s vector with pairing value < 0
  Decomposition,   // PSD (S, T) with ||S + T^tau - C|| = value
  WitnessState,    // PPT state with pairing value < 0
  RankOneProduct,  // A = lambda z z^*, z a product vector
  SchmidtRank,     // A = lambda z z^*, z of Schmidt rank s > 1
  ProductPair,     // xi (x) eta in R(A) with conj(xi) (x) eta in R(A^tau)
};

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Eigenvector: return "eigenvector";
    case CertificateKind::ProductVector: return "product_vector";
    case CertificateKind::SimpleVector: return "s_simple_vector";
    case CertificateKind::Decomposition: return "decomposition";
    case CertificateKind::WitnessState: return "witness_state";
    case CertificateKind::RankOneProduct: return "rank_one_product";
    case CertificateKind::SchmidtRank: return "schmidt_rank";
    case CertificateKind::ProductPair: return "product_pair";
  }
  return "unknown";
}

struct Certificate {
  CertificateKind kind = CertificateKind::Eigenvector;
  double value = 0.0;
  std::string side;
  Vector vector;
  std::optional<ProductVector> product;
  std::size_t rank = 0;
  Matrix s_part;  // CP part (Choi matrix)
  Matrix t_part;  // co-CP part enters as t_part^tau
  Matrix state;
};

struct SearchStats {
  std::size_t restarts = 0;
  std::size_t n_converged = 0;
  double best = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
};

struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<Certificate> certificate;
  std::optional<SearchStats> stats;
  std::string note;

  bool affirmative() const { return status == Status::CertifiedYes || status == Status::HeuristicYes; }
};

namespace detail {

inline Verdict psd_verdict(const Matrix& a, const char* side) {
  const auto sd = hermitian_eig(a);
  const double lo = sd.eigenvalues(0);
  const double hi = sd.eigenvalues(sd.eigenvalues.size() - 1);
  Verdict v;
  if (lo >= -tolerance::psd * std::max(1.0, hi)) {
    v.status = Status::CertifiedYes;
    return v;
  }
  Certificate c;
  c.kind = CertificateKind::Eigenvector;
  c.value = lo;
  c.side = side;
  c.vector = sd.eigenvectors.col(0);
  v.status = Status::CertifiedNo;
  v.certificate = std::move(c);
  return v;
}

inline SearchStats stats_of(const SearchResult& r) {
  SearchStats s;
  s.restarts = r.per_restart_values.size();
  s.n_converged = r.n_converged;
  s.best = r.value;
  s.residual = r.residual;
  return s;
}

}  // namespace detail

inline Verdict is_cp(const LinMap& phi) {
  return detail::psd_verdict(hermitian_part(phi.choi().mat(), "is_cp"), "choi");
}

inline Verdict is_ccp(const LinMap& phi) {
  return detail::psd_verdict(
      hermitian_part(partial_transpose(phi.choi().mat(), phi.dims()), "is_ccp"), "choi^tau");
}

/// Both A and A^tau PSD; on failure the certificate names the failing side.
inline Verdict is_ppt(const CMat& a) {
  const Dims d = a.require_dims("is_ppt");
  Verdict v = detail::psd_verdict(hermitian_part(a.mat(), "is_ppt"), "A");
  if (v.status == Status::CertifiedNo) return v;
  return detail::psd_verdict(hermitian_part(partial_transpose(a.mat(), d), "is_ppt"), "A^tau");
}

/// Negative pairing with a product projector certifies "not positive".
inline Verdict is_block_positive(const LinMap& phi, const SearchConfig& cfg = {},
                                 double tol = 1e-8) {
  const SearchResult r = min_pairing_over_products(phi, cfg);
  Verdict v;
  v.stats = detail::stats_of(r);
  if (r.value < -tol) {
    Certificate c;
    c.kind = CertificateKind::ProductVector;
    c.value = product_pairing(phi, r.best);
    c.product = r.best;
    c.vector = r.best.tensor();
    v.status = Status::CertifiedNo;
    v.certificate = std::move(c);
  } else {
    v.status = Status::HeuristicYes;
  }
  return v;
}

inline Verdict is_s_positive(const LinMap& phi, std::size_t s, const SearchConfig& cfg = {},
                             double tol = 1e-8) {
  const SimpleSearchResult r = min_pairing_over_s_simple(phi, s, cfg);
  Verdict v;
  SearchStats st;
  st.restarts = r.per_restart_values.size();
  st.n_converged = r.n_converged;
  st.best = r.value;
  st.residual = r.value;
  v.stats = st;
  if (r.value < -tol) {
    Certificate c;
    c.kind = CertificateKind::SimpleVector;
    c.value = r.value;
    c.vector = r.z;
    c.rank = s;
    v.status = Status::CertifiedNo;
    v.certificate = std::move(c);
  } else {
    v.status = Status::HeuristicYes;
  }
  return v;
}

struct DecompConfig {
  std::size_t max_sweeps = 5000;
  double tol = 1e-6;  // on ||S + T^tau - C||_F at the PSD point
};

/// Douglas-Rachford splitting between {S, T PSD} and {S + T^tau = C}; the
/// PSD shadow point is tested against the affine constraint each sweep. A PPT
/// witness state with negative pairing (checked first) certifies "no".
inline Verdict is_decomposable(const LinMap& phi, const DecompConfig& dcfg = {},
                               const std::vector<CMat>& witnesses = {}, double tol = 1e-8) {
  const Dims d = phi.dims();
  const Matrix c = hermitian_part(phi.choi().mat(), "is_decomposable");
  for (const auto& w : witnesses) {
    if (w.dims() && *w.dims() != d) throw DomainError("is_decomposable: witness dims differ");
    if (is_ppt(w.with_dims(d)).status != Status::CertifiedYes) continue;
    const double p = pair(w.mat(), phi);
    if (p < -tol) {
      Verdict v;
      Certificate cert;
      cert.kind = CertificateKind::WitnessState;
      cert.value = p;
      cert.state = w.mat();
      v.status = Status::CertifiedNo;
      v.certificate = std::move(cert);
      return v;
    }
  }

  // Projection onto the affine set: subtract (D, D^tau) / 2 with D the defect.
  const auto defect = [&](const Matrix& s, const Matrix& t) { return Matrix(s + partial_transpose(t, d) - c); };
  Matrix s = c;
  Matrix t = Matrix::Zero(c.rows(), c.cols());
  Matrix ps, pt;
  double residual = 0.0;
  std::size_t sweep = 0;
  while (sweep < dcfg.max_sweeps) {
    ++sweep;
    ps = psd_clip(s);
    pt = psd_clip(t);
    residual = defect(ps, pt).norm();
    if (residual < dcfg.tol) break;
    const Matrix rs = 2.0 * ps - s;
    const Matrix rt = 2.0 * pt - t;
    const Matrix dr = defect(rs, rt);
    s += rs - dr / 2.0 - ps;
    t += rt - partial_transpose(dr, d) / 2.0 - pt;
  }
  s = std::move(ps);
  t = std::move(pt);
  Verdict v;
  SearchStats st;
  st.iterations = sweep;
  st.residual = residual;
  st.best = residual;
  v.stats = st;
  if (residual < dcfg.tol) {
    Certificate cert;
    cert.kind = CertificateKind::Decomposition;
    cert.value = residual;
    cert.s_part = std::move(s);
    cert.t_part = std::move(t);
    v.status = Status::HeuristicYes;
    v.certificate = std::move(cert);
  } else {
    v.status = Status::HeuristicNo;
    v.note = "splitting iteration did not reach the affine set";
  }
  return v;
}

struct SeparabilityReport {
  Verdict verdict;
  std::size_t rank = 0;     // rank of A
  std::size_t rank_pt = 0;  // rank of A^tau
  std::vector<ProductVector> pairs;  // range-criterion product vectors found
  std::size_t span_dim = 0;
  std::size_t conj_span_dim = 0;
};

/// The xi, eta with vec_mat(z) = xi eta^T for a Schmidt-rank-one z (up to scale).
inline ProductVector product_factors(const Vector& z, std::size_t m, std::size_t n) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(vec_mat(z, m, n)),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  return ProductVector::normalized(svd.matrixU().col(0), svd.matrixV().col(0).conjugate());
}

/// Rank one: decided by the Schmidt rank. Otherwise PPT, then the range
/// criterion: no product vector in R(A) with partial conjugate in R(A^tau)
/// (found by search) means entangled, heuristically.
inline SeparabilityReport separability_report(const CMat& a, const SearchConfig& cfg = {},
                                              const DeflationConfig& dc = {}) {
  const Dims d = a.require_dims("separability_report");
  const Matrix h = hermitian_part(a.mat(), "separability_report");
  if (!is_psd(h)) throw DomainError("separability_report: state is not PSD");
  SeparabilityReport rep;
  rep.rank = numerical_rank(h);
  rep.rank_pt = numerical_rank(partial_transpose(h, d));
  if (rep.rank == 0) throw DomainError("separability_report: zero state");

  if (rep.rank == 1) {
    const auto sd = hermitian_eig(h);
    const Eigen::Index top = sd.eigenvalues.size() - 1;
    const Vector z = sd.eigenvectors.col(top);
    Certificate c;
    c.value = sd.eigenvalues(top);
    c.vector = z;
    c.rank = schmidt_rank(z, d.m, d.n);
    if (c.rank == 1) {
      c.kind = CertificateKind::RankOneProduct;
      c.product = product_factors(z, d.m, d.n);
      rep.verdict.status = Status::CertifiedYes;
    } else {
      c.kind = CertificateKind::SchmidtRank;
      rep.verdict.status = Status::CertifiedNo;
    }
    rep.verdict.certificate = std::move(c);
    return rep;
  }

  Verdict ppt = is_ppt(a.with_dims(d));
  if (ppt.status == Status::CertifiedNo) {
    ppt.note = "PPT criterion";
    rep.verdict = std::move(ppt);
    return rep;
  }

  const Subspace r = range_basis(h);
  const Subspace rt = range_basis(partial_transpose(h, d));
  const LineCollection lc = enumerate_product_pairs(r, rt, d, cfg, dc);
  rep.pairs = lc.lines;
  SearchStats st;
  st.restarts = lc.restarts_run;
  st.n_converged = lc.n_converged;
  st.best = lc.best_value;
  st.residual = 2.0 - lc.best_value;
  rep.verdict.stats = st;
  if (lc.lines.empty()) {
    rep.verdict.status = Status::HeuristicNo;
    rep.verdict.note = "range criterion violated: no product vector found in R(A) with partial conjugate in R(A^tau)";
  } else {
    rep.span_dim = detail::line_span(lc.lines, false, d, dc.span_tol).dim();
    rep.conj_span_dim = detail::line_span(lc.lines, true, d, dc.span_tol).dim();
    rep.verdict.status = Status::Inconclusive;
    rep.verdict.note = "range criterion satisfied by the product vectors found";
  }
  return rep;
}

}  // namespace conewit

#endif  // CONEWIT_CONES_HPP
