#ifndef CONEWIT_EDGEFACES_HPP
#define CONEWIT_EDGEFACES_HPP

// Edge states and their types, intersection pairs, boundary points of the
// positive cone, and the zero sets of entanglement witnesses.

#include "conewit/cones.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace conewit {

// ---------------------------------------------------------------------------
// Edges

/// (R(A), R(A^tau)) of a PPT state.
inline std::pair<Subspace, Subspace> intersection_pair(const CMat& a, double tol = tolerance::rank) {
  const Dims d = a.require_dims("intersection_pair");
  if (is_ppt(a).status != Status::CertifiedYes) throw DomainError("intersection_pair: state is not PPT");
  return {range_basis(a.mat(), tol), range_basis(partial_transpose(a.mat(), d), tol)};
}

struct EdgeReport {
  Verdict ppt;
  std::size_t p = 0;  // rank A
  std::size_t q = 0;  // rank A^tau
  SearchResult paired_search;
  Verdict edge;
};

/// An edge is never certified: "yes" means the paired search found nothing.
inline EdgeReport is_edge(const CMat& a, const SearchConfig& cfg = {}) {
  const Dims d = a.require_dims("is_edge");
  const Matrix h = hermitian_part(a.mat(), "is_edge");
  const Matrix ht = partial_transpose(h, d);
  EdgeReport rep;
  rep.ppt = is_ppt(a);
  rep.p = numerical_rank(h);
  rep.q = numerical_rank(ht);
  if (rep.ppt.status != Status::CertifiedYes) {
    rep.edge.status = Status::CertifiedNo;
    rep.edge.certificate = rep.ppt.certificate;
    rep.edge.note = "not PPT";
    return rep;
  }
  rep.paired_search = best_product_in_pair(range_basis(h), range_basis(ht), d, cfg);
  rep.edge.stats = detail::stats_of(rep.paired_search);
  if (rep.paired_search.residual < found_residual) {
    Certificate c;
    c.kind = CertificateKind::ProductPair;
    c.value = rep.paired_search.residual;
    c.product = rep.paired_search.best;
    c.vector = rep.paired_search.best.tensor();
    rep.edge.status = Status::CertifiedNo;
    rep.edge.certificate = std::move(c);
  } else {
    rep.edge.status = Status::HeuristicYes;
  }
  return rep;
}

/// Predicted (rank X, rank X^tau) of x_state(lambda, xi, eta, zeta), lambda != 1.
inline std::pair<std::size_t, std::size_t> x_type_prediction(const Vector& xi, const Vector& eta,
                                                             const Vector& zeta) {
  detail::check_unit(xi, "x_type_prediction");
  detail::check_unit(eta, "x_type_prediction");
  detail::check_unit(zeta, "x_type_prediction");
  const auto gram_rank = [](std::initializer_list<const Vector*> vs) {
    Matrix g(static_cast<Eigen::Index>(vs.size()), static_cast<Eigen::Index>(vs.size()));
    Eigen::Index i = 0;
    for (const Vector* x : vs) {
      Eigen::Index j = 0;
      for (const Vector* y : vs) g(i, j++) = x->dot(*y);
      ++i;
    }
    return numerical_rank(g);
  };
  const std::size_t p =
      1 + gram_rank({&xi, &eta}) + gram_rank({&eta, &zeta}) + gram_rank({&zeta, &xi});
  const std::size_t q = 3 + gram_rank({&xi, &eta, &zeta});
  return {p, q};
}

// ---------------------------------------------------------------------------
// Boundary of the positive cone and witness zero sets

namespace detail {
/// Tr(C_phi) / mn, the average pairing with a product projector.
inline double pairing_scale(const LinMap& phi) {
  return phi.choi().mat().trace().real() / static_cast<double>(phi.dims().total());
}
}  // namespace detail

/// HeuristicYes: the minimum pairing over product vectors is 0 (within
/// tol * scale), attained at the certificate. HeuristicNo: bounded away
/// from 0. CertifiedNo: the map is not positive at all.
inline Verdict boundary_p1(const LinMap& phi, const SearchConfig& cfg = {}, double tol = 1e-8) {
  const SearchResult r = min_pairing_over_products(phi, cfg);
  const double scale = std::max(detail::pairing_scale(phi), 1e-300);
  Verdict v;
  v.stats = detail::stats_of(r);
  Certificate c;
  c.kind = CertificateKind::ProductVector;
  c.value = r.value;
  c.product = r.best;
  c.vector = r.best.tensor();
  if (r.value < -tol * scale) {
    v.status = Status::CertifiedNo;
    v.note = "not positive";
    v.certificate = std::move(c);
  } else if (r.value <= tol * scale) {
    v.status = Status::HeuristicYes;
    v.certificate = std::move(c);
  } else {
    v.status = Status::HeuristicNo;
    v.note = "interior";
  }
  return v;
}

struct WitnessReport {
  std::vector<ProductVector> zero_set;  // distinct lines z with pair(zz^*, phi) ~ 0
  std::size_t span_dim = 0;
  std::size_t conj_span_dim = 0;
  bool spanning = false;
  bool co_spanning = false;
  double scale = 0.0;
  SearchStats stats;
};

/// Collects the product vectors with zero pairing (threshold 1e-8 * scale),
/// deflating on the spans found so far, and measures both spans.
inline WitnessReport witness_analysis(const LinMap& phi, const SearchConfig& cfg = {},
                                      const DeflationConfig& dc = {}) {
  if (is_cp(phi).status == Status::CertifiedYes) throw DomainError("witness_analysis: map is CP");
  const Dims d = phi.dims();
  WitnessReport rep;
  rep.scale = detail::pairing_scale(phi);
  if (!(rep.scale > 0.0)) throw DomainError("witness_analysis: nonpositive trace");
  const Matrix c = hermitian_part(phi.choi().mat(), "witness_analysis").conjugate();
  const double thr = 1e-8 * rep.scale;
  const Matrix zero = Matrix::Zero(c.rows(), c.cols());
  const LineCollection lc = detail::collect_lines(
      c, zero, d, Sense::Minimize, [thr](double v) { return v < thr; }, rep.scale, cfg, dc);
  if (lc.best_value < -thr) throw DomainError("witness_analysis: map is not block-positive");
  rep.zero_set = lc.lines;
  rep.span_dim = detail::line_span(rep.zero_set, false, d, dc.span_tol).dim();
  rep.conj_span_dim = detail::line_span(rep.zero_set, true, d, dc.span_tol).dim();
  rep.spanning = rep.span_dim == d.total();
  rep.co_spanning = rep.conj_span_dim == d.total();
  rep.stats.restarts = lc.restarts_run;
  rep.stats.n_converged = lc.n_converged;
  rep.stats.best = lc.best_value;
  return rep;
}

// ---------------------------------------------------------------------------
// Necessary conditions for optimality of a completely copositive witness

enum class Condition { Pass, Fail, NotDecidable };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::Pass: return "pass";
    case Condition::Fail: return "fail";
    case Condition::NotDecidable: return "NotDecidable";
  }
  return "NotDecidable";
}

struct OptimalityReport {
  Subspace support;               // E
  SearchResult support_search;    // best product in E
  std::optional<SearchResult> complement_search;  // best product in E^perp
  Condition completely_entangled = Condition::NotDecidable;  // (i)
  Condition complement_has_product = Condition::NotDecidable;  // (ii)
  Condition face_of_decomposables = Condition::NotDecidable;  // (iii), never decided
};

inline OptimalityReport optimality_necessary(const LinMap& phi, const SearchConfig& cfg = {}) {
  if (!phi.kraus() || !phi.kraus()->cp.empty() || phi.kraus()->ccp.empty()) {
    throw DomainError("optimality_necessary: map must carry a purely co-CP Kraus list");
  }
  const Dims d = phi.dims();
  std::vector<Vector> ws;
  for (const auto& w : phi.kraus()->ccp) ws.push_back(kraus_vector(w));
  OptimalityReport rep;
  rep.support = Subspace::span(ws, d.total());
  if (rep.support.empty()) throw DomainError("optimality_necessary: zero Kraus list");
  rep.support_search = best_product_in_subspace(rep.support, d, cfg);
  rep.completely_entangled =
      rep.support_search.residual < found_residual ? Condition::Fail : Condition::Pass;
  const Subspace perp = rep.support.complement();
  if (perp.empty()) {
    rep.complement_has_product = Condition::Fail;
  } else {
    rep.complement_search = best_product_in_subspace(perp, d, cfg);
    rep.complement_has_product =
        rep.complement_search->residual < found_residual ? Condition::Pass : Condition::Fail;
  }
  return rep;
}

/// The co-CP map (1-t) phi_0 + t phi_1 on M_3, with phi_0 the sum of phi^W over
/// W in {I, l e12 + e21/l, l e23 + e32/l, l e31 + e13/l} and phi_1 = phi^I.
inline LinMap segment_witness(double lambda, double t) {
  if (!(lambda > 0.0)) throw DomainError("segment_witness: lambda must be positive");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("segment_witness: t must lie in (0,1)");
  const double mu = 1.0 / lambda;
  const auto e = [](int i, int j) {
    Matrix x = Matrix::Zero(3, 3);
    x(i, j) = 1.0;
    return x;
  };
  const double a = std::sqrt(1.0 - t);
  std::vector<Matrix> ccp{a * Matrix(Matrix::Identity(3, 3)),
                          a * (lambda * e(0, 1) + mu * e(1, 0)),
                          a * (lambda * e(1, 2) + mu * e(2, 1)),
                          a * (lambda * e(2, 0) + mu * e(0, 2)),
                          std::sqrt(t) * Matrix(Matrix::Identity(3, 3))};
  return choi_of_kraus(Dims{3, 3}, {}, std::move(ccp));
}

// ---------------------------------------------------------------------------
// The 2 (x) n fixture

struct TwoByNFixture {
  std::size_t n = 0;
  std::vector<cplx> samples;
  Subspace d;                 // span of x_a y_a^*
  Subspace d_perp;
  Subspace expected_perp;     // span{e_{1,j+1} - e_{2,j}}
  bool perp_matches = false;  // rank equality of the two complements
  SearchResult perp_search;   // best product in D^perp
  bool perp_completely_entangled = false;  // residual > 1e-3
  std::size_t conj_span_dim = 0;           // span of the generators' partial conjugates
};

/// D = span{x_a y_a^*} in M_{2 x n} with x_a = (1, a), y_a = (1, conj a, ..., conj a^{n-1}),
/// sampled at 2n + 2 distinct non-real a (enough for the partial conjugates to span).
inline TwoByNFixture two_by_n_fixture(std::size_t n, const SearchConfig& cfg = {}) {
  if (n < 2) throw DomainError("two_by_n_fixture: n must be >= 2");
  TwoByNFixture f;
  f.n = n;
  const Dims dims{2, n};
  const auto ni = static_cast<Eigen::Index>(n);
  const std::size_t count = 2 * n + 2;
  std::vector<Vector> gens, conj_gens;
  for (std::size_t k = 0; k < count; ++k) {
    const double kk = static_cast<double>(k);
    const cplx a = std::polar(0.8 + 0.15 * kk, 0.5 + 1.1 * kk);
    f.samples.push_back(a);
    Vector x(2);
    x << 1.0, a;
    Vector y(ni);
    for (Eigen::Index j = 0; j < ni; ++j) y(j) = std::pow(std::conj(a), static_cast<double>(j));
    // x y^* = vec_mat(x (x) conj y)
    const ProductVector pv = ProductVector::normalized(x, y.conjugate());
    gens.push_back(pv.tensor());
    conj_gens.push_back(pv.partial_conjugate());
  }
  f.d = Subspace::span(gens, dims.total());
  f.d_perp = f.d.complement();
  std::vector<Vector> expected;
  for (Eigen::Index j = 0; j + 1 < ni; ++j) {
    Matrix e = Matrix::Zero(2, ni);
    e(0, j + 1) = 1.0;
    e(1, j) = -1.0;
    expected.push_back(mat_vec(e));
  }
  f.expected_perp = Subspace::span(expected, dims.total());
  Matrix both(static_cast<Eigen::Index>(dims.total()),
              static_cast<Eigen::Index>(f.d_perp.dim() + f.expected_perp.dim()));
  both << f.d_perp.basis(), f.expected_perp.basis();
  f.perp_matches = f.d_perp.dim() == f.expected_perp.dim() && numerical_rank(both) == f.d_perp.dim();
  f.perp_search = best_product_in_subspace(f.d_perp, dims, cfg);
  f.perp_completely_entangled = f.perp_search.residual > 1e-3;
  f.conj_span_dim = Subspace::span(conj_gens, dims.total()).dim();
  return f;
}

}  // namespace conewit

#endif  // CONEWIT_EDGEFACES_HPP
