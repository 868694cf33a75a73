#include "argshift/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace argshift {

namespace {

void require_finite(const CMatrix& m, const char* who) {
  if (!m.allFinite()) throw NonFiniteError(std::string(who) + ": matrix contains NaN/Inf");
}

Eigen::JacobiSVD<CMatrix> make_svd(const CMatrix& m, unsigned int options) {
  Eigen::JacobiSVD<CMatrix> svd;
  svd.compute(m, options);
  return svd;
}

int rank_from_singular_values(const Eigen::VectorXd& sv, double tol_rel,
                              double scale_floor = 0.0) {
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  double scale = std::max(sigma_max, scale_floor);
  if (scale == 0.0) scale = 1.0;
  const double threshold = tol_rel * scale;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > threshold) ++rank;
  }
  return rank;
}

}  // namespace

RankReport svd_rank(const CMatrix& m, double tol_rel) {
  require_finite(m, "svd_rank");
  RankReport report;
  report.tol_used = tol_rel;
  if (m.rows() == 0 || m.cols() == 0) return report;
  const auto svd = make_svd(m, 0);
  const Eigen::VectorXd sv = svd.singularValues();
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  report.rank = rank_from_singular_values(sv, tol_rel);
  return report;
}

Subspace::Subspace(CMatrix orthonormal_columns) : basis_(std::move(orthonormal_columns)) {
  if (basis_.cols() > 0) {
    const CMatrix gram = basis_.adjoint() * basis_;
    const double defect = (gram - CMatrix::Identity(basis_.cols(), basis_.cols())).norm();
    if (defect > 1e-12 * std::max<double>(1.0, static_cast<double>(basis_.cols()))) {
      throw Error("Subspace: basis columns are not orthonormal");
    }
  }
}

bool Subspace::contains(const CVector& v, double tol) const {
  const double norm = v.norm();
  if (norm == 0.0) return true;
  return (v - project(v)).norm() <= tol * norm;
}

Subspace span_of_columns(const CMatrix& columns, double tol_rel, double scale_floor) {
  require_finite(columns, "span");
  if (columns.cols() == 0) return Subspace::zero(static_cast<int>(columns.rows()));
  auto svd = make_svd(columns, Eigen::ComputeThinU);
  const int rank = rank_from_singular_values(svd.singularValues(), tol_rel, scale_floor);
  return Subspace(CMatrix(svd.matrixU().leftCols(rank)));
}

Subspace span(int ambient_dim, const std::vector<CVector>& vectors, double tol_rel,
              double scale_floor) {
  CMatrix columns(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != ambient_dim) {
      throw DimensionMismatchError("span: vectors do not share one ambient dimension");
    }
    columns.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  return span_of_columns(columns, tol_rel, scale_floor);
}

Subspace kernel(const CMatrix& m, double tol_rel, double scale_floor) {
  require_finite(m, "kernel");
  if (m.rows() == 0) return Subspace::full(static_cast<int>(m.cols()));
  if (m.cols() == 0) return Subspace::zero(0);
  auto svd = make_svd(m, Eigen::ComputeFullV);
  const int rank = rank_from_singular_values(svd.singularValues(), tol_rel, scale_floor);
  return Subspace(CMatrix(svd.matrixV().rightCols(m.cols() - rank)));
}

double containment_angle(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) {
    throw DimensionMismatchError("containment_angle: ambient dimensions differ");
  }
  if (inner.dim() == 0) return 0.0;
  // residual of inner's basis after projecting onto outer; its largest
  // singular value is the sine of the largest principal angle
  const CMatrix residual =
      inner.basis() - outer.basis() * (outer.basis().adjoint() * inner.basis());
  const double sine = std::min(1.0, make_svd(residual, 0).singularValues()(0));
  return std::asin(sine);
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  // symmetric for equal dims; take the worse direction otherwise
  return std::max(containment_angle(a, b), containment_angle(b, a));
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatchError("subspace_equal: ambient dimensions differ");
  }
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  return containment_angle(a, b) < tol;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, double tol_rel) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatchError("subspace_sum: ambient dimensions differ");
  }
  CMatrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  return span_of_columns(stacked, tol_rel);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatchError("subspace_intersect: ambient dimensions differ");
  }
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  CMatrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), -b.basis();
  const Subspace null_space = kernel(stacked, tol);
  // a kernel vector (u; v) satisfies A u = B v, so A u lies in the intersection
  const CMatrix members = a.basis() * null_space.basis().topRows(a.dim());
  return span_of_columns(members, kDefaultRankTol);
}

Subspace perp_trace_form(const Subspace& s, const CMatrix& gram, double tol_rel) {
  if (s.ambient_dim() != gram.rows() || gram.rows() != gram.cols()) {
    throw DimensionMismatchError("perp_trace_form: gram matrix does not match ambient");
  }
  if (svd_rank(gram, 1e-12).rank < gram.rows()) {
    throw DegeneratePairingError("perp_trace_form: pairing is numerically singular");
  }
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  // bilinear pairing: rows are v^T G, no conjugation
  const CMatrix rows = s.basis().transpose() * gram;
  return kernel(rows, tol_rel);
}

}  // namespace argshift
