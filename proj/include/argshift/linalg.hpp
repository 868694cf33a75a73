#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "argshift/errors.hpp"

namespace argshift {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default relative cutoff for numerical rank decisions: singular values
/// below tol_rel * sigma_max count as zero.
inline constexpr double kDefaultRankTol = 1e-8;

/// Default tolerance on principal angles for subspace comparisons.
inline constexpr double kDefaultAngleTol = 1e-8;

/// Outcome of a numerical rank decision.
struct RankReport {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double tol_used = 0.0;                // the relative cutoff that was applied
};

/// Numerical rank of a dense complex matrix under a relative singular-value
/// cutoff. Throws NonFiniteError if the matrix contains NaN or Inf.
RankReport svd_rank(const CMatrix& m, double tol_rel = kDefaultRankTol);

/// A linear subspace of C^ambient, stored as a matrix whose columns form an
/// orthonormal basis with respect to the Hermitian dot product. The Hermitian
/// product is used only for numerical conditioning; geometric statements about
/// the trace form go through perp_trace_form.
class Subspace {
 public:
  Subspace() = default;

  /// The zero subspace of C^ambient.
  explicit Subspace(int ambient_dim) : basis_(CMatrix::Zero(ambient_dim, 0)) {}

  /// Wraps a matrix whose columns are already orthonormal (validated to 1e-12).
  explicit Subspace(CMatrix orthonormal_columns);

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim) {
    return Subspace(CMatrix(CMatrix::Identity(ambient_dim, ambient_dim)));
  }

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }

  /// ambient_dim x dim, orthonormal columns.
  const CMatrix& basis() const { return basis_; }

  /// Orthogonal projection of v onto the subspace.
  CVector project(const CVector& v) const { return basis_ * (basis_.adjoint() * v); }

  /// True when v lies in the subspace up to `tol` relative to |v|.
  bool contains(const CVector& v, double tol = 1e-9) const;

 private:
  CMatrix basis_;  // ambient x dim
};

/// Orthonormal basis of the numerical span of the given columns; the span's
/// dimension is the svd_rank of the stacked matrix. A positive scale_floor
/// raises the cutoff to tol_rel * max(sigma_max, scale_floor), for callers
/// whose input has a known natural scale and may be all noise.
Subspace span_of_columns(const CMatrix& columns, double tol_rel = kDefaultRankTol,
                         double scale_floor = 0.0);

/// Same, from a vector list. The ambient dimension must be passed explicitly
/// so that an empty list still produces a well-formed zero subspace.
Subspace span(int ambient_dim, const std::vector<CVector>& vectors,
              double tol_rel = kDefaultRankTol, double scale_floor = 0.0);

/// Orthonormal basis of the right kernel of m; scale_floor as in span_of_columns.
Subspace kernel(const CMatrix& m, double tol_rel = kDefaultRankTol,
                double scale_floor = 0.0);

/// Largest principal angle between two subspaces of equal ambient dimension,
/// in radians. Computed from sin(theta) = ||(I - P_a) B_b||_2, which is exact
/// for equal dimensions and accurate near zero.
double max_principal_angle(const Subspace& a, const Subspace& b);

/// How far `inner` sticks out of `outer`: the largest principal angle from
/// inner towards outer (zero iff inner is contained in outer).
double containment_angle(const Subspace& inner, const Subspace& outer);

/// True iff dims are equal and the largest principal angle is below tol.
bool subspace_equal(const Subspace& a, const Subspace& b, double tol = 1e-8);

/// Span of the union of the two bases.
Subspace subspace_sum(const Subspace& a, const Subspace& b,
                      double tol_rel = kDefaultRankTol);

/// Intersection, via the kernel of the stacked basis matrix [A | -B]; `tol`
/// acts as the relative cutoff, which for this matrix is equivalent to a
/// cutoff on principal angles.
Subspace subspace_intersect(const Subspace& a, const Subspace& b,
                            double tol = kDefaultAngleTol);

/// Orthogonal complement of s with respect to a (symmetric, bilinear) pairing
/// given by its Gram matrix in the ambient coordinates. This is NOT the
/// Hermitian complement: x is in the result iff v^T G x = 0 for all basis
/// vectors v of s. Throws DegeneratePairingError when gram is singular.
Subspace perp_trace_form(const Subspace& s, const CMatrix& gram,
                         double tol_rel = kDefaultRankTol);

}  // namespace argshift
