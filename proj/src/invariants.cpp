#include "argshift/invariants.hpp"

#include <cmath>

namespace argshift {

namespace {

void require_degree(int k, const Element& y) {
  if (k < 2 || k > y.algebra().n()) {
    throw DegreeOutOfRangeError("invariant degree must lie in 2..n");
  }
}

CMatrix matrix_power(const CMatrix& m, int p) {
  CMatrix result = CMatrix::Identity(m.rows(), m.cols());
  for (int q = 0; q < p; ++q) result = result * m;
  return result;
}

// column scales used by the minor map: unit-normalized gradients, falling
// back to the natural degree scale when a gradient is numerically zero
std::vector<double> gradient_column_scales(const Element& y, const CMatrix& columns) {
  const int rank = y.algebra().rank();
  std::vector<double> scales(rank, 1.0);
  const double base = std::max(1.0, y.norm());
  for (int c = 0; c < rank; ++c) {
    const double norm = columns.col(c).norm();
    const double natural = std::pow(base, c + 1);  // degree of grad f_{c+2} is c+1
    scales[c] = (norm > 1e-12 * natural) ? 1.0 / norm : 1.0 / natural;
  }
  return scales;
}

CMatrix gradient_columns(const Element& y) {
  const Algebra& alg = y.algebra();
  CMatrix columns(alg.dim(), alg.rank());
  for (int c = 0; c < alg.rank(); ++c) {
    columns.col(c) = grad_invariant(c + 2, y).coordinates();
  }
  return columns;
}

}  // namespace

Complex eval_invariant(int k, const Element& y) {
  require_degree(k, y);
  return matrix_power(y.matrix(), k).trace();
}

Element grad_invariant(int k, const Element& y) {
  require_degree(k, y);
  const CMatrix power = matrix_power(y.matrix(), k - 1);
  return make_traceless(y.algebra(), static_cast<double>(k) * power);
}

Element hessian_apply(int k, const Element& y, const Element& z) {
  require_degree(k, y);
  if (!(y.algebra() == z.algebra())) throw AlgebraMismatchError("hessian_apply: algebra mismatch");
  const int n = y.algebra().n();
  CMatrix sum = CMatrix::Zero(n, n);
  for (int p = 0; p + 1 <= k - 1; ++p) {
    sum += matrix_power(y.matrix(), p) * z.matrix() * matrix_power(y.matrix(), k - 2 - p);
  }
  return make_traceless(y.algebra(), static_cast<double>(k) * sum);
}

CVector chi(const Element& y) {
  const Algebra& alg = y.algebra();
  CVector values(alg.rank());
  for (int c = 0; c < alg.rank(); ++c) values(c) = eval_invariant(c + 2, y);
  return values;
}

CMatrix dchi(const Element& y) {
  const Algebra& alg = y.algebra();
  CMatrix jac(alg.rank(), alg.dim());
  for (int c = 0; c < alg.rank(); ++c) {
    jac.row(c) = (alg.trace_gram() * grad_invariant(c + 2, y).coordinates()).transpose();
  }
  return jac;
}

RankReport dchi_rank(const Element& y, double tol_rel) { return svd_rank(dchi(y), tol_rel); }

Subspace nabla_invariants(const Element& y, double tol_rel) {
  return span_of_columns(gradient_columns(y), tol_rel);
}

std::vector<std::vector<int>> minor_row_subsets(int dim, int rank) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> current(rank);
  for (int c = 0; c < rank; ++c) current[c] = c;
  for (;;) {
    subsets.push_back(current);
    int pos = rank - 1;
    while (pos >= 0 && current[pos] == dim - rank + pos) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int c = pos + 1; c < rank; ++c) current[c] = current[c - 1] + 1;
  }
  return subsets;
}

CVector singular_minors(const Element& y) {
  const Algebra& alg = y.algebra();
  CMatrix columns = gradient_columns(y);
  const auto scales = gradient_column_scales(y, columns);
  for (int c = 0; c < alg.rank(); ++c) columns.col(c) *= scales[c];

  const auto subsets = minor_row_subsets(alg.dim(), alg.rank());
  CVector minors(static_cast<Eigen::Index>(subsets.size()));
  CMatrix sub(alg.rank(), alg.rank());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int r = 0; r < alg.rank(); ++r) sub.row(r) = columns.row(subsets[s][r]);
    minors(static_cast<Eigen::Index>(s)) = sub.determinant();
  }
  return minors;
}

CMatrix singular_minors_jacobian(const Element& y) {
  const Algebra& alg = y.algebra();
  CMatrix columns = gradient_columns(y);
  const auto scales = gradient_column_scales(y, columns);
  for (int c = 0; c < alg.rank(); ++c) columns.col(c) *= scales[c];

  // derivative of each (scaled) gradient column along each basis direction
  std::vector<CMatrix> column_derivatives(alg.dim());
  for (int m = 0; m < alg.dim(); ++m) {
    const Element direction(alg, alg.basis()[m]);
    CMatrix deriv(alg.dim(), alg.rank());
    for (int c = 0; c < alg.rank(); ++c) {
      deriv.col(c) = scales[c] * hessian_apply(c + 2, y, direction).coordinates();
    }
    column_derivatives[m] = std::move(deriv);
  }

  const auto subsets = minor_row_subsets(alg.dim(), alg.rank());
  CMatrix jac(static_cast<Eigen::Index>(subsets.size()), alg.dim());
  CMatrix sub(alg.rank(), alg.rank());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int m = 0; m < alg.dim(); ++m) {
      // d det = sum over columns of det with that column differentiated
      Complex total = 0.0;
      for (int c = 0; c < alg.rank(); ++c) {
        for (int r = 0; r < alg.rank(); ++r) {
          const int row = subsets[s][r];
          for (int cc = 0; cc < alg.rank(); ++cc) {
            sub(r, cc) = (cc == c) ? column_derivatives[m](row, cc) : columns(row, cc);
          }
        }
        total += sub.determinant();
      }
      jac(static_cast<Eigen::Index>(s), m) = total;
    }
  }
  return jac;
}

}  // namespace argshift
