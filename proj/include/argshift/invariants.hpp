#pragma once

#include <vector>

#include "argshift/lie.hpp"

namespace argshift {

/// The invariant generators of sl_n are the trace powers f_k(y) = tr(y^k),
/// k = 2..n. Throws DegreeOutOfRangeError outside that range.
Complex eval_invariant(int k, const Element& y);

/// Gradient w.r.t. the trace form: k * (y^{k-1} - tr(y^{k-1})/n * I).
/// Satisfies <grad, z> = d/dt f_k(y + t z) at t = 0.
Element grad_invariant(int k, const Element& y);

/// Directional derivative of grad_invariant in direction z:
/// k * sum_{p+q=k-2} y^p z y^q - k(k-1)/n * tr(y^{k-2} z) * I.
Element hessian_apply(int k, const Element& y, const Element& z);

/// The adjoint quotient in coordinates: (f_2(y), ..., f_n(y)).
CVector chi(const Element& y);

/// Jacobian of chi at y (rank x dim): row k pairs grad f_{k+2} against the
/// fixed basis through the trace form.
CMatrix dchi(const Element& y);

RankReport dchi_rank(const Element& y, double tol_rel = kDefaultRankTol);

/// Span of the invariant gradients at y.
Subspace nabla_invariants(const Element& y, double tol_rel = kDefaultRankTol);

/// The singular locus of sl_n is cut out by the maximal minors of the
/// dim x rank matrix of invariant gradients; all of them vanish exactly when
/// y is not regular. Minors are enumerated lexicographically over row index
/// subsets, and the gradient columns are rescaled to unit norm so the values
/// stay well-scaled (the vanishing locus is unchanged).
CVector singular_minors(const Element& y);

/// Exact Jacobian of the minor map at y, (#minors) x dim, via hessian_apply
/// and cofactor expansion. The same column rescaling as singular_minors is
/// applied (constant factors fixed at y, so the derivative is consistent).
CMatrix singular_minors_jacobian(const Element& y);

/// Row subsets used by singular_minors, in emission order.
std::vector<std::vector<int>> minor_row_subsets(int dim, int rank);

}  // namespace argshift
