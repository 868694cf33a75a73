#pragma once

#include "argshift/linalg.hpp"

namespace argshift {

/// The degree+1 default interpolation nodes: scaled roots of unity
/// r * exp(2*pi*i*m/(degree+1)), m = 0..degree. At radius 1 the Vandermonde
/// system is an inverse DFT and optimally conditioned.
CVector unit_root_nodes(int degree, double radius = 1.0);

/// Coefficients c_0..c_d of the unique degree-d interpolant through the
/// samples taken at d+1 distinct nodes. Exact to roundoff when the sampled
/// function is a polynomial of degree <= d. Throws NodeCollisionError when two
/// nodes coincide within 1e-12.
CVector lambda_coefficients(const CVector& nodes, const CVector& samples);

/// Componentwise variant: row m of `samples` is the sampled vector at node m;
/// row j of the result is the coefficient vector of lambda^j.
CMatrix lambda_coefficients(const CVector& nodes, const CMatrix& samples);

}  // namespace argshift
