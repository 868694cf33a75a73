#include "argshift/interp.hpp"

#include <cmath>

namespace argshift {

namespace {

CMatrix vandermonde(const CVector& nodes) {
  const auto count = nodes.size();
  for (Eigen::Index p = 0; p < count; ++p) {
    for (Eigen::Index q = p + 1; q < count; ++q) {
      if (std::abs(nodes(p) - nodes(q)) <= 1e-12) {
        throw NodeCollisionError("lambda_coefficients: interpolation nodes coincide");
      }
    }
  }
  CMatrix v(count, count);
  for (Eigen::Index m = 0; m < count; ++m) {
    Complex power = 1.0;
    for (Eigen::Index j = 0; j < count; ++j) {
      v(m, j) = power;
      power *= nodes(m);
    }
  }
  return v;
}

}  // namespace

CVector unit_root_nodes(int degree, double radius) {
  const int count = degree + 1;
  CVector nodes(count);
  for (int m = 0; m < count; ++m) {
    const double angle = 2.0 * M_PI * m / count;
    nodes(m) = radius * Complex(std::cos(angle), std::sin(angle));
  }
  return nodes;
}

CVector lambda_coefficients(const CVector& nodes, const CVector& samples) {
  if (nodes.size() != samples.size()) {
    throw DimensionMismatchError("lambda_coefficients: node/sample count mismatch");
  }
  return vandermonde(nodes).colPivHouseholderQr().solve(samples);
}

CMatrix lambda_coefficients(const CVector& nodes, const CMatrix& samples) {
  if (nodes.size() != samples.rows()) {
    throw DimensionMismatchError("lambda_coefficients: node/sample count mismatch");
  }
  return vandermonde(nodes).colPivHouseholderQr().solve(samples);
}

}  // namespace argshift
