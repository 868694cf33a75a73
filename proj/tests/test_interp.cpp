#include <doctest.h>

#include "argshift/interp.hpp"
#include "test_helpers.hpp"

using namespace argshift;
using namespace argshift::testing;

TEST_SUITE_BEGIN("interp");

TEST_CASE("constant samples give a constant polynomial") {
  const CVector nodes = unit_root_nodes(2);
  CVector samples(3);
  samples << Complex(5, 0), Complex(5, 0), Complex(5, 0);
  const CVector coeffs = lambda_coefficients(nodes, samples);
  CHECK(std::abs(coeffs(0) - 5.0) < 1e-13);
  CHECK(std::abs(coeffs(1)) < 1e-13);
  CHECK(std::abs(coeffs(2)) < 1e-13);
}

TEST_CASE("lambda^2 at custom nodes 1, i, -1") {
  CVector nodes(3);
  nodes << Complex(1, 0), Complex(0, 1), Complex(-1, 0);
  CVector samples(3);
  for (int m = 0; m < 3; ++m) samples(m) = nodes(m) * nodes(m);
  const CVector coeffs = lambda_coefficients(nodes, samples);
  CHECK(std::abs(coeffs(0)) < 1e-13);
  CHECK(std::abs(coeffs(1)) < 1e-13);
  CHECK(std::abs(coeffs(2) - 1.0) < 1e-13);
}

TEST_CASE("coefficients of tr((y + lambda xi)^2) in sl_3") {
  const Algebra alg(3);
  const Element xi = regular_nilpotent(alg);
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Element y = random_element(alg, rng);
    const CVector nodes = unit_root_nodes(2);
    CVector samples(3);
    for (int m = 0; m < 3; ++m) {
      const CMatrix shifted = y.matrix() + nodes(m) * xi.matrix();
      samples(m) = (shifted * shifted).trace();
    }
    const CVector coeffs = lambda_coefficients(nodes, samples);
    const Complex c0 = (y.matrix() * y.matrix()).trace();
    const Complex c1 = 2.0 * (xi.matrix() * y.matrix()).trace();
    CHECK(std::abs(coeffs(0) - c0) < 1e-12);
    CHECK(std::abs(coeffs(1) - c1) < 1e-12);
    CHECK(std::abs(coeffs(2)) < 1e-12);  // tr(xi^2) = 0
  }
}

TEST_CASE("roundtrip for degrees up to six") {
  Rng rng(7);
  for (int degree = 0; degree <= 6; ++degree) {
    for (int trial = 0; trial < 10; ++trial) {
      CVector coeffs(degree + 1);
      for (int j = 0; j <= degree; ++j) coeffs(j) = rng.complex_normal();
      const CVector nodes = unit_root_nodes(degree);
      CVector samples(degree + 1);
      for (int m = 0; m <= degree; ++m) {
        Complex value = 0.0;
        Complex power = 1.0;
        for (int j = 0; j <= degree; ++j) {
          value += coeffs(j) * power;
          power *= nodes(m);
        }
        samples(m) = value;
      }
      const CVector recovered = lambda_coefficients(nodes, samples);
      CHECK((recovered - coeffs).norm() <= 1e-10 * std::max(1.0, coeffs.norm()));
    }
  }
}

TEST_CASE("colliding nodes are rejected") {
  CVector nodes(3);
  nodes << Complex(1, 0), Complex(1, 0), Complex(-1, 0);
  const CVector samples = CVector::Zero(3);
  CHECK_THROWS_AS(lambda_coefficients(nodes, samples), NodeCollisionError);
}

TEST_CASE("componentwise interpolation of vector samples") {
  Rng rng(9);
  const int degree = 3;
  const CVector nodes = unit_root_nodes(degree);
  CMatrix coeffs(degree + 1, 4);
  for (int j = 0; j <= degree; ++j) {
    for (int c = 0; c < 4; ++c) coeffs(j, c) = rng.complex_normal();
  }
  CMatrix samples(degree + 1, 4);
  for (int m = 0; m <= degree; ++m) {
    Complex power = 1.0;
    samples.row(m).setZero();
    for (int j = 0; j <= degree; ++j) {
      samples.row(m) += power * coeffs.row(j);
      power *= nodes(m);
    }
  }
  const CMatrix recovered = lambda_coefficients(nodes, samples);
  CHECK((recovered - coeffs).norm() < 1e-12 * coeffs.norm());
}

TEST_SUITE_END();
