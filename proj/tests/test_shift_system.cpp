#include <doctest.h>

#include "argshift/interp.hpp"
#include "test_helpers.hpp"

using namespace argshift;
using namespace argshift::testing;

namespace {

Element sl3_generic_shift(const Algebra& alg) {
  CVector d(3);
  d << Complex(2, 0), Complex(-1, 0), Complex(-1, 0);
  return regular_nilpotent(alg) + diagonal_element(alg, d);
}

}  // namespace

TEST_SUITE_BEGIN("shift_system");

TEST_CASE("construction and shift kinds") {
  const Algebra alg(3);
  const ShiftSystem nilpotent(regular_nilpotent(alg));
  CHECK(nilpotent.kind() == ShiftKind::Nilpotent);
  CHECK(static_cast<int>(nilpotent.labels().size()) == alg.b());
  CHECK(nilpotent.labels()[0] == GeneratorLabel{1, 0});
  CHECK(nilpotent.labels()[4] == GeneratorLabel{2, 2});

  const ShiftSystem generic(sl3_generic_shift(alg));
  CHECK(generic.kind() == ShiftKind::NonNilpotent);
  CHECK(std::abs(eval_invariant(2, generic.shift()) - 6.0) < 1e-13);

  CHECK_THROWS_AS(ShiftSystem(zero_element(alg)), NotRegularError);
}

TEST_CASE("evaluation matches direct trace formulas for the sl_3 nilpotent shift") {
  const Algebra alg(3);
  const Element xi = regular_nilpotent(alg);
  const ShiftSystem sys(xi);
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Element y = random_element(alg, rng);
    const CVector value = eval_system(sys, y);
    const CMatrix& m = y.matrix();
    const CMatrix& x = xi.matrix();
    const Complex expected[5] = {
        (m * m).trace(),            // (1,0)
        2.0 * (x * m).trace(),      // (1,1)
        (m * m * m).trace(),        // (2,0)
        3.0 * (x * m * m).trace(),  // (2,1)
        3.0 * (x * x * m).trace(),  // (2,2)
    };
    for (int c = 0; c < 5; ++c) {
      CHECK(std::abs(value(c) - expected[c]) <= 1e-12 * std::max(1.0, std::abs(expected[c])));
    }
    // the j = 0 labels are the plain invariants
    CHECK(std::abs(value(0) - chi(y)(0)) < 1e-12);
    CHECK(std::abs(value(2) - chi(y)(1)) < 1e-12);
  }
  // at the origin every generator vanishes
  CHECK(eval_system(sys, zero_element(alg)).norm() < 1e-13);
}

TEST_CASE("discarded leading coefficient equals the invariant of the shift") {
  const Algebra alg(3);
  const Element a = sl3_generic_shift(alg);
  Rng rng(43);
  const Element x = random_element(alg, rng);
  for (int i = 1; i <= alg.rank(); ++i) {
    const int degree = i + 1;
    const CVector nodes = unit_root_nodes(degree);
    CVector samples(degree + 1);
    for (int m = 0; m <= degree; ++m) {
      samples(m) = eval_invariant(degree, x + nodes(m) * a);
    }
    const CVector coeffs = lambda_coefficients(nodes, samples);
    CHECK(std::abs(coeffs(degree) - eval_invariant(degree, a)) < 1e-11);
  }
}

TEST_CASE("the gradient of the linear generator is the constant shift") {
  const Algebra alg(3);
  const ShiftSystem sys(regular_nilpotent(alg));
  Rng rng(45);
  for (int trial = 0; trial < 3; ++trial) {
    const Element x = random_element(alg, rng);
    const Element grad = system_gradient(sys, GeneratorLabel{1, 1}, x);
    CHECK((grad.matrix() - 2.0 * sys.shift().matrix()).norm() < 1e-12);
  }
}

TEST_CASE("differential pairing vector at the sl_3 root vector") {
  // with x = e_alpha and z in the tangent family of the nilpotent witness,
  // the five pairings are (2 z5, 2 z3, 0, 6 z2, 3 z4) in label order
  const Algebra alg(3);
  const ShiftSystem sys(regular_nilpotent(alg));
  const Element x = root_vector(alg, Root{0, 1});
  const CMatrix jac = system_jacobian(sys, x);
  Rng rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    Complex z1 = rng.complex_normal(), z2 = rng.complex_normal(), z3 = rng.complex_normal();
    Complex z4 = rng.complex_normal(), z5 = rng.complex_normal(), z6 = rng.complex_normal();
    CMatrix z = CMatrix::Zero(3, 3);
    z(0, 0) = z1 + z2;
    z(0, 1) = z3;
    z(0, 2) = z4;
    z(1, 0) = z5;
    z(1, 1) = -z1 + z2;
    z(2, 1) = z5 + z6;
    z(2, 2) = -2.0 * z2;
    const CVector pairing = jac * alg.coordinates(z);
    CHECK(std::abs(pairing(0) - 2.0 * z5) < 1e-12);
    CHECK(std::abs(pairing(1) - 2.0 * z3) < 1e-12);
    CHECK(std::abs(pairing(2)) < 1e-12);
    CHECK(std::abs(pairing(3) - 6.0 * z2) < 1e-12);
    CHECK(std::abs(pairing(4) - 3.0 * z4) < 1e-12);
  }
}

TEST_CASE("jacobian matches finite differences of the evaluation") {
  const double step = 1e-5;
  Rng rng(49);
  for (int n = 2; n <= 3; ++n) {
    const Algebra alg(n);
    const ShiftSystem sys(build_shift(alg, ShiftSpec{ShiftSpec::Mode::Generic, {}}));
    for (int trial = 0; trial < 5; ++trial) {
      const Element x = random_element(alg, rng);
      const CMatrix jac = system_jacobian(sys, x);
      for (int m = 0; m < alg.dim(); m += 2) {
        const Element dir(alg, alg.basis()[static_cast<std::size_t>(m)]);
        const CVector fd =
            (eval_system(sys, x + step * dir) - eval_system(sys, x - step * dir)) / (2.0 * step);
        CHECK((jac.col(m) - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
      }
    }
  }
}

TEST_CASE("full rank away from the critical set and defect on it") {
  const Algebra alg(3);
  const ShiftSystem sys(sl3_generic_shift(alg));
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = random_element(alg, rng);
    CHECK(system_jacobian_rank(sys, x).rank == alg.b());

    const Element on_critical =
        random_singular_point(alg, rng) + rng.unit_disc() * sys.shift();
    CHECK(system_jacobian_rank(sys, on_critical).rank < alg.b());
  }
}

TEST_CASE("gradient span on the Cartan stays lower triangular") {
  const Algebra alg(3);
  const ShiftSystem sys(sl3_generic_shift(alg));
  const LeviData levi = levi_data(alg, Root{0, 1});
  Rng rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    CVector d(3);
    const double a0 = rng.uniform(-2, 2), a1 = rng.uniform(-2, 2);
    d << Complex(a0, 0), Complex(a1, 0), Complex(-a0 - a1, 0);
    const Element x = diagonal_element(alg, d);
    for (const Element& grad : system_gradients(sys, x)) {
      CHECK(strict_upper_mass(grad) <= 1e-10 * std::max(1.0, grad.norm()));
    }
    CHECK(containment_angle(gradient_span(sys, x), levi.borel_minus) < 1e-7);
  }
}

TEST_CASE("gradient span has dimension b at regular points") {
  Rng rng(55);
  for (int n = 2; n <= 4; ++n) {
    const Algebra alg(n);
    const ShiftSystem sys(build_shift(alg, ShiftSpec{ShiftSpec::Mode::Generic, {}}));
    const Element x = random_element(alg, rng);
    CHECK(gradient_span(sys, x).dim() == alg.b());
  }
}

TEST_CASE("centralizer span agrees with the gradient span") {
  Rng rng(57);
  for (int n = 3; n <= 4; ++n) {
    const Algebra alg(n);
    const ShiftSystem sys(build_shift(alg, ShiftSpec{ShiftSpec::Mode::Generic, {}}));
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = random_element(alg, rng);
      const Subspace via_gradients = gradient_span(sys, x);
      const Subspace via_centralizers = centralizer_span(sys, x, rng);
      CHECK(subspace_equal(via_gradients, via_centralizers, 1e-6));
      // the lambda = 0 content: invariant gradients at x are inside the span
      CHECK(containment_angle(nabla_invariants(x), via_centralizers) < 1e-6);
    }
  }
}

TEST_CASE("centralizer span agrees with the gradient span at singular points") {
  // the generating property of the centralizers holds on the critical set too,
  // where the span drops below dimension b
  const Algebra alg(3);
  const ShiftSystem sys(sl3_generic_shift(alg));
  Rng rng(59);
  const Element h = sl3_subreg_diag(alg);
  const Subspace via_gradients = gradient_span(sys, h);
  const Subspace via_centralizers = centralizer_span(sys, h, rng);
  CHECK(via_gradients.dim() < alg.b());
  CHECK(subspace_equal(via_gradients, via_centralizers, 1e-6));
}

TEST_CASE("gradient span meets the Levi derived algebra in the predicted line") {
  const Algebra alg(3);
  const Element a = sl3_generic_shift(alg);
  const ShiftSystem sys(a);
  const Root alpha{0, 1};
  const LeviData levi = levi_data(alg, alpha);
  Rng rng(61);
  // c is read off the diagonal part of the shift: alpha(y)/2 = 3/2
  const Element direction = levi.e_minus + Complex(1.5, 0) * levi.h;
  const Subspace line = span(alg.dim(), {direction.coordinates()});
  for (int trial = 0; trial < 5; ++trial) {
    const Element h = sample_ker_alpha_circ(alg, alpha, rng);
    const Subspace meet = subspace_intersect(gradient_span(sys, h), levi.levi_comm);
    CHECK(meet.dim() == 1);
    CHECK(max_principal_angle(meet, line) < 1e-6);
  }
}

TEST_CASE("evaluation stays exact at extreme point scales") {
  // the interpolation radius adapts to |x|/|a|; check both clamp regimes
  const Algebra alg(3);
  const Element xi = regular_nilpotent(alg);
  const ShiftSystem sys(xi);
  Rng rng(58);
  for (const double scale : {1e-6, 1.0, 1e4}) {
    const Element y = random_element(alg, rng) * Complex(scale, 0.0);
    const CVector value = eval_system(sys, y);
    const CMatrix& m = y.matrix();
    const CMatrix& x = xi.matrix();
    const Complex expected[5] = {(m * m).trace(), 2.0 * (x * m).trace(), (m * m * m).trace(),
                                 3.0 * (x * m * m).trace(), 3.0 * (x * x * m).trace()};
    // coefficient (i, j) has natural magnitude |y|^(d_i - j) |a|^j
    const int deg[5] = {2, 2, 3, 3, 3};
    const int ord[5] = {0, 1, 0, 1, 2};
    for (int c = 0; c < 5; ++c) {
      const double natural =
          std::pow(y.norm(), deg[c] - ord[c]) * std::pow(xi.norm(), ord[c]);
      CHECK(std::abs(value(c) - expected[c]) <=
            1e-11 * std::max(natural, std::abs(expected[c])));
    }
  }
}

TEST_CASE("poisson brackets of generators vanish") {
  const Algebra alg(3);
  const ShiftSystem sys(regular_nilpotent(alg));
  Rng rng(63);
  const Element x = random_element(alg, rng);
  CHECK(std::abs(poisson_bracket(sys, GeneratorLabel{1, 0}, GeneratorLabel{1, 0}, x)) < 1e-14);
  // {tr x^2, 2 tr(xi x)} = <x, [2x, 2xi]> = 0 by the cyclic trace identity
  CHECK(std::abs(poisson_bracket(sys, GeneratorLabel{1, 0}, GeneratorLabel{1, 1}, x)) <=
        1e-12 * std::max(1.0, x.norm() * x.norm()));

  for (int n = 2; n <= 4; ++n) {
    const Algebra a(n);
    const ShiftSystem s(build_shift(a, ShiftSpec{ShiftSpec::Mode::Generic, {}}));
    for (int trial = 0; trial < 3; ++trial) {
      Rng local(derive_seed(63, {static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(trial)}));
      const Element y = random_element(a, local);
      const auto gradients = system_gradients(s, y);
      for (std::size_t p = 0; p < gradients.size(); ++p) {
        for (std::size_t q = p + 1; q < gradients.size(); ++q) {
          const double scale =
              std::max(1.0, y.norm() * gradients[p].norm() * gradients[q].norm());
          CHECK(std::abs(poisson_bracket(y, gradients[p], gradients[q])) <= 1e-8 * scale);
        }
      }
    }
  }
}

TEST_CASE("evaluation commutes with simultaneous conjugation") {
  Rng rng(65);
  for (int n = 2; n <= 3; ++n) {
    const Algebra alg(n);
    const Element a = build_shift(alg, ShiftSpec{ShiftSpec::Mode::Generic, {}});
    const ShiftSystem sys(a);
    for (int trial = 0; trial < 5; ++trial) {
      const Element x = random_element(alg, rng);
      const Conjugator g = random_conjugator(alg, rng.next_u64());
      const ShiftSystem conjugated(g.apply(a));
      const CVector lhs = eval_system(conjugated, g.apply(x));
      const CVector rhs = eval_system(sys, x);
      CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("bi-homogeneity in the point and the shift together") {
  const Algebra alg(3);
  const Element a = sl3_generic_shift(alg);
  const ShiftSystem sys(a);
  const Complex s(1.7, 0.3);
  Rng rng(67);
  const Element x = random_element(alg, rng);
  const ShiftSystem scaled_sys(a * s);
  const CVector base = eval_system(sys, x);
  const CVector scaled = eval_system(scaled_sys, x * s);
  int out = 0;
  for (int i = 1; i <= alg.rank(); ++i) {
    const int degree = i + 1;
    const Complex factor = std::pow(s, degree);
    for (int j = 0; j < degree; ++j, ++out) {
      CHECK(std::abs(scaled(out) - factor * base(out)) <=
            1e-12 * std::max(1.0, std::abs(factor * base(out))));
    }
  }
}

TEST_SUITE_END();
