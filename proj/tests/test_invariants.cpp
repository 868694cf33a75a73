#include <doctest.h>

#include "argshift/invariants.hpp"
#include "test_helpers.hpp"

using namespace argshift;
using namespace argshift::testing;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("trace power values") {
  const Algebra alg(3);
  CHECK(std::abs(eval_invariant(2, sl3_subreg_diag(alg)) - 6.0) < 1e-14);
  const Element xi = regular_nilpotent(alg);
  CHECK(std::abs(eval_invariant(2, xi)) < 1e-15);
  CHECK(std::abs(eval_invariant(3, xi)) < 1e-15);
  CHECK(std::abs(eval_invariant(2, root_vector(alg, Root{0, 1}))) < 1e-15);
  CHECK_THROWS_AS(eval_invariant(4, xi), DegreeOutOfRangeError);
  CHECK_THROWS_AS(eval_invariant(1, xi), DegreeOutOfRangeError);
}

TEST_CASE("gradient closed forms") {
  Rng rng(21);
  const Algebra alg(3);
  const Element y = random_element(alg, rng);
  CHECK((grad_invariant(2, y).matrix() - 2.0 * y.matrix()).norm() < 1e-13);
  const CMatrix expected =
      3.0 * y.matrix() * y.matrix() -
      (y.matrix() * y.matrix()).trace() * CMatrix::Identity(3, 3);
  CHECK((grad_invariant(3, y).matrix() - expected).norm() < 1e-12);
}

TEST_CASE("gradients match finite differences") {
  const double step = 1e-5;
  Rng rng(25);
  for (int n = 2; n <= 4; ++n) {
    const Algebra alg(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Element y = random_element(alg, rng);
      const Element z = random_element(alg, rng);
      for (int k = 2; k <= n; ++k) {
        const Complex paired = trace_form(grad_invariant(k, y), z);
        const Complex fd =
            (eval_invariant(k, y + step * z) - eval_invariant(k, y - step * z)) / (2.0 * step);
        CHECK(std::abs(paired - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST_CASE("hessian closed form and finite differences") {
  const Algebra alg(3);
  Rng rng(27);

  // k = 2: the gradient 2y is linear, so the derivative is 2z
  const Element y0 = random_element(alg, rng);
  const Element z0 = random_element(alg, rng);
  CHECK((hessian_apply(2, y0, z0).matrix() - 2.0 * z0.matrix()).norm() < 1e-13);

  // k = 3 at y = e_alpha, z = e_{-alpha}: 3(e e' + e' e) - 2 tr(e e') I = diag(1,1,-2)
  const Element e = root_vector(alg, Root{0, 1});
  const Element f = root_vector(alg, Root{0, 1}, true);
  CHECK((hessian_apply(3, e, f).matrix() - sl3_subreg_diag(alg).matrix()).norm() < 1e-14);

  const double step = 1e-5;
  for (int n = 2; n <= 4; ++n) {
    const Algebra a(n);
    for (int trial = 0; trial < 10; ++trial) {
      Rng local(derive_seed(27, {static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(trial)}));
      const Element y = random_element(a, local);
      const Element z = random_element(a, local);
      for (int k = 2; k <= n; ++k) {
        const CMatrix fd =
            (grad_invariant(k, y + step * z).matrix() - grad_invariant(k, y - step * z).matrix()) /
            (2.0 * step);
        CHECK((hessian_apply(k, y, z).matrix() - fd).norm() <=
              1e-6 * std::max(1.0, fd.norm()));

        // explicit formula: k sum_{p+q=k-2} y^p z y^q - k(k-1)/n tr(y^{k-2} z) I
        CMatrix sum = CMatrix::Zero(n, n);
        CMatrix left = CMatrix::Identity(n, n);
        for (int p = 0; p <= k - 2; ++p) {
          CMatrix right = CMatrix::Identity(n, n);
          for (int q = 0; q < k - 2 - p; ++q) right = right * y.matrix();
          sum += left * z.matrix() * right;
          left = left * y.matrix();
        }
        CMatrix power = CMatrix::Identity(n, n);
        for (int q = 0; q < k - 2; ++q) power = power * y.matrix();
        const CMatrix explicit_form =
            static_cast<double>(k) * sum -
            (static_cast<double>(k) * (k - 1) / n) * (power * z.matrix()).trace() *
                CMatrix::Identity(n, n);
        CHECK((hessian_apply(k, y, z).matrix() - explicit_form).norm() <=
              1e-11 * std::max(1.0, explicit_form.norm()));
      }
    }
  }
}

TEST_CASE("adjoint quotient rank drops on the subregular stratum") {
  const Algebra alg(3);
  CVector d(3);
  d << Complex(1, 0), Complex(2, 0), Complex(-3, 0);
  CHECK(dchi_rank(diagonal_element(alg, d)).rank == 2);
  CHECK(dchi_rank(sl3_subreg_diag(alg)).rank == 1);
}

TEST_CASE("chi is conjugation invariant") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra alg(2 + trial % 3);
    const Element y = random_element(alg, rng);
    const auto [g, conjugated] = random_conjugation(y, rng);
    CHECK((chi(conjugated) - chi(y)).norm() <=
          1e-9 * std::max(1.0, chi(y).norm()));
  }
}

TEST_CASE("gradients are Ad-equivariant") {
  Rng rng(31);
  const Algebra alg(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Element y = random_element(alg, rng);
    const Conjugator g = random_conjugator(alg, rng.next_u64());
    for (int k = 2; k <= 3; ++k) {
      const CMatrix lhs = grad_invariant(k, g.apply(y)).matrix();
      const CMatrix rhs = g.apply(grad_invariant(k, y)).matrix();
      CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("invariant gradient span at special points") {
  const Algebra alg(3);

  // at the subregular diagonal the span is ker(alpha)
  const Element x = sl3_subreg_diag(alg);
  CHECK(subspace_equal(nabla_invariants(x), span(alg.dim(), {x.coordinates()}), 1e-9));
  CHECK(subspace_equal(nabla_invariants(x), levi_data(alg, Root{0, 1}).ker_alpha, 1e-9));

  // at a regular diagonal the span is the full Cartan (the centralizer centre)
  CVector d(3);
  d << Complex(1, 0), Complex(2, 0), Complex(-3, 0);
  const Element reg = diagonal_element(alg, d);
  CHECK(subspace_equal(nabla_invariants(reg), alg.cartan(), 1e-9));

  // at the regular nilpotent the gradients centralize the point
  const Element xi = regular_nilpotent(alg);
  const Subspace at_xi = nabla_invariants(xi);
  CHECK(at_xi.dim() <= alg.rank());
  for (int c = 0; c < at_xi.dim(); ++c) {
    const Element v(alg, alg.matrix_from(at_xi.basis().col(c)));
    CHECK(bracket(v, xi).norm() <= 1e-10);
  }
}

TEST_CASE("kernel of dchi is the trace-form complement of the gradient span") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra alg(2 + trial % 3);
    const Element y = random_element(alg, rng);
    const Subspace lhs = kernel(dchi(y));
    const Subspace rhs = perp_trace_form(nabla_invariants(y), alg.trace_gram());
    CHECK(subspace_equal(lhs, rhs, 1e-7));
  }
}

TEST_CASE("singular minors vanish exactly on the singular set") {
  const Algebra alg(3);
  CHECK(singular_minors(sl3_subreg_diag(alg)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(singular_minors(root_vector(alg, Root{0, 1})).cwiseAbs().maxCoeff() <= 1e-10);
  CVector d(3);
  d << Complex(1, 0), Complex(2, 0), Complex(-3, 0);
  CHECK(singular_minors(diagonal_element(alg, d)).cwiseAbs().maxCoeff() >= 0.1);
}

TEST_CASE("minor values separate regular from singular points") {
  Rng rng(35);
  for (int n = 2; n <= 4; ++n) {
    const Algebra alg(n);
    for (int trial = 0; trial < 50; ++trial) {
      const Element regular = random_element(alg, rng);  // regular almost surely
      CHECK(classify(regular).kind == ElementKind::Regular);
      CHECK(singular_minors(regular).cwiseAbs().maxCoeff() > 1e-8);

      const Element singular = random_singular_point(alg, rng);
      CHECK(classify(singular).kind != ElementKind::Regular);
      CHECK(singular_minors(singular).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("minor jacobian matches finite differences on the singular locus") {
  // the column rescaling freezes at the evaluation point, so the comparison
  // needs on-locus points whose gradient columns stay bounded away from zero
  // (at e_alpha the cubic gradient vanishes and the rescaled map jumps)
  const Algebra alg(3);
  const double step = 1e-6;
  Rng rng(37);
  std::vector<Element> points{sl3_subreg_diag(alg)};
  points.push_back(random_conjugator(alg, rng.next_u64()).apply(points[0]));
  points.push_back(random_conjugator(alg, rng.next_u64()).apply(points[0]));
  for (const Element& y : points) {
    const CMatrix jac = singular_minors_jacobian(y);
    for (int m = 0; m < alg.dim(); m += 3) {
      const Element dir(alg, alg.basis()[static_cast<std::size_t>(m)]);
      const CVector plus = singular_minors(y + step * dir);
      const CVector minus = singular_minors(y - step * dir);
      const CVector fd = (plus - minus) / (2.0 * step);
      CHECK((jac.col(m) - fd).norm() <= 1e-4 * std::max(1.0, fd.norm()));
    }
  }
}

TEST_CASE("minor enumeration is lexicographic") {
  const auto subsets = minor_row_subsets(4, 2);
  REQUIRE(subsets.size() == 6);
  CHECK(subsets[0] == std::vector<int>{0, 1});
  CHECK(subsets[1] == std::vector<int>{0, 2});
  CHECK(subsets[5] == std::vector<int>{2, 3});
}

TEST_SUITE_END();
