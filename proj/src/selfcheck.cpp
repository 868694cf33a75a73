#include "argshift/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "argshift/interp.hpp"

namespace argshift {

namespace {

std::string fmt(const char* pattern, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), pattern, value);
  return buffer;
}

std::string fmt_count(int good, int total) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%d/%d", good, total);
  return buffer;
}

Element random_element(const Algebra& alg, Rng& rng) {
  CVector coords(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) coords(k) = rng.complex_normal();
  return Element(alg, alg.matrix_from(coords));
}

Subspace random_subspace(const Algebra& alg, int dim, Rng& rng) {
  CMatrix columns(alg.dim(), dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < alg.dim(); ++r) columns(r, c) = rng.complex_normal();
  }
  return span_of_columns(columns);
}

Assertion check_fd_gradients(std::uint64_t seed, double /*tol_rel*/) {
  double worst = 0.0;
  const double step = 1e-5;
  for (int n = 2; n <= 4; ++n) {
    const Algebra alg(n);
    for (int sample = 0; sample < 20; ++sample) {
      Rng rng(derive_seed(seed, {100, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(sample)}));
      const Element y = random_element(alg, rng);
      const Element z = random_element(alg, rng);
      for (int k = 2; k <= n; ++k) {
        const Complex paired = trace_form(grad_invariant(k, y), z);
        const Complex fd = (eval_invariant(k, y + step * z) - eval_invariant(k, y - step * z)) /
                           (2.0 * step);
        worst = std::max(worst, std::abs(paired - fd) / std::max(1.0, std::abs(fd)));
      }
    }
  }
  Assertion a;
  a.name = "finite-difference-gradients";
  a.anchor = "trace-form gradients match central differences";
  a.expected = "relative error < 1e-5 for n = 2..4";
  a.measured = fmt("max relative error %.3g", worst);
  a.pass = worst < 1e-5;
  return a;
}

Assertion check_subspace_involution(std::uint64_t seed, double tol_rel) {
  int good = 0;
  const int count = 100;
  double worst_angle = 0.0;
  for (int sample = 0; sample < count; ++sample) {
    const Algebra alg(sample % 2 == 0 ? 3 : 4);
    Rng rng(derive_seed(seed, {101, static_cast<std::uint64_t>(sample)}));
    const int dim = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(alg.dim() - 1));
    const Subspace s = random_subspace(alg, dim, rng);
    const Subspace perp = perp_trace_form(s, alg.trace_gram(), tol_rel);
    const Subspace back = perp_trace_form(perp, alg.trace_gram(), tol_rel);
    if (perp.dim() + s.dim() == alg.dim() && back.dim() == s.dim()) {
      const double angle = max_principal_angle(back, s);
      worst_angle = std::max(worst_angle, angle);
      if (angle < 1e-6) ++good;
    }
  }
  Assertion a;
  a.name = "complement-involution";
  a.anchor = "the trace-form complement is dimension-complementary and involutive";
  a.expected = "100/100 subspaces of sl_3 and sl_4";
  a.measured = fmt_count(good, count) + fmt(", max angle %.3g", worst_angle);
  a.pass = good == count;
  return a;
}

Assertion check_interpolation_roundtrip(std::uint64_t seed, double /*tol_rel*/) {
  double worst = 0.0;
  for (int degree = 0; degree <= 6; ++degree) {
    for (int sample = 0; sample < 10; ++sample) {
      Rng rng(derive_seed(seed, {102, static_cast<std::uint64_t>(degree),
                                 static_cast<std::uint64_t>(sample)}));
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
      // re-evaluate the recovered interpolant at the nodes
      for (int m = 0; m <= degree; ++m) {
        Complex value = 0.0;
        Complex power = 1.0;
        for (int j = 0; j <= degree; ++j) {
          value += recovered(j) * power;
          power *= nodes(m);
        }
        worst = std::max(worst, std::abs(value - samples(m)) /
                                    std::max(1.0, std::abs(samples(m))));
      }
    }
  }
  Assertion a;
  a.name = "interpolation-roundtrip";
  a.anchor = "coefficient extraction reproduces polynomial samples";
  a.expected = "relative error <= 1e-10 for degrees <= 6";
  a.measured = fmt("max relative error %.3g", worst);
  a.pass = worst <= 1e-10;
  return a;
}

Assertion check_poisson(std::uint64_t seed, double tol_rel) {
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const Algebra alg(n);
    const ShiftSystem sys(build_shift(alg, ShiftSpec{ShiftSpec::Mode::Generic, {}}), 1e-8);
    for (int sample = 0; sample < 5; ++sample) {
      Rng rng(derive_seed(seed, {104, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(sample)}));
      const Element x = random_element(alg, rng);
      const auto gradients = system_gradients(sys, x);
      for (std::size_t p = 0; p < gradients.size(); ++p) {
        for (std::size_t q = p + 1; q < gradients.size(); ++q) {
          const double scale =
              std::max(1.0, x.norm() * gradients[p].norm() * gradients[q].norm());
          worst = std::max(worst,
                           std::abs(poisson_bracket(x, gradients[p], gradients[q])) / scale);
        }
      }
    }
  }
  Assertion a;
  a.name = "poisson-commutativity";
  a.anchor = "generator pairs Poisson-commute at the configured tolerance";
  a.expected = fmt("normalized bracket <= %.3g", std::max(tol_rel, 0.0));
  a.measured = fmt("max normalized bracket %.3g", worst);
  a.pass = worst <= tol_rel;
  return a;
}

Assertion check_rank_separation(std::uint64_t seed, double tol_rel) {
  // constructed rank deficiencies must be recovered exactly
  int good = 0;
  const int count = 50;
  for (int sample = 0; sample < count; ++sample) {
    Rng rng(derive_seed(seed, {105, static_cast<std::uint64_t>(sample)}));
    CMatrix m(4, 8);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 8; ++c) m(r, c) = rng.complex_normal();
    }
    m.row(2) = m.row(0) + m.row(1);
    m.row(3) = m.row(0) - 2.0 * m.row(1);
    if (svd_rank(m, tol_rel).rank == 2) ++good;
  }
  Assertion a;
  a.name = "rank-separation";
  a.anchor = "exact linear dependencies are detected at the configured cutoff";
  a.expected = "rank 2 on 50 constructed 4x8 matrices";
  a.measured = fmt_count(good, count);
  a.pass = good == count;
  return a;
}

Assertion check_tolerance_attainable(double tol_rel) {
  Assertion a;
  a.name = "tolerance-attainable";
  a.anchor = "the rank cutoff must sit above double-precision roundoff";
  a.expected = "1e-14 <= tol < 1";
  a.measured = fmt("tol %.3g", tol_rel);
  a.pass = tol_rel >= 1e-14 && tol_rel < 1.0;
  if (!a.pass) {
    a.measured += " (below attainable double-precision accuracy; rank decisions would track roundoff noise)";
  }
  return a;
}

}  // namespace

std::vector<Assertion> run_selfcheck(std::uint64_t seed, double tol_rel) {
  std::vector<Assertion> checks;
  checks.push_back(check_tolerance_attainable(tol_rel));
  checks.push_back(check_fd_gradients(seed, tol_rel));
  checks.push_back(check_interpolation_roundtrip(seed, tol_rel));
  checks.push_back(check_subspace_involution(seed, tol_rel));
  checks.push_back(check_rank_separation(seed, tol_rel));
  checks.push_back(check_poisson(seed, tol_rel));
  return checks;
}

}  // namespace argshift
