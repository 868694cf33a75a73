#include "argshift/strata.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace argshift {

namespace {

// semisimplicity guard: eigenvalues are clustered and the product of
// (x - mu I) over cluster representatives must be small
bool is_numerically_semisimple(const Element& x) {
  const int n = x.algebra().n();
  const double scale = std::max(1.0, x.norm());
  Eigen::ComplexEigenSolver<CMatrix> solver(x.matrix(), false);
  std::vector<Complex> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<Complex> reps;
  std::vector<int> counts;
  for (const Complex& v : values) {
    if (!reps.empty() && std::abs(v - reps.back() / static_cast<double>(counts.back())) <
                             1e-6 * scale) {
      reps.back() += v;
      ++counts.back();
    } else {
      reps.push_back(v);
      counts.push_back(1);
    }
  }
  CMatrix product = CMatrix::Identity(n, n);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const Complex mu = reps[c] / static_cast<double>(counts[c]);
    product = product * (x.matrix() - mu * CMatrix::Identity(n, n));
  }
  const double defect = product.norm() / std::pow(scale, static_cast<double>(reps.size()));
  return defect <= 1e-8;
}

}  // namespace

Subspace orbit_tangent(const Element& x, double tol_rel) {
  return span_of_columns(ad_matrix(x), tol_rel);
}

Subspace tangent_subreg_ss(const Element& x, double tol_rel) {
  if (classify(x, tol_rel).kind != ElementKind::Subregular) {
    throw NotSubregularError("tangent_subreg_ss: point is not subregular");
  }
  if (!is_numerically_semisimple(x)) {
    throw NotSemisimpleError("tangent_subreg_ss: point is not numerically semisimple");
  }
  const Subspace cent = centralizer(x, tol_rel);
  const Subspace derived = derived_subalgebra(x.algebra(), cent, tol_rel);
  return perp_trace_form(derived, x.algebra().trace_gram(), tol_rel);
}

std::pair<Subspace, bool> tangent_numeric(const Element& y, double tol_rel,
                                          double on_locus_tol) {
  const CVector minors = singular_minors(y);
  const double max_minor = minors.size() > 0 ? minors.cwiseAbs().maxCoeff() : 0.0;
  if (max_minor > on_locus_tol) {
    throw NotOnSingularLocusError("tangent_numeric: point is not on the singular locus");
  }
  const Subspace tangent = kernel(singular_minors_jacobian(y), tol_rel);
  const bool smooth = tangent.dim() == y.algebra().dim() - 3;
  return {tangent, smooth};
}

CriticalSample make_critical_sample(const ShiftSystem& sys, Root alpha, const Element& h,
                                    const Conjugator& conj, Complex t, double tol_rel) {
  const Algebra& alg = sys.algebra();
  const Subspace tangent_at_h = tangent_subreg_ss(h, tol_rel);
  const Subspace pushed = conj.apply(alg, tangent_at_h);
  const Element x = conj.apply(h) + t * sys.shift();
  const Subspace shift_line = span(alg.dim(), {sys.shift().coordinates()});
  const Subspace swept = subspace_sum(pushed, shift_line, tol_rel);
  const bool smooth = swept.dim() == alg.dim() - 2;

  CriticalSample sample{x, SubregWitness{alpha, h, conj.seed, t},
                        smooth ? swept : pushed, smooth, TangentSource::ClosedForm};
  return sample;
}

CriticalSample sample_critical(const ShiftSystem& sys, Root alpha, Rng& rng, double tol_rel) {
  const Element h = sample_ker_alpha_circ(sys.algebra(), alpha, rng);
  const Conjugator conj = random_conjugator(sys.algebra(), rng.next_u64());
  const Complex t = rng.unit_disc();
  return make_critical_sample(sys, alpha, h, conj, t, tol_rel);
}

CriticalSample nilpotent_witness_sl3(const ShiftSystem& sys, double tol_rel) {
  const Algebra& alg = sys.algebra();
  if (alg.n() != 3) {
    throw WrongAlgebraError("nilpotent_witness_sl3: only defined for sl_3");
  }
  if (sys.kind() != ShiftKind::Nilpotent) {
    throw WrongShiftKindError("nilpotent_witness_sl3: shift must be nilpotent");
  }
  const Root alpha{0, 1};
  const Element x = root_vector(alg, alpha);

  // closed-form tangent of the singular locus at e_alpha: [g, x] + z(l_alpha)
  const Subspace base =
      subspace_sum(orbit_tangent(x, tol_rel), levi_data(alg, alpha).ker_alpha, tol_rel);

  // cross-check against the minor-map kernel before certifying anything
  const auto [numeric, numeric_smooth] = tangent_numeric(x, tol_rel);
  if (!numeric_smooth || !subspace_equal(base, numeric, 1e-7)) {
    throw Error("nilpotent_witness_sl3: closed-form and numeric tangents disagree");
  }

  const Subspace shift_line = span(alg.dim(), {sys.shift().coordinates()});
  const Subspace swept = subspace_sum(base, shift_line, tol_rel);
  const bool smooth = swept.dim() == alg.dim() - 2;
  return CriticalSample{x, NilpotentWitnessSl3{alpha}, smooth ? swept : base, smooth,
                        TangentSource::ClosedForm};
}

RankReport orbit_restricted_rank(const ShiftSystem& sys, const Element& x, double tol_rel) {
  const Subspace orbit = orbit_tangent(x, tol_rel);
  const CMatrix restricted = system_jacobian(sys, x) * orbit.basis();
  return svd_rank(restricted, tol_rel);
}

}  // namespace argshift
