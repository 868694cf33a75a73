#include "argshift/shift_system.hpp"

#include <algorithm>
#include <cmath>

#include "argshift/interp.hpp"

namespace argshift {

const char* to_string(ShiftKind kind) {
  return kind == ShiftKind::Nilpotent ? "nilpotent" : "non-nilpotent";
}

namespace {

// interpolation radius balancing the Vandermonde conditioning when x and the
// shift have very different scales
double node_radius(const Element& x, const Element& a) {
  const double nx = x.norm();
  const double na = a.norm();
  if (nx == 0.0 || na == 0.0) return 1.0;
  return std::clamp(nx / na, 1e-3, 1e3);
}

}  // namespace

ShiftSystem::ShiftSystem(Element a, double tol_rel) : shift_(std::move(a)) {
  const ElementClass cls = classify(shift_, tol_rel);
  if (cls.kind != ElementKind::Regular) {
    throw NotRegularError("ShiftSystem: the shift element must be regular");
  }
  const double chi_norm = chi(shift_).norm();
  const double scale = std::max(1.0, std::pow(shift_.norm(), shift_.algebra().n()));
  kind_ = chi_norm <= 1e-10 * scale ? ShiftKind::Nilpotent : ShiftKind::NonNilpotent;
  for (int i = 1; i <= shift_.algebra().rank(); ++i) {
    for (int j = 0; j < i + 1; ++j) labels_.push_back({i, j});
  }
}

int ShiftSystem::label_index(GeneratorLabel label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("ShiftSystem: unknown generator label");
  return static_cast<int>(it - labels_.begin());
}

CVector eval_system(const ShiftSystem& sys, const Element& x) {
  const Algebra& alg = sys.algebra();
  if (!(alg == x.algebra())) throw AlgebraMismatchError("eval_system: algebra mismatch");
  const double radius = node_radius(x, sys.shift());
  CVector value(alg.b());
  int out = 0;
  for (int i = 1; i <= alg.rank(); ++i) {
    const int degree = i + 1;
    const CVector nodes = unit_root_nodes(degree, radius);
    CVector samples(degree + 1);
    for (int m = 0; m <= degree; ++m) {
      samples(m) = eval_invariant(degree, x + nodes(m) * sys.shift());
    }
    const CVector coeffs = lambda_coefficients(nodes, samples);
    for (int j = 0; j < degree; ++j) value(out++) = coeffs(j);
  }
  return value;
}

std::vector<Element> system_gradients(const ShiftSystem& sys, const Element& x) {
  const Algebra& alg = sys.algebra();
  if (!(alg == x.algebra())) throw AlgebraMismatchError("system_gradients: algebra mismatch");
  const double radius = node_radius(x, sys.shift());
  std::vector<Element> gradients;
  gradients.reserve(alg.b());
  for (int i = 1; i <= alg.rank(); ++i) {
    const int degree = i + 1;
    // grad f_i(x + lambda a) has degree d_i - 1 in lambda
    const CVector nodes = unit_root_nodes(degree - 1, radius);
    CMatrix samples(degree, alg.dim());
    for (int m = 0; m < degree; ++m) {
      samples.row(m) = grad_invariant(degree, x + nodes(m) * sys.shift()).coordinates();
    }
    const CMatrix coeffs = lambda_coefficients(nodes, samples);
    for (int j = 0; j < degree; ++j) {
      gradients.push_back(Element(alg, alg.matrix_from(coeffs.row(j).transpose())));
    }
  }
  return gradients;
}

Element system_gradient(const ShiftSystem& sys, GeneratorLabel label, const Element& x) {
  const int index = sys.label_index(label);
  return system_gradients(sys, x)[static_cast<std::size_t>(index)];
}

CMatrix system_jacobian(const ShiftSystem& sys, const Element& x) {
  const Algebra& alg = sys.algebra();
  const auto gradients = system_gradients(sys, x);
  CMatrix jac(alg.b(), alg.dim());
  for (int r = 0; r < alg.b(); ++r) {
    jac.row(r) = (alg.trace_gram() * gradients[static_cast<std::size_t>(r)].coordinates())
                     .transpose();
  }
  return jac;
}

RankReport system_jacobian_rank(const ShiftSystem& sys, const Element& x, double tol_rel) {
  return svd_rank(system_jacobian(sys, x), tol_rel);
}

Subspace gradient_span(const ShiftSystem& sys, const Element& x, double tol_rel) {
  const Algebra& alg = sys.algebra();
  const auto gradients = system_gradients(sys, x);
  CMatrix columns(alg.dim(), alg.b());
  for (int c = 0; c < alg.b(); ++c) {
    columns.col(c) = gradients[static_cast<std::size_t>(c)].coordinates();
  }
  return span_of_columns(columns, tol_rel);
}

Subspace centralizer_span(const ShiftSystem& sys, const Element& x, Rng& rng,
                          int lambda_samples, double tol_rel) {
  const Algebra& alg = sys.algebra();
  if (lambda_samples <= 0) lambda_samples = 2 * alg.b();
  if (lambda_samples < alg.b()) {
    throw Error("centralizer_span: need at least b lambda samples");
  }
  std::vector<Complex> singular_lambdas;
  std::vector<CVector> collected;
  int accepted = 0;
  const int budget = 4 * lambda_samples + 16;
  for (int attempt = 0; attempt < budget && accepted < lambda_samples; ++attempt) {
    const Complex lambda = rng.unit_disc();
    const auto near_singular = [&](const Complex& bad) { return std::abs(lambda - bad) < 1e-6; };
    if (std::any_of(singular_lambdas.begin(), singular_lambdas.end(), near_singular)) continue;
    const Element y = x + lambda * sys.shift();
    bool regular = false;
    try {
      regular = classify(y, tol_rel).kind == ElementKind::Regular;
    } catch (const ClassifierDisagreementError&) {
      regular = false;
    }
    if (!regular) {
      singular_lambdas.push_back(lambda);
      continue;
    }
    const Subspace cent = centralizer(y, tol_rel);
    for (int c = 0; c < cent.dim(); ++c) collected.push_back(cent.basis().col(c));
    ++accepted;
  }
  if (accepted < lambda_samples) {
    throw InsufficientRegularLambdasError(
        "centralizer_span: could not find enough regular parameters");
  }
  return span(alg.dim(), collected, tol_rel);
}

Complex poisson_bracket(const Element& x, const Element& grad_a, const Element& grad_b) {
  return trace_form(x, bracket(grad_a, grad_b));
}

Complex poisson_bracket(const ShiftSystem& sys, GeneratorLabel a, GeneratorLabel b,
                        const Element& x) {
  const auto gradients = system_gradients(sys, x);
  const int ia = sys.label_index(a);
  const int ib = sys.label_index(b);
  return poisson_bracket(x, gradients[static_cast<std::size_t>(ia)],
                         gradients[static_cast<std::size_t>(ib)]);
}

}  // namespace argshift
