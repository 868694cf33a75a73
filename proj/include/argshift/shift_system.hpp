#pragma once

#include <optional>
#include <vector>

#include "argshift/invariants.hpp"

namespace argshift {

enum class ShiftKind { Nilpotent, NonNilpotent };

const char* to_string(ShiftKind kind);

/// Label (i, j) of a generator: the coefficient of lambda^j in
/// f_i(x + lambda a), where f_i is the invariant of degree d_i = i + 1,
/// i = 1..rank and j = 0..d_i-1. Labels are ordered lexicographically; the
/// j = 0 labels reproduce the plain invariants.
struct GeneratorLabel {
  int i = 1;
  int j = 0;
  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// The shift-of-argument system attached to a regular shift element a: the
/// b = (dim + rank)/2 polynomial generators obtained as lambda-coefficients of
/// the shifted invariants, with evaluation, gradients, Jacobian and Poisson
/// bracket. Immutable after construction and safe to share across threads.
class ShiftSystem {
 public:
  /// Throws NotRegularError unless classify(a) is Regular.
  explicit ShiftSystem(Element a, double tol_rel = kDefaultRankTol);

  const Algebra& algebra() const { return shift_.algebra(); }
  const Element& shift() const { return shift_; }
  ShiftKind kind() const { return kind_; }

  /// All b generator labels in lexicographic order.
  const std::vector<GeneratorLabel>& labels() const { return labels_; }
  int label_index(GeneratorLabel label) const;

 private:
  Element shift_;
  ShiftKind kind_;
  std::vector<GeneratorLabel> labels_;
};

/// Value of the system at x: the b-vector of generator values ordered by the
/// label list. The leading lambda-coefficient f_i(a) is constant in x and
/// discarded.
CVector eval_system(const ShiftSystem& sys, const Element& x);

/// Gradients of all b generators at x, ordered by the label list. The
/// gradient of label (i, j) is the coefficient of lambda^j in
/// grad f_i(x + lambda a).
std::vector<Element> system_gradients(const ShiftSystem& sys, const Element& x);

/// Gradient of a single labelled generator.
Element system_gradient(const ShiftSystem& sys, GeneratorLabel label, const Element& x);

/// Jacobian of the system at x (b x dim): rows pair the generator gradients
/// against the fixed basis through the trace form. Matches finite differences
/// of eval_system.
CMatrix system_jacobian(const ShiftSystem& sys, const Element& x);

RankReport system_jacobian_rank(const ShiftSystem& sys, const Element& x,
                                double tol_rel = kDefaultRankTol);

/// Span of the b generator gradients at x.
Subspace gradient_span(const ShiftSystem& sys, const Element& x,
                       double tol_rel = kDefaultRankTol);

/// Independent construction of the same span: the subspace generated by the
/// centralizers of x + lambda a over random regular lambda in the unit disc.
/// Uses 2b accepted lambdas by default; lambdas within 1e-6 of a detected
/// singular parameter are rejected. Throws InsufficientRegularLambdasError if
/// rejections exhaust the attempt budget.
Subspace centralizer_span(const ShiftSystem& sys, const Element& x, Rng& rng,
                          int lambda_samples = 0, double tol_rel = kDefaultRankTol);

/// Lie-Poisson bracket {f_A, f_B}(x) = <x, [grad f_A, grad f_B]>.
Complex poisson_bracket(const ShiftSystem& sys, GeneratorLabel a, GeneratorLabel b,
                        const Element& x);

/// Same, from precomputed gradients.
Complex poisson_bracket(const Element& x, const Element& grad_a, const Element& grad_b);

}  // namespace argshift
