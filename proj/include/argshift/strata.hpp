#pragma once

#include <variant>

#include "argshift/shift_system.hpp"

namespace argshift {

enum class TangentSource { ClosedForm, Numeric };

/// Reproduction data for a sampled subregular semisimple critical point
/// x = Ad_g(h) + t a.
struct SubregWitness {
  Root alpha;
  Element h;  // diagonal point of ker(alpha)°
  std::uint64_t conjugator_seed = 0;
  Complex t = 0.0;
};

/// The closed-form nilpotent witness of sl_3 (x = e_alpha).
struct NilpotentWitnessSl3 {
  Root alpha;
};

/// A sampled point of the critical set g_sing + C a, together with its
/// tangent space and a smoothness certificate. tangent has dimension
/// dim - 2 exactly when smooth_certified.
struct CriticalSample {
  Element x;
  std::variant<SubregWitness, NilpotentWitnessSl3> witness;
  Subspace tangent;
  bool smooth_certified = false;
  TangentSource tangent_source = TangentSource::ClosedForm;
};

/// Tangent space of the singular locus at a subregular semisimple point: the
/// trace-form complement of the derived algebra of the centralizer. Has
/// codimension three. Throws NotSubregularError / NotSemisimpleError.
Subspace tangent_subreg_ss(const Element& x, double tol_rel = kDefaultRankTol);

/// Tangent space of the singular locus as the kernel of the minor-map
/// Jacobian, with a smoothness flag (kernel dimension == dim - 3). Requires
/// max |singular_minors(y)| <= on_locus_tol. The closed form above is the
/// independent cross-check for this construction.
std::pair<Subspace, bool> tangent_numeric(const Element& y,
                                          double tol_rel = kDefaultRankTol,
                                          double on_locus_tol = 1e-8);

/// Deterministic core of the subregular sampler: x = Ad_g(h) + t a with
/// tangent Ad_g(T_h) + C a; certifies smoothness via the transversality test
/// dim(sum) == dim - 2. Failed samples come back with smooth_certified false
/// (reported, not fatal).
CriticalSample make_critical_sample(const ShiftSystem& sys, Root alpha, const Element& h,
                                    const Conjugator& conj, Complex t,
                                    double tol_rel = kDefaultRankTol);

/// Random sample on the alpha stratum: draws h from ker(alpha)°, a fresh
/// conjugator seed, and t uniform on the unit disc.
CriticalSample sample_critical(const ShiftSystem& sys, Root alpha, Rng& rng,
                               double tol_rel = kDefaultRankTol);

/// The nilpotent smooth-point witness of sl_3: x = e_alpha with closed-form
/// tangent [g, x] + z(l_alpha) + C a, cross-checked against tangent_numeric.
/// Throws WrongAlgebraError unless n = 3, WrongShiftKindError unless the
/// system's shift is nilpotent.
CriticalSample nilpotent_witness_sl3(const ShiftSystem& sys, double tol_rel = kDefaultRankTol);

/// Rank of the system Jacobian restricted to the orbit tangent [g, x].
RankReport orbit_restricted_rank(const ShiftSystem& sys, const Element& x,
                                 double tol_rel = kDefaultRankTol);

/// Span of [g, x] (the tangent space of the adjoint orbit through x).
Subspace orbit_tangent(const Element& x, double tol_rel = kDefaultRankTol);

}  // namespace argshift
