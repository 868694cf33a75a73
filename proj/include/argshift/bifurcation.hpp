#pragma once

#include <optional>
#include <string>

#include "argshift/strata.hpp"

namespace argshift {

enum class CodimVerdict { CodimOneCertified, CodimTwoConsistent, Inconclusive };

const char* to_string(CodimVerdict verdict);

/// Reproduction and measurement data for one drawn critical sample.
struct SampleOutcome {
  bool from_nilpotent_witness = false;
  Root alpha;
  CVector h_diag;  // empty for the nilpotent witness
  std::uint64_t conjugator_seed = 0;
  Complex t = 0.0;
  bool smooth = false;
  int restricted_rank = -1;                // -1 when not smooth
  std::vector<double> singular_values;     // full spectrum for auditability
};

/// Aggregated verdict on the codimension of the set of critical values.
/// CodimOneCertified records a smooth sample of restricted rank b-1;
/// CodimTwoConsistent is only issued where the sampled parametrization covers
/// the critical set exactly (sl_2, where the singular locus is the origin).
struct CodimCertificate {
  int n = 0;
  std::string shift_description;
  ShiftKind kind = ShiftKind::NonNilpotent;
  int b = 0;
  int samples_used = 0;
  int max_restricted_rank = -1;
  CodimVerdict verdict = CodimVerdict::Inconclusive;
  std::optional<SampleOutcome> witness;  // the verdict-carrying sample
  std::vector<SampleOutcome> discarded;  // failed transversality, with repro data
};

/// Rank of the system Jacobian restricted to the sample's tangent space.
/// Throws NotSmoothError unless the sample is smooth-certified.
RankReport restricted_rank(const ShiftSystem& sys, const CriticalSample& sample,
                           double tol_rel = kDefaultRankTol);

/// Draws `sample_budget` samples round-robin over the simple-root strata
/// (preceded by the sl_3 nilpotent witness when applicable), evaluates
/// restricted ranks, and aggregates the verdict. Per-sample seeds derive from
/// the stream, so the certificate is identical for identical seeds regardless
/// of thread count.
CodimCertificate certify_codim(const ShiftSystem& sys, int sample_budget, Rng& rng,
                               double tol_rel = kDefaultRankTol, int threads = 1);

/// For nilpotent shifts on sl_2 the critical set is the line C a and the
/// system vanishes on it identically; returns the largest value norm seen over
/// `sample_count` points of that line. Throws WrongAlgebraError /
/// WrongShiftKindError on other inputs.
double singleton_max_deviation_sl2(const ShiftSystem& sys, int sample_count, Rng& rng);

/// How a shift element is specified from the outside.
struct ShiftSpec {
  enum class Mode { Nilpotent, Generic, ExplicitDiag };
  Mode mode = Mode::Generic;
  std::vector<double> diag;  // ExplicitDiag only; re-centred to trace zero

  std::string describe() const;
};

/// Builds the shift: the principal nilpotent plus the requested diagonal part
/// (zero for Nilpotent; for Generic the integer diagonal n-1, n-3, ..., 1-n,
/// which is traceless with every simple-root value nonzero).
Element build_shift(const Algebra& algebra, const ShiftSpec& spec);

/// One pass/fail line of the verification suite.
struct Assertion {
  std::string name;
  std::string anchor;    // stable claim identifier
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct VerificationReport {
  int n = 0;
  ShiftSpec shift_spec;
  ShiftKind kind = ShiftKind::NonNilpotent;
  CMatrix shift_matrix;
  std::vector<Assertion> assertions;
  CodimCertificate certificate;
  bool all_pass = false;
};

/// Runs the full verification suite for sl_n with the given shift: subregular
/// adjoint-quotient ranks, invariant-gradient identities, orbit-restricted
/// ranks, gradient containment on the Cartan, the Levi intersection, Poisson
/// commutativity, restricted ranks on critical samples, and the codimension
/// certificate.
VerificationReport verify_theorem(int n, const ShiftSpec& spec, int budget,
                                  std::uint64_t seed, double tol_rel = kDefaultRankTol,
                                  int threads = 1);

}  // namespace argshift
