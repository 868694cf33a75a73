#pragma once

#include "argshift/bifurcation.hpp"

namespace argshift {

/// The numeric oracle suite: finite-difference gradient checks, subspace
/// complement involutions, interpolation round-trips, Poisson commutativity,
/// and a guard that the configured rank tolerance is attainable in double
/// precision. Verdicts are stable under seed variation.
std::vector<Assertion> run_selfcheck(std::uint64_t seed, double tol_rel);

}  // namespace argshift
