#include "argshift/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <mutex>
#include <thread>

namespace argshift {

const char* to_string(CodimVerdict verdict) {
  switch (verdict) {
    case CodimVerdict::CodimOneCertified: return "CodimOneCertified";
    case CodimVerdict::CodimTwoConsistent: return "CodimTwoConsistent";
    case CodimVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::string str_printf(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

Element random_regular_diagonal(const Algebra& alg, Rng& rng) {
  const int n = alg.n();
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<int> value(n);
    for (int k = 0; k < n; ++k) value[k] = rng.uniform_int(-5, 5);
    bool distinct = true;
    for (int p = 0; p < n && distinct; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (value[p] == value[q]) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;
    double mean = 0.0;
    for (int v : value) mean += v;
    mean /= n;
    CVector diag(n);
    for (int k = 0; k < n; ++k) diag(k) = Complex(value[k] - mean, 0.0);
    return diagonal_element(alg, diag);
  }
  throw SamplerExhaustedError("random_regular_diagonal: retry budget exhausted");
}

Element random_element(const Algebra& alg, Rng& rng) {
  CVector coords(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) coords(k) = rng.complex_normal();
  return Element(alg, alg.matrix_from(coords));
}

Element random_real_cartan(const Algebra& alg, Rng& rng) {
  const int n = alg.n();
  CVector diag(n);
  double mean = 0.0;
  for (int k = 0; k < n; ++k) {
    diag(k) = rng.uniform(-2.0, 2.0);
    mean += diag(k).real();
  }
  mean /= n;
  for (int k = 0; k < n; ++k) diag(k) -= mean;
  return diagonal_element(alg, diag);
}

SampleOutcome evaluate_sample(const ShiftSystem& sys, const CriticalSample& sample,
                              double tol_rel) {
  SampleOutcome outcome;
  if (const auto* subreg = std::get_if<SubregWitness>(&sample.witness)) {
    outcome.alpha = subreg->alpha;
    outcome.h_diag = subreg->h.matrix().diagonal();
    outcome.conjugator_seed = subreg->conjugator_seed;
    outcome.t = subreg->t;
  } else {
    outcome.from_nilpotent_witness = true;
    outcome.alpha = std::get<NilpotentWitnessSl3>(sample.witness).alpha;
  }
  outcome.smooth = sample.smooth_certified;
  if (sample.smooth_certified) {
    const RankReport report = restricted_rank(sys, sample, tol_rel);
    outcome.restricted_rank = report.rank;
    outcome.singular_values = report.singular_values;
    if (outcome.restricted_rank > sys.algebra().b() - 1) {
      throw Error("certify_codim: restricted rank exceeded b-1 (tolerance breakdown)");
    }
  }
  return outcome;
}

void run_indexed(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int workers = std::min(threads, count);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int k = next.fetch_add(1);
        if (k >= count) return;
        try {
          body(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string describe_shift_element(const Element& a) {
  const int n = a.algebra().n();
  CMatrix off = a.matrix();
  for (int k = 0; k < n; ++k) off(k, k) = 0.0;
  CMatrix xi = CMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) xi(k + 1, k) = 1.0;
  std::string text;
  if ((off - xi).norm() < 1e-12) {
    text = "xi + diag(";
    for (int k = 0; k < n; ++k) {
      if (k > 0) text += ",";
      const Complex d = a.matrix()(k, k);
      if (std::abs(d.imag()) > 1e-12) {
        text += str_printf("%.6g%+.6gi", d.real(), d.imag());
      } else {
        text += str_printf("%.6g", d.real());
      }
    }
    text += ")";
  } else {
    text = "custom regular element";
  }
  return text;
}

}  // namespace

RankReport restricted_rank(const ShiftSystem& sys, const CriticalSample& sample,
                           double tol_rel) {
  if (!sample.smooth_certified) {
    throw NotSmoothError("restricted_rank: sample is not smooth-certified");
  }
  const CMatrix restricted = system_jacobian(sys, sample.x) * sample.tangent.basis();
  return svd_rank(restricted, tol_rel);
}

CodimCertificate certify_codim(const ShiftSystem& sys, int sample_budget, Rng& rng,
                               double tol_rel, int threads) {
  const Algebra& alg = sys.algebra();
  CodimCertificate cert;
  cert.n = alg.n();
  cert.shift_description = describe_shift_element(sys.shift());
  cert.kind = sys.kind();
  cert.b = alg.b();

  const bool use_nilpotent_witness = alg.n() == 3 && sys.kind() == ShiftKind::Nilpotent;
  const auto& simple = alg.simple_roots();

  // per-sample seeds are drawn up front so results do not depend on thread
  // interleaving; the reduction below is in sample-index order
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(sample_budget));
  for (auto& s : seeds) s = rng.next_u64();

  const int total = sample_budget + (use_nilpotent_witness ? 1 : 0);
  std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(total));
  run_indexed(total, threads, [&](int k) {
    if (use_nilpotent_witness && k == 0) {
      outcomes[0] = evaluate_sample(sys, nilpotent_witness_sl3(sys, tol_rel), tol_rel);
      return;
    }
    const int draw = use_nilpotent_witness ? k - 1 : k;
    Rng stream(seeds[static_cast<std::size_t>(draw)]);
    const Root alpha = simple[static_cast<std::size_t>(draw) % simple.size()];
    outcomes[static_cast<std::size_t>(k)] =
        evaluate_sample(sys, sample_critical(sys, alpha, stream, tol_rel), tol_rel);
  });

  cert.samples_used = total;
  int first_full = -1;
  for (int k = 0; k < total; ++k) {
    const SampleOutcome& o = outcomes[static_cast<std::size_t>(k)];
    if (!o.smooth) {
      cert.discarded.push_back(o);
      continue;
    }
    cert.max_restricted_rank = std::max(cert.max_restricted_rank, o.restricted_rank);
    if (first_full < 0 && o.restricted_rank == alg.b() - 1) first_full = k;
    if (!cert.witness || o.restricted_rank > cert.witness->restricted_rank) cert.witness = o;
  }
  if (first_full >= 0) {
    cert.verdict = CodimVerdict::CodimOneCertified;
    cert.witness = outcomes[static_cast<std::size_t>(first_full)];
  } else if (alg.n() == 2 && cert.max_restricted_rank >= 0 &&
             cert.max_restricted_rank <= alg.b() - 2) {
    // coverage of the critical set by the sampled line is exact in sl_2
    cert.verdict = CodimVerdict::CodimTwoConsistent;
  } else {
    cert.verdict = CodimVerdict::Inconclusive;
  }
  return cert;
}

double singleton_max_deviation_sl2(const ShiftSystem& sys, int sample_count, Rng& rng) {
  if (sys.algebra().n() != 2) {
    throw WrongAlgebraError("singleton_max_deviation_sl2: only defined for sl_2");
  }
  if (sys.kind() != ShiftKind::Nilpotent) {
    throw WrongShiftKindError("singleton_max_deviation_sl2: shift must be nilpotent");
  }
  double worst = 0.0;
  for (int k = 0; k < sample_count; ++k) {
    const Complex t = rng.unit_disc();
    const CVector value = eval_system(sys, sys.shift() * t);
    worst = std::max(worst, value.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::string ShiftSpec::describe() const {
  switch (mode) {
    case Mode::Nilpotent: return "nilpotent";
    case Mode::Generic: return "generic";
    case Mode::ExplicitDiag: {
      std::string text = "explicit(";
      for (std::size_t k = 0; k < diag.size(); ++k) {
        if (k > 0) text += ",";
        text += str_printf("%.6g", diag[k]);
      }
      return text + ")";
    }
  }
  return "?";
}

Element build_shift(const Algebra& algebra, const ShiftSpec& spec) {
  const int n = algebra.n();
  CVector diag = CVector::Zero(n);
  switch (spec.mode) {
    case ShiftSpec::Mode::Nilpotent:
      break;
    case ShiftSpec::Mode::Generic:
      // integer diagonal n-1, n-3, ..., 1-n: traceless, every simple-root
      // value equal to 2
      for (int k = 0; k < n; ++k) diag(k) = Complex(n - 1 - 2 * k, 0.0);
      break;
    case ShiftSpec::Mode::ExplicitDiag: {
      if (static_cast<int>(spec.diag.size()) != n) {
        throw DimensionMismatchError("build_shift: explicit diagonal has wrong length");
      }
      double mean = 0.0;
      for (double d : spec.diag) mean += d;
      mean /= n;
      for (int k = 0; k < n; ++k) diag(k) = Complex(spec.diag[static_cast<std::size_t>(k)] - mean, 0.0);
      break;
    }
  }
  return regular_nilpotent(algebra) + diagonal_element(algebra, diag);
}

namespace {

struct SuiteContext {
  const Algebra& alg;
  const ShiftSystem& sys;
  const Element& shift_diag_part;  // the h-part of the shift
  int budget;
  std::uint64_t seed;
  double tol;
  int threads;
  std::vector<Assertion>* out;
};

void add(SuiteContext& ctx, Assertion a) { ctx.out->push_back(std::move(a)); }

void assert_subregular_chi_rank(SuiteContext& ctx) {
  const int expected = ctx.alg.rank() - 1;
  int good = 0;
  int worst = -1;
  for (int k = 0; k < ctx.budget; ++k) {
    Rng stream(derive_seed(ctx.seed, {1, static_cast<std::uint64_t>(k)}));
    const Root alpha =
        ctx.alg.simple_roots()[static_cast<std::size_t>(k) % ctx.alg.simple_roots().size()];
    const Element h = sample_ker_alpha_circ(ctx.alg, alpha, stream);
    const Conjugator conj = random_conjugator(ctx.alg, stream.next_u64());
    const int rank = dchi_rank(conj.apply(h), ctx.tol).rank;
    if (rank == expected) {
      ++good;
    } else {
      worst = rank;
    }
  }
  Assertion a;
  a.name = "chi-rank-subregular";
  a.anchor = "rank(dchi)=rank-1 at subregular semisimple points";
  a.expected = str_printf("rank %d at %d points", expected, ctx.budget);
  a.measured = good == ctx.budget ? str_printf("%d/%d at rank %d", good, ctx.budget, expected)
                                  : str_printf("%d/%d (saw rank %d)", good, ctx.budget, worst);
  a.pass = good == ctx.budget;
  add(ctx, std::move(a));
}

void assert_invariant_gradients_centre(SuiteContext& ctx) {
  double worst_angle = 0.0;
  int good = 0;
  for (int k = 0; k < ctx.budget; ++k) {
    Rng stream(derive_seed(ctx.seed, {2, static_cast<std::uint64_t>(k)}));
    Element point = (k % 2 == 0)
                        ? random_regular_diagonal(ctx.alg, stream)
                        : sample_ker_alpha_circ(
                              ctx.alg,
                              ctx.alg.simple_roots()[static_cast<std::size_t>(k / 2) %
                                                     ctx.alg.simple_roots().size()],
                              stream);
    const Conjugator conj = random_conjugator(ctx.alg, stream.next_u64());
    point = conj.apply(point);
    const Subspace gradients = nabla_invariants(point, ctx.tol);
    const Subspace centre = subalgebra_center(ctx.alg, centralizer(point, ctx.tol), ctx.tol);
    if (gradients.dim() == centre.dim()) {
      const double angle = max_principal_angle(gradients, centre);
      worst_angle = std::max(worst_angle, angle);
      if (angle < 1e-6) ++good;
    }
  }
  Assertion a;
  a.name = "invariant-gradient-span-is-centre";
  a.anchor = "span of invariant gradients = centre of centralizer (semisimple)";
  a.expected = str_printf("equal subspaces at %d points, angle < 1e-6", ctx.budget);
  a.measured = str_printf("%d/%d equal, max angle %.3g", good, ctx.budget, worst_angle);
  a.pass = good == ctx.budget;
  add(ctx, std::move(a));
}

void assert_orbit_rank(SuiteContext& ctx) {
  const int expected = ctx.alg.u() - 1;
  const int per_root = std::min(ctx.budget, 10);
  int total = 0;
  int good = 0;
  int worst = -1;
  for (std::size_t s = 0; s < ctx.alg.simple_roots().size(); ++s) {
    const Root alpha = ctx.alg.simple_roots()[s];
    if (std::abs(root_value(alpha, ctx.shift_diag_part)) < 1e-12) continue;
    for (int k = 0; k < per_root; ++k) {
      Rng stream(derive_seed(ctx.seed, {3, s, static_cast<std::uint64_t>(k)}));
      const Element h = sample_ker_alpha_circ(ctx.alg, alpha, stream);
      const int rank = orbit_restricted_rank(ctx.sys, h, ctx.tol).rank;
      ++total;
      if (rank == expected) {
        ++good;
      } else {
        worst = rank;
      }
    }
  }
  Assertion a;
  a.name = "orbit-restricted-rank";
  a.anchor = "system restricted to the adjoint orbit has rank u-1 on ker(alpha)°";
  a.expected = str_printf("rank %d at %d points", expected, total);
  a.measured = good == total ? str_printf("%d/%d at rank %d", good, total, expected)
                             : str_printf("%d/%d (saw rank %d)", good, total, worst);
  a.pass = good == total;
  add(ctx, std::move(a));
}

void assert_gradients_in_negative_borel(SuiteContext& ctx) {
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rng stream(derive_seed(ctx.seed, {4, static_cast<std::uint64_t>(k)}));
    const Element x = random_real_cartan(ctx.alg, stream);
    for (const Element& grad : system_gradients(ctx.sys, x)) {
      const double norm = grad.norm();
      if (norm < 1e-300) continue;
      worst = std::max(worst, strict_upper_mass(grad) / norm);
    }
  }
  Assertion a;
  a.name = "gradients-in-negative-borel";
  a.anchor = "generator gradients on the Cartan are lower triangular";
  a.expected = "strict upper mass <= 1e-10 of gradient norm, 10 Cartan points";
  a.measured = str_printf("max relative upper mass %.3g", worst);
  a.pass = worst <= 1e-10;
  add(ctx, std::move(a));
}

void assert_levi_intersection(SuiteContext& ctx) {
  const int per_root = std::min(ctx.budget, 5);
  int total = 0;
  int good = 0;
  double worst_angle = 0.0;
  int bad_dim = -1;
  for (std::size_t s = 0; s < ctx.alg.simple_roots().size(); ++s) {
    const Root alpha = ctx.alg.simple_roots()[s];
    const Complex alpha_of_y = root_value(alpha, ctx.shift_diag_part);
    if (std::abs(alpha_of_y) < 1e-12) continue;
    const LeviData levi = levi_data(ctx.alg, alpha);
    // the expected direction: e_{-alpha} + c h_alpha with c = alpha(y)/2
    const Element direction = levi.e_minus + (alpha_of_y / 2.0) * levi.h;
    const Subspace line = span(ctx.alg.dim(), {direction.coordinates()});
    for (int k = 0; k < per_root; ++k) {
      Rng stream(derive_seed(ctx.seed, {5, s, static_cast<std::uint64_t>(k)}));
      const Element h = sample_ker_alpha_circ(ctx.alg, alpha, stream);
      const Subspace meet =
          subspace_intersect(gradient_span(ctx.sys, h, ctx.tol), levi.levi_comm);
      ++total;
      if (meet.dim() != 1) {
        bad_dim = meet.dim();
        continue;
      }
      const double angle = max_principal_angle(meet, line);
      worst_angle = std::max(worst_angle, angle);
      if (angle < 1e-6) ++good;
    }
  }
  Assertion a;
  a.name = "levi-intersection-direction";
  a.anchor = "gradient span meets the Levi derived algebra in the line of e_-+c*h";
  a.expected = str_printf("dim 1 and direction angle < 1e-6 at %d points", total);
  a.measured = bad_dim >= 0
                   ? str_printf("%d/%d (saw dim %d)", good, total, bad_dim)
                   : str_printf("%d/%d, max angle %.3g", good, total, worst_angle);
  a.pass = good == total;
  add(ctx, std::move(a));
}

void assert_poisson_commutes(SuiteContext& ctx) {
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rng stream(derive_seed(ctx.seed, {6, static_cast<std::uint64_t>(k)}));
    const Element x = random_element(ctx.alg, stream);
    const auto gradients = system_gradients(ctx.sys, x);
    for (std::size_t p = 0; p < gradients.size(); ++p) {
      for (std::size_t q = p + 1; q < gradients.size(); ++q) {
        const double scale =
            std::max(1.0, x.norm() * gradients[p].norm() * gradients[q].norm());
        worst = std::max(worst,
                         std::abs(poisson_bracket(x, gradients[p], gradients[q])) / scale);
      }
    }
  }
  Assertion a;
  a.name = "poisson-commutativity";
  a.anchor = "all generator pairs Poisson-commute";
  a.expected = "normalized bracket <= 1e-8 for all pairs at 10 random points";
  a.measured = str_printf("max normalized bracket %.3g", worst);
  a.pass = worst <= 1e-8;
  add(ctx, std::move(a));
}

void assert_restricted_rank_semisimple(SuiteContext& ctx) {
  const int expected = ctx.alg.b() - 1;
  int total = 0;
  int good = 0;
  int not_smooth = 0;
  int worst = -1;
  for (std::size_t s = 0; s < ctx.alg.simple_roots().size(); ++s) {
    // the pointwise rank statement assumes the stratum root does not vanish
    // on the diagonal part of the shift
    if (std::abs(root_value(ctx.alg.simple_roots()[s], ctx.shift_diag_part)) < 1e-12) continue;
    for (int k = 0; k < ctx.budget; ++k) {
      Rng stream(derive_seed(ctx.seed, {7, s, static_cast<std::uint64_t>(k)}));
      const CriticalSample sample =
          sample_critical(ctx.sys, ctx.alg.simple_roots()[s], stream, ctx.tol);
      ++total;
      if (!sample.smooth_certified) {
        ++not_smooth;
        continue;
      }
      const int rank = restricted_rank(ctx.sys, sample, ctx.tol).rank;
      if (rank == expected) {
        ++good;
      } else {
        worst = rank;
      }
    }
  }
  Assertion a;
  a.name = "restricted-rank-semisimple";
  a.anchor = "restricted rank b-1 at every smooth subregular semisimple sample";
  a.expected = str_printf("rank %d at %d samples (all smooth)", expected, total);
  a.measured = str_printf("%d/%d at rank %d, %d transversality failures%s", good, total,
                          expected, not_smooth,
                          worst >= 0 ? str_printf(" (saw rank %d)", worst).c_str() : "");
  a.pass = good == total && not_smooth == 0;
  add(ctx, std::move(a));
}

void assert_nilpotent_witness(SuiteContext& ctx) {
  const CriticalSample sample = nilpotent_witness_sl3(ctx.sys, ctx.tol);
  const RankReport report =
      sample.smooth_certified ? restricted_rank(ctx.sys, sample, ctx.tol) : RankReport{};
  const int kernel_dim = sample.tangent.dim() - report.rank;
  Assertion a;
  a.name = "restricted-rank-nilpotent-witness";
  a.anchor = "restricted rank 4 with kernel dim 2 at the sl_3 nilpotent witness";
  a.expected = "smooth, rank 4, kernel 2, tangent dim 6";
  a.measured = str_printf("smooth=%d rank=%d kernel=%d tangent=%d", sample.smooth_certified,
                          report.rank, kernel_dim, sample.tangent.dim());
  a.pass = sample.smooth_certified && report.rank == 4 && kernel_dim == 2 &&
           sample.tangent.dim() == 6;
  add(ctx, std::move(a));
}

void assert_singleton_sl2(SuiteContext& ctx) {
  Rng stream(derive_seed(ctx.seed, {8}));
  const int count = std::max(ctx.budget, 100);
  const double deviation = singleton_max_deviation_sl2(ctx.sys, count, stream);
  Assertion a;
  a.name = "singleton-image";
  a.anchor = "the sl_2 nilpotent system vanishes on its critical line";
  a.expected = str_printf("max value norm <= 1e-10 over %d points", count);
  a.measured = str_printf("max value norm %.3g", deviation);
  a.pass = deviation <= 1e-10;
  add(ctx, std::move(a));

  int good = 0;
  int worst = -1;
  for (int k = 0; k < ctx.budget; ++k) {
    Rng sample_stream(derive_seed(ctx.seed, {9, static_cast<std::uint64_t>(k)}));
    const CriticalSample sample =
        sample_critical(ctx.sys, ctx.alg.simple_roots()[0], sample_stream, ctx.tol);
    if (!sample.smooth_certified) continue;
    const int rank = restricted_rank(ctx.sys, sample, ctx.tol).rank;
    if (rank == 0) {
      ++good;
    } else {
      worst = rank;
    }
  }
  Assertion b;
  b.name = "restricted-rank-on-line";
  b.anchor = "restricted rank 0 = b-2 on the sl_2 nilpotent critical line";
  b.expected = str_printf("rank 0 at %d samples", ctx.budget);
  b.measured = good == ctx.budget
                   ? str_printf("%d/%d at rank 0", good, ctx.budget)
                   : str_printf("%d/%d (saw rank %d)", good, ctx.budget, worst);
  b.pass = good == ctx.budget;
  add(ctx, std::move(b));
}

void assert_restricted_rank_exploratory(SuiteContext& ctx) {
  // nilpotent shifts beyond sl_3 carry no closed-form guarantee; ranks are
  // reported without an expected value
  std::vector<int> histogram(static_cast<std::size_t>(ctx.alg.b()), 0);
  int not_smooth = 0;
  for (std::size_t s = 0; s < ctx.alg.simple_roots().size(); ++s) {
    for (int k = 0; k < ctx.budget; ++k) {
      Rng stream(derive_seed(ctx.seed, {10, s, static_cast<std::uint64_t>(k)}));
      const CriticalSample sample =
          sample_critical(ctx.sys, ctx.alg.simple_roots()[s], stream, ctx.tol);
      if (!sample.smooth_certified) {
        ++not_smooth;
        continue;
      }
      const int rank = restricted_rank(ctx.sys, sample, ctx.tol).rank;
      if (rank >= 0 && rank < ctx.alg.b()) ++histogram[static_cast<std::size_t>(rank)];
    }
  }
  std::string seen;
  for (std::size_t r = 0; r < histogram.size(); ++r) {
    if (histogram[r] > 0) {
      if (!seen.empty()) seen += ", ";
      seen += str_printf("rank %zu x%d", r, histogram[r]);
    }
  }
  Assertion a;
  a.name = "restricted-rank-exploratory";
  a.anchor = "observed restricted ranks for a nilpotent shift beyond sl_3 (reported only)";
  a.expected = "reported only";
  a.measured = str_printf("%s; %d transversality failures", seen.c_str(), not_smooth);
  a.pass = true;
  add(ctx, std::move(a));
}

void assert_coordinatization_order(SuiteContext& ctx) {
  // our lexicographic entries against the classic sl_3 tuple
  // (tr y^2, tr y^3, 2 tr(a y), 3 tr(a^2 y), 3 tr(a y^2)): index map 0,2,1,4,3
  const int perm[5] = {0, 2, 1, 4, 3};
  const Element& a_el = ctx.sys.shift();
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    Rng stream(derive_seed(ctx.seed, {11, static_cast<std::uint64_t>(k)}));
    const Element y = random_element(ctx.alg, stream);
    const CVector ours = eval_system(ctx.sys, y);
    CVector classic(5);
    classic(0) = eval_invariant(2, y);
    classic(1) = eval_invariant(3, y);
    classic(2) = 2.0 * (a_el.matrix() * y.matrix()).trace();
    classic(3) = 3.0 * (a_el.matrix() * a_el.matrix() * y.matrix()).trace();
    classic(4) = 3.0 * (a_el.matrix() * y.matrix() * y.matrix()).trace();
    for (int c = 0; c < 5; ++c) {
      const double err = std::abs(ours(c) - classic(perm[c])) /
                         std::max(1.0, std::abs(classic(perm[c])));
      worst = std::max(worst, err);
    }
  }
  Assertion a;
  a.name = "coordinatization-order";
  a.anchor = "generator tuple matches the classic sl_3 ordering up to the fixed permutation";
  a.expected = "permutation (0 2 1 4 3), relative error <= 1e-12";
  a.measured = str_printf("permutation (0 2 1 4 3), max relative error %.3g", worst);
  a.pass = worst <= 1e-12;
  add(ctx, std::move(a));
}

}  // namespace

VerificationReport verify_theorem(int n, const ShiftSpec& spec, int budget,
                                  std::uint64_t seed, double tol_rel, int threads) {
  const Algebra alg(n);
  const Element shift = build_shift(alg, spec);
  const ShiftSystem sys(shift, tol_rel);

  VerificationReport report;
  report.n = n;
  report.shift_spec = spec;
  report.kind = sys.kind();
  report.shift_matrix = shift.matrix();

  // the h-part of the shift (all shifts here are xi + diagonal)
  const Element diag_part = diagonal_element(alg, CVector(shift.matrix().diagonal()));

  SuiteContext ctx{alg, sys, diag_part, budget, seed, tol_rel, threads, &report.assertions};

  {
    Assertion a;
    a.name = "algebra-consistency";
    a.anchor = "b = (dim+rank)/2 and the invariant degrees sum to b";
    int degree_sum = 0;
    for (int d : alg.degrees()) degree_sum += d;
    a.expected = str_printf("b %d, degree sum %d", (alg.dim() + alg.rank()) / 2, alg.b());
    a.measured = str_printf("dim %d rank %d b %d u %d degree sum %d", alg.dim(), alg.rank(),
                            alg.b(), alg.u(), degree_sum);
    a.pass = alg.b() == (alg.dim() + alg.rank()) / 2 && degree_sum == alg.b() &&
             alg.u() == alg.b() - alg.rank();
    add(ctx, std::move(a));
  }

  assert_subregular_chi_rank(ctx);
  assert_invariant_gradients_centre(ctx);
  assert_gradients_in_negative_borel(ctx);
  assert_poisson_commutes(ctx);

  if (sys.kind() == ShiftKind::NonNilpotent) {
    assert_orbit_rank(ctx);
    assert_levi_intersection(ctx);
    assert_restricted_rank_semisimple(ctx);
  } else if (n == 2) {
    assert_singleton_sl2(ctx);
  } else if (n == 3) {
    assert_coordinatization_order(ctx);
    assert_nilpotent_witness(ctx);
  } else {
    assert_restricted_rank_exploratory(ctx);
  }

  Rng cert_stream(derive_seed(seed, {12}));
  report.certificate = certify_codim(sys, budget, cert_stream, tol_rel, threads);

  {
    Assertion a;
    a.name = "certificate-verdict";
    const char* expected = nullptr;
    if (sys.kind() == ShiftKind::NonNilpotent) {
      a.anchor = "non-nilpotent shifts have codimension-one critical values";
      expected = "CodimOneCertified";
    } else if (n == 2) {
      a.anchor = "the sl_2 nilpotent critical image is a point (codimension two)";
      expected = "CodimTwoConsistent";
    } else if (n == 3) {
      a.anchor = "the sl_3 nilpotent critical image has codimension one";
      expected = "CodimOneCertified";
    } else {
      a.anchor = "nilpotent shifts beyond sl_3: verdict reported only";
      expected = nullptr;
    }
    a.expected = expected ? expected : "reported only";
    a.measured = str_printf("%s, max restricted rank %d (b-1 = %d)",
                            to_string(report.certificate.verdict),
                            report.certificate.max_restricted_rank, alg.b() - 1);
    a.pass = expected ? std::string(expected) == to_string(report.certificate.verdict) : true;
    add(ctx, std::move(a));
  }

  report.all_pass = std::all_of(report.assertions.begin(), report.assertions.end(),
                                [](const Assertion& a) { return a.pass; });
  return report;
}

}  // namespace argshift
