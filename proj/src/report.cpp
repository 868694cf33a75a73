#include "argshift/report.hpp"

#include <cstdio>

#include "argshift/version.hpp"

namespace argshift {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_to_json(const SampleOutcome& witness) {
  Json j;
  j["alpha"] = Json::array({witness.alpha.i + 1, witness.alpha.j + 1});
  if (witness.from_nilpotent_witness) {
    j["h_diag"] = nullptr;
    j["conjugator_seed"] = nullptr;
    j["t"] = nullptr;
  } else {
    Json diag = Json::array();
    for (Eigen::Index k = 0; k < witness.h_diag.size(); ++k) {
      diag.push_back(complex_to_json(witness.h_diag(k)));
    }
    j["h_diag"] = std::move(diag);
    j["conjugator_seed"] = witness.conjugator_seed;
    j["t"] = complex_to_json(witness.t);
  }
  j["restricted_rank"] = witness.restricted_rank;
  j["singular_values"] = witness.singular_values;
  return j;
}

}  // namespace

Json config_to_json(const RunConfig& config) {
  Json j;
  j["command"] = config.command;
  j["n"] = config.n;
  j["shift"] = config.shift.describe();
  if (config.shift.mode == ShiftSpec::Mode::ExplicitDiag) {
    j["diag"] = config.shift.diag;
  } else {
    j["diag"] = nullptr;
  }
  j["samples"] = config.samples;
  j["seed"] = config.seed;
  j["tol"] = config.tol;
  j["threads"] = config.threads;
  j["version"] = ARGSHIFT_VERSION;
  return j;
}

Json algebra_to_json(const Algebra& algebra) {
  Json j;
  j["n"] = algebra.n();
  j["dim"] = algebra.dim();
  j["rank"] = algebra.rank();
  j["b"] = algebra.b();
  j["u"] = algebra.u();
  j["degrees"] = algebra.degrees();
  return j;
}

Json assertion_to_json(const Assertion& assertion) {
  Json j;
  j["name"] = assertion.name;
  j["paper_anchor"] = assertion.anchor;
  j["expected"] = assertion.expected;
  j["measured"] = assertion.measured;
  j["pass"] = assertion.pass;
  return j;
}

Json certificate_to_json(const CodimCertificate& certificate) {
  Json j;
  j["verdict"] = to_string(certificate.verdict);
  j["max_rank"] = certificate.max_restricted_rank;
  j["shift"] = certificate.shift_description;
  j["kind"] = to_string(certificate.kind);
  j["b"] = certificate.b;
  j["samples_used"] = certificate.samples_used;
  j["discarded"] = certificate.discarded.size();
  if (certificate.witness) {
    j["witness"] = witness_to_json(*certificate.witness);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json report_to_json(const RunConfig& config, const VerificationReport& report,
                    std::int64_t timing_ms) {
  Json j;
  j["config"] = config_to_json(config);
  j["algebra"] = algebra_to_json(Algebra(report.n));
  Json shift;
  shift["kind"] = to_string(report.kind);
  shift["matrix"] = matrix_to_json(report.shift_matrix);
  j["shift"] = std::move(shift);
  Json assertions = Json::array();
  for (const Assertion& a : report.assertions) assertions.push_back(assertion_to_json(a));
  j["assertions"] = std::move(assertions);
  j["certificate"] = certificate_to_json(report.certificate);
  j["timing_ms"] = timing_ms;
  return j;
}

Json selfcheck_to_json(const RunConfig& config, const std::vector<Assertion>& checks,
                       std::int64_t timing_ms) {
  Json j;
  j["config"] = config_to_json(config);
  Json assertions = Json::array();
  for (const Assertion& a : checks) assertions.push_back(assertion_to_json(a));
  j["assertions"] = std::move(assertions);
  j["timing_ms"] = timing_ms;
  return j;
}

Json info_to_json(const RunConfig& config, const Algebra& algebra) {
  Json j;
  j["config"] = config_to_json(config);
  j["algebra"] = algebra_to_json(algebra);
  Json labels = Json::array();
  for (int i = 1; i <= algebra.rank(); ++i) {
    for (int j2 = 0; j2 < i + 1; ++j2) labels.push_back(Json::array({i, j2}));
  }
  j["labels"] = std::move(labels);
  return j;
}

std::string render_assertions(const std::vector<Assertion>& assertions) {
  std::string text;
  for (const Assertion& a : assertions) {
    std::string line = "  " + a.name + " ";
    while (line.size() < 42) line += '.';
    line += a.pass ? " pass  " : " FAIL  ";
    line += a.measured;
    text += line + "\n";
  }
  return text;
}

std::string render_report(const VerificationReport& report) {
  const Algebra alg(report.n);
  char head[256];
  std::snprintf(head, sizeof(head),
                "algebra sl(%d): dim %d, rank %d, b %d, u %d\nshift: %s (%s)\n", report.n,
                alg.dim(), alg.rank(), alg.b(), alg.u(), report.shift_spec.describe().c_str(),
                to_string(report.kind));
  std::string text = head;
  text += render_assertions(report.assertions);
  char tail[256];
  std::snprintf(tail, sizeof(tail),
                "certificate: %s (max restricted rank %d, b-1 = %d, samples %d)\n",
                to_string(report.certificate.verdict), report.certificate.max_restricted_rank,
                report.certificate.b - 1, report.certificate.samples_used);
  text += tail;
  if (report.certificate.witness) {
    const SampleOutcome& w = *report.certificate.witness;
    char line[256];
    if (w.from_nilpotent_witness) {
      std::snprintf(line, sizeof(line), "witness: nilpotent witness, alpha (%d,%d), rank %d\n",
                    w.alpha.i + 1, w.alpha.j + 1, w.restricted_rank);
    } else {
      std::snprintf(line, sizeof(line),
                    "witness: alpha (%d,%d), conjugator seed %llu, t (%.6g, %.6g), rank %d\n",
                    w.alpha.i + 1, w.alpha.j + 1,
                    static_cast<unsigned long long>(w.conjugator_seed), w.t.real(), w.t.imag(),
                    w.restricted_rank);
    }
    text += line;
  }
  text += report.all_pass ? "verdict: all assertions passed\n"
                          : "verdict: ASSERTION FAILURES (see above)\n";
  return text;
}

}  // namespace argshift
