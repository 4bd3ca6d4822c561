#include "twistordef/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "twistordef/deformation_rep.hpp"
#include "twistordef/invariant_cycle.hpp"
#include "twistordef/moduli.hpp"
#include "twistordef/report.hpp"

namespace twistordef {

namespace {

std::vector<SubgroupDirection> expected_excess_set(int n) {
  std::vector<SubgroupDirection> out{SubgroupDirection::normalize(0, 1)};
  for (int i = 1; i <= n - 1; ++i) out.push_back(SubgroupDirection::normalize(1, i));
  return out;
}

std::string directions_to_string(const std::vector<SubgroupDirection>& ds) {
  std::string out = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? "," : "") + ds[i].to_string();
  return out + "}";
}

int expected_moduli(int n, int i) {
  if (i == 0) return 3 * n - 6;
  if (i == 1 || i == n - 1) return n;
  return n + 2;
}

class Recorder {
 public:
  Recorder(std::vector<VerificationCheck>& out, int n) : out_(out), n_(n) {}
  void operator()(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({std::move(name), n_, passed, std::move(detail)});
  }

 private:
  std::vector<VerificationCheck>& out_;
  int n_;
};

void verify_representation(int n, std::mt19937_64& rng, int samples, Recorder& record) {
  const AssembledRep closed = closed_form_rep(n);

  bool matches = assemble(Configuration::standard(n)) == closed;
  std::string detail;
  for (int s = 0; s < samples && matches; ++s) {
    const Configuration cfg = random_configuration(n, rng);
    if (!(assemble(cfg) == closed)) {
      matches = false;
      detail = "mismatch at " + cfg.to_string();
    }
  }
  record("assemble_matches_closed_form", matches, detail);

  record("total_dimension", closed.dimension() == static_cast<std::size_t>(7 * n - 13),
         std::to_string(closed.dimension()));
  record("rep_dimensions",
         closed.rep1.dimension() == static_cast<std::size_t>(3 * n - 5) &&
             closed.rep2.dimension() == static_cast<std::size_t>(2 * n - 4) &&
             closed.rep3.dimension() == static_cast<std::size_t>(2 * n - 4));

  const Configuration cfg = random_configuration(n, rng);
  const auto gammas = gamma_vectors(cfg);
  bool rank_ok = true;
  try {
    rank_ok = alpha_image(cfg).rows() == 5;
  } catch (const DegenerateConfiguration&) {
    rank_ok = false;
  }
  record("alpha_image_rank", rank_ok, cfg.to_string());
  record("gamma1_is_minus_gamma4", gammas[0] == -gammas[3]);

  const WeightRep total = closed.total();
  record("conjugation_symmetry", negate_rep(total) == total && closed.rep3 == negate_rep(closed.rep2));
  record("torus_invariant_dim", torus_invariant_dimension(n) == n - 1);
}

void verify_subgroups(int n, Recorder& record) {
  const auto expected = expected_excess_set(n);
  const auto bounded = excess_subgroups(n, default_height(n));
  const auto complete = excess_subgroups_complete(n);
  record("excess_set", bounded == expected && complete == expected, directions_to_string(bounded));

  bool moduli_ok = moduli_dimension(n, expected[0]) == expected_moduli(n, 0);
  for (int i = 1; i <= n - 1; ++i)
    moduli_ok = moduli_ok && moduli_dimension(n, expected[i]) == expected_moduli(n, i);
  record("moduli_dimensions", moduli_ok);

  const CycleModel cycle = build_cycle(n);
  bool cycle_ok = cycle.size() == static_cast<std::size_t>(2 * n + 4);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Weight a = cycle.curves()[i].tangent_character;
    const Weight b = cycle.next(i).tangent_character;
    cycle_ok = cycle_ok && (a.s_exp * b.t_exp - a.t_exp * b.s_exp) != 0;
  }
  record("cycle_structure", cycle_ok);

  bool stabilizers_ok = pointwise_stabilizer(cycle.curve({CurveKind::C0})) == expected[0];
  bool isotropy_ok = true;
  for (int i = 1; i <= n - 1; ++i) {
    stabilizers_ok = stabilizers_ok && pointwise_stabilizer(cycle.curve({CurveKind::E, i})) == expected[i];
    isotropy_ok = isotropy_ok && isotropy_weight(cycle.curve({CurveKind::B0}), expected[i]) == i &&
                  isotropy_weight(cycle.curve({CurveKind::Bn}), expected[i]) == n - i;
  }
  record("pointwise_stabilizers", stabilizers_ok);
  record("boundary_isotropy", isotropy_ok);

  const Classification k0 = classify_subgroup(n, expected[0]);
  bool classification_ok = k0.semifree && k0.lebrun_compatible;
  for (int i = 1; i <= n - 1; ++i) {
    const Classification c = classify_subgroup(n, expected[i]);
    classification_ok = classification_ok && !c.semifree && !c.lebrun_compatible;
  }
  record("classification", classification_ok);
}

}  // namespace

bool VerificationResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

nlohmann::json VerificationResult::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name}, {"n", c.n}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"n_from", n_from},
          {"n_to", n_to},
          {"all_passed", all_passed()},
          {"checks", std::move(checks_json)},
          {"reports", reports}};
}

VerificationResult run_verification(int n_from, int n_to, std::uint64_t seed, int samples_per_n) {
  if (n_from < 3) throw std::invalid_argument("verification range must start at n >= 3");
  if (n_to < n_from) throw std::invalid_argument("verification range is empty");

  VerificationResult result;
  result.n_from = n_from;
  result.n_to = n_to;
  std::mt19937_64 rng(seed);
  for (int n = n_from; n <= n_to; ++n) {
    Recorder record(result.checks, n);
    verify_representation(n, rng, samples_per_n, record);
    verify_subgroups(n, record);

    const AuditReport audit = dimension_audit(n);
    std::string failed;
    for (const auto& c : audit.checks)
      if (!c.passed) failed += c.name + " ";
    record("dimension_audit", audit.all_passed(), failed);

    const AssembledRep rep = assemble(Configuration::standard(n));
    nlohmann::json doc = report_json(n, rep, scan(n, default_height(n)).reports);
    const auto violations = validate_report_schema(doc);
    record("report_schema", violations.empty(), violations.empty() ? "" : violations.front());
    result.reports.push_back(std::move(doc));
  }
  return result;
}

}  // namespace twistordef
