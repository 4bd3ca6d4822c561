// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria hold. All comparisons are exact.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistordef/deformation_rep.hpp"
#include "twistordef/invariant_cycle.hpp"
#include "twistordef/moduli.hpp"
#include "twistordef/report.hpp"

#ifndef TWISTORDEF_CLI_PATH
#error "TWISTORDEF_CLI_PATH must point at the command line tool"
#endif

using namespace twistordef;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && passed) detail = what;
    passed = passed && condition;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

std::vector<SubgroupDirection> k_subgroups(int n) {
  std::vector<SubgroupDirection> out{normalize_direction(0, 1)};
  for (int i = 1; i <= n - 1; ++i) out.push_back(normalize_direction(1, i));
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& args) {
  const std::string cmd = std::string(TWISTORDEF_CLI_PATH) + " " + args;
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Outcome representation_reproduction() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (int n = 3; n <= 12; ++n) {
    const AssembledRep closed = closed_form_rep(n);
    for (int s = 0; s < 25; ++s) {
      const Configuration cfg = random_configuration(n, rng);
      o.expect(assemble(cfg) == closed, "assemble != closed form at " + cfg.to_string());
    }
    o.expect(closed.dimension() == static_cast<std::size_t>(7 * n - 13), "total dimension at n=" + std::to_string(n));
  }
  o.expect(assemble(Configuration::standard(3)).dimension() == 8, "n=3 total dimension");
  o.expect(assemble(Configuration::standard(10)).dimension() == 57, "n=10 total dimension");
  return o;
}

Outcome image_rank() {
  Outcome o;
  std::mt19937_64 rng(202);
  for (int n = 2; n <= 12; ++n) {
    std::vector<Configuration> cfgs{Configuration::standard(n)};
    for (int s = 0; s < 25; ++s) cfgs.push_back(random_configuration(n, rng));
    for (const auto& cfg : cfgs) {
      std::size_t r = 0;
      try {
        r = alpha_image(cfg).rows();
      } catch (const DegenerateConfiguration&) {
      }
      o.expect(r == 5, "rank != 5 at " + cfg.to_string());
      const auto g = gamma_vectors(cfg);
      o.expect(g[0] == -g[3], "gamma_1 != -gamma_4 at " + cfg.to_string());
    }
  }
  return o;
}

Outcome excess_set() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const auto found = excess_subgroups(n, 10 * n);
    o.expect(found == k_subgroups(n), "excess set at n=" + std::to_string(n));
    o.expect(found.size() == static_cast<std::size_t>(n), "excess count at n=" + std::to_string(n));
  }
  o.expect(excess_subgroups(2, 20).empty(), "n=2 excess set not empty");
  return o;
}

Outcome moduli_dimensions() {
  Outcome o;
  const auto md = [](int n, int p, int q) { return moduli_dimension(n, normalize_direction(p, q)); };
  for (int n = 3; n <= 12; ++n) {
    o.expect(md(n, 0, 1) == 3 * n - 6, "K0 at n=" + std::to_string(n));
    o.expect(md(n, 1, 1) == n, "K1 at n=" + std::to_string(n));
    o.expect(md(n, 1, n - 1) == n, "K_{n-1} at n=" + std::to_string(n));
    for (int i = 2; i <= n - 2; ++i) o.expect(md(n, 1, i) == n + 2, "middle K_i at n=" + std::to_string(n));
  }
  o.expect(md(3, 0, 1) == 3, "n=3 K0");
  o.expect(md(10, 0, 1) == 24, "n=10 K0");
  o.expect(md(4, 1, 2) == 6, "n=4 K2");
  o.expect(md(6, 1, 3) == 8, "n=6 K3");
  o.expect(md(3, 1, 1) == 3, "n=3 K1");
  return o;
}

Outcome dimension_audit_checks() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const AuditReport a = dimension_audit(n);
    o.expect(a.all_passed(), "audit failed at n=" + std::to_string(n));
    o.expect(a.check("extension_group_vanishes").actual == 0, "extension group at n=" + std::to_string(n));
    o.expect(a.check("relative_tangent_h1").actual == 0 && a.check("relative_tangent_h2").actual == 0,
             "relative tangent cohomology at n=" + std::to_string(n));
    o.expect(a.check("normal_summand_h1").actual == n - 2, "h^1(O(1-n)) at n=" + std::to_string(n));
    o.expect(a.check("h1_theta_y").actual == 3 * n - 5, "h^1(Theta_Y) at n=" + std::to_string(n));
  }
  return o;
}

Outcome cycle_and_classification() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const CycleModel cycle = build_cycle(n);
    o.expect(cycle.size() == static_cast<std::size_t>(2 * n + 4), "cycle size" + at);
    const auto ks = k_subgroups(n);
    o.expect(pointwise_stabilizer(cycle.curve({CurveKind::C0})) == ks[0], "C0 stabilizer" + at);
    for (int i = 1; i <= n - 1; ++i) {
      o.expect(pointwise_stabilizer(cycle.curve({CurveKind::E, i})) == ks[i], "E_i stabilizer" + at);
      o.expect(isotropy_weight(cycle.curve({CurveKind::B0}), ks[i]) == i, "B0 isotropy" + at);
      o.expect(isotropy_weight(cycle.curve({CurveKind::Bn}), ks[i]) == n - i, "Bn isotropy" + at);
      const Classification c = classify_subgroup(n, ks[i]);
      o.expect(!c.semifree && !c.lebrun_compatible, "K_i classification" + at);
    }
    o.expect(classify_subgroup(n, ks[0]).semifree, "K0 semi-free" + at);
  }
  return o;
}

Outcome symmetry() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const AssembledRep rep = assemble(Configuration::standard(n));
    o.expect(negate_rep(rep.total()) == rep.total(), "total not conjugation invariant at n=" + std::to_string(n));
    o.expect(rep.rep3 == negate_rep(rep.rep2), "rep3 != -rep2 at n=" + std::to_string(n));
    o.expect(torus_invariant_dimension(n) == n - 1, "torus invariant dimension at n=" + std::to_string(n));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> pick_n(2, 12);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = pick_n(rng);
    int p = coord(rng), q = coord(rng);
    if (p == 0 && q == 0) p = 1;
    const auto k = normalize_direction(p, q);
    const WeightRep linear_algebra = assemble(random_configuration(n, rng)).total();
    o.expect(fixed_dimension(linear_algebra, k) == fixed_dimension(closed_form_rep(n).total(), k),
             "fixed dimension mismatch at n=" + std::to_string(n) + " k=" + k.to_string());
  }
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const CommandResult verify = run_command("verify --n-from 3 --n-to 12");
  o.expect(verify.exit_code == 0, "verify exit code " + std::to_string(verify.exit_code));
  try {
    const auto doc = nlohmann::json::parse(verify.output);
    o.expect(doc.at("all_passed") == true, "verify reported failures");
    o.expect(doc.at("reports").size() == 10, "verify report count");
    for (const auto& report : doc.at("reports")) {
      const auto violations = validate_report_schema(report);
      o.expect(violations.empty(), violations.empty() ? "" : "schema: " + violations.front());
    }
  } catch (const std::exception& e) {
    o.expect(false, std::string("verify output is not JSON: ") + e.what());
  }

  const CommandResult rep = run_command("rep --n 3 --format json");
  o.expect(rep.exit_code == 0, "rep exit code " + std::to_string(rep.exit_code));
  try {
    const auto doc = nlohmann::json::parse(rep.output);
    o.expect(validate_report_schema(doc).empty(), "rep output violates schema");
    WeightRep listed;
    for (const char* block : {"rep1", "rep2", "rep3"})
      for (const auto& entry : doc.at("rep").at(block)) {
        int m = 0, k = 0;
        std::sscanf(entry.at(0).get<std::string>().c_str(), "(%d,%d)", &m, &k);
        listed.add({m, k}, entry.at(1).get<std::size_t>());
      }
    const WeightRep expected{{0, 0}, {0, 0}, {1, 0}, {-1, 0}, {-2, 1}, {-1, 1}, {2, -1}, {1, -1}};
    o.expect(listed == expected, "rep --n 3 weights " + listed.to_string());
    o.expect(listed.dimension() == 8, "rep --n 3 dimension");
  } catch (const std::exception& e) {
    o.expect(false, std::string("rep output is not JSON: ") + e.what());
  }

  o.expect(run_command("rep --n 1 2>/dev/null").exit_code == 2, "invalid --n not rejected with exit 2");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "representation on H^1(Theta_Z) reproduced on random configurations, dim 7n-13", 5.0,
       representation_reproduction},
      {2, "image of alpha has rank 5 and gamma_1 = -gamma_4", 1.0, image_rank},
      {3, "excess subgroups are exactly K_0..K_{n-1} (height bound 10n); none for n=2", 10.0, excess_set},
      {4, "moduli dimensions 3n-6 / n / n+2", 0.0, moduli_dimensions},
      {5, "dimension audit of the exact sequences, n=2..12", 0.0, dimension_audit_checks},
      {6, "invariant cycle, stabilizers, isotropy and classification", 0.0, cycle_and_classification},
      {7, "conjugation symmetry and torus-invariant dimension n-1", 0.0, symmetry},
      {8, "linear algebra and closed form fixed dimensions agree", 0.0, oracle_equivalence},
      {9, "CLI verify exits 0 with schema-valid JSON; rep --n 3 lists 8 weights", 0.0, cli_contract},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      o.passed = false;
      o.detail = "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(c.time_limit_s) + " s";
    }
    all = all && o.passed;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
