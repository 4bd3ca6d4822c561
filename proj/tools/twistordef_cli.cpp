// Command line front end: representation on H^1(Theta_Z), the alpha map,
// the dimension audit, the invariant cycle, subgroup scans and verification.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistordef/deformation_rep.hpp"
#include "twistordef/invariant_cycle.hpp"
#include "twistordef/moduli.hpp"
#include "twistordef/report.hpp"
#include "twistordef/verify.hpp"

namespace td = twistordef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitInvalidArguments = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

td::Configuration make_configuration(int n, const std::string& a_text) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (a_text.empty()) return td::Configuration::standard(n);
  std::vector<td::Rational> a;
  for (const auto& item : split(a_text, ',')) a.push_back(td::Rational::parse(item));
  if (static_cast<int>(a.size()) != n)
    throw UsageError("--a lists " + std::to_string(a.size()) + " values but --n is " + std::to_string(n));
  return td::Configuration(std::move(a));
}

td::SubgroupDirection parse_direction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--subgroup expects p,q");
  std::size_t used_p = 0, used_q = 0;
  const long p = std::stol(parts[0], &used_p);
  const long q = std::stol(parts[1], &used_q);
  if (used_p != parts[0].size() || used_q != parts[1].size()) throw UsageError("--subgroup expects integers p,q");
  return td::SubgroupDirection::normalize(p, q);
}

std::string join_directions(const std::vector<td::SubgroupDirection>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? " " : "") + ds[i].to_string();
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_section_vector(std::ostream& os, const td::NormalSectionVector& v) {
  const char* names[] = {"nu", "u nu", "u^2 nu"};
  for (auto b : td::kSectionBlocks) {
    os << "    " << std::left << std::setw(7) << names[static_cast<int>(b)] << "[";
    const auto block = v.block(b);
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? ", " : "") << block[i];
    os << "]\n";
  }
}

void print_subgroup_table(std::ostream& os, const td::ScanResult& result) {
  os << std::left << std::setw(12) << "direction" << std::setw(8) << "label" << std::setw(11) << "fixed_dim"
     << std::setw(8) << "excess" << std::setw(8) << "moduli" << std::setw(10) << "semifree"
     << "lebrun\n";
  for (const auto& r : result.reports) {
    os << std::setw(12) << r.direction.to_string() << std::setw(8) << r.k_label.value_or("-")
       << std::setw(11) << r.fixed_dim << std::setw(8) << yes_no(r.is_excess) << std::setw(8)
       << (r.moduli_dim ? std::to_string(*r.moduli_dim) : "-") << std::setw(10)
       << yes_no(r.classification.semifree) << yes_no(r.classification.lebrun_compatible) << '\n';
  }
}

int run_rep(int n, const std::string& a_text, const std::string& format) {
  const td::Configuration cfg = make_configuration(n, a_text);
  const td::AssembledRep rep = td::assemble(cfg);
  const bool match = rep == td::closed_form_rep(n);

  if (format == "json") {
    std::vector<td::SubgroupReport> subgroups;
    if (n >= 3) subgroups = td::scan(n, td::default_height(n)).reports;
    nlohmann::json doc = td::report_json(n, rep, subgroups);
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : cfg.parameters()) a.push_back(r.to_string());
    doc["config"] = {{"a", a}};
    doc["closed_form_match"] = match;
    std::cout << doc.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "block,weight,multiplicity\n";
    auto rows = [](const char* block, const td::WeightRep& r) {
      for (const auto& [w, mult] : r.entries()) std::cout << block << ",\"" << w.to_string() << "\"," << mult << '\n';
    };
    rows("rep1", rep.rep1);
    rows("rep2", rep.rep2);
    rows("rep3", rep.rep3);
  } else {
    std::cout << "configuration: " << cfg.to_string() << '\n'
              << "H^1(Theta_Y)      rep1 = " << rep.rep1.to_string() << "  dim " << rep.rep1.dimension() << '\n'
              << "H^1(N_C0)         rep2 = " << rep.rep2.to_string() << "  dim " << rep.rep2.dimension() << '\n'
              << "H^1(N_C0bar)      rep3 = " << rep.rep3.to_string() << "  dim " << rep.rep3.dimension() << '\n'
              << "H^1(Theta_Z)     total = " << rep.total().to_string() << "  dim " << rep.dimension() << '\n'
              << "closed form: " << (match ? "match" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitInvariantFailure;
}

int run_alpha(int n, const std::string& a_text, int samples, std::uint64_t seed, const std::string& format) {
  const td::Configuration cfg = make_configuration(n, a_text);
  const auto gammas = td::gamma_vectors(cfg);
  const td::WeightRep expected = td::closed_form_rep(n).rep1;

  td::RatMatrix image;
  td::WeightRep cokernel;
  bool ok = true;
  try {
    image = td::alpha_image(cfg);
    cokernel = td::cokernel_rep(cfg);
  } catch (const td::DegenerateConfiguration& e) {
    std::cerr << e.what() << '\n';
    ok = false;
  }
  ok = ok && cokernel == expected;

  int stable = 0;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const td::Configuration sample = td::random_configuration(n, rng);
    try {
      if (td::alpha_image(sample).rows() == 5 && td::cokernel_rep(sample) == expected) ++stable;
    } catch (const td::DegenerateConfiguration&) {
    }
  }
  ok = ok && stable == samples;

  if (format == "json") {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& v : gammas) {
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& r : v.coords()) coords.push_back(r.to_string());
      g.push_back(coords);
    }
    nlohmann::json cok = nlohmann::json::object();
    for (auto b : td::kSectionBlocks) cok[td::block_weight(b).to_string()] = cokernel.multiplicity(td::block_weight(b));
    nlohmann::json doc{{"n", n},         {"gamma", g},          {"image_rank", image.rows()},
                       {"cokernel", cok}, {"samples", samples}, {"stable_samples", stable}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "configuration: " << cfg.to_string() << '\n';
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      std::cout << "  gamma_" << k + 1 << '\n';
      print_section_vector(std::cout, gammas[k]);
    }
    std::cout << "image rank (gamma_2..gamma_6): " << image.rows() << '\n'
              << "cokernel by weight:";
    for (auto b : td::kSectionBlocks)
      std::cout << ' ' << td::block_weight(b).to_string() << 'x' << cokernel.multiplicity(td::block_weight(b));
    std::cout << '\n';
    if (samples > 0) std::cout << "rank stable on " << stable << " of " << samples << " random configurations\n";
  }
  return ok ? kExitOk : kExitInvariantFailure;
}

int run_audit(int n, const std::string& format) {
  if (n < 2) throw UsageError("--n must be at least 2");
  const td::AuditReport audit = td::dimension_audit(n);
  if (format == "json") {
    std::cout << td::audit_json(audit).dump(2) << '\n';
  } else {
    std::cout << "dimension audit, n = " << n << '\n';
    for (const auto& c : audit.checks)
      std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::left << std::setw(26) << c.name
                << " expected " << std::setw(4) << c.expected << " actual " << std::setw(4) << c.actual << "  "
                << c.statement << '\n';
  }
  return audit.all_passed() ? kExitOk : kExitInvariantFailure;
}

int run_cycle(int n, const std::string& subgroup_text, const std::string& format) {
  if (n < 3) throw UsageError("--n must be at least 3 for the invariant cycle");
  const td::CycleModel cycle = td::build_cycle(n);
  std::optional<td::SubgroupDirection> k;
  if (!subgroup_text.empty()) k = parse_direction(subgroup_text);

  if (format == "json") {
    std::cout << td::cycle_json(cycle, k).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << std::left << std::setw(8) << "curve" << std::setw(18) << "coordinate" << std::setw(11) << "tangent"
            << std::setw(12) << "stabilizer" << (k ? "isotropy" : "") << '\n';
  for (const auto& c : cycle.curves()) {
    std::cout << std::setw(8) << c.label.to_string() << std::setw(18) << c.coordinate_name << std::setw(11)
              << c.tangent_character.to_string() << std::setw(12) << td::pointwise_stabilizer(c).to_string();
    if (k) std::cout << td::isotropy_weight(c, *k);
    std::cout << '\n';
  }
  if (k) {
    const td::Classification cls = td::classify_subgroup(n, *k);
    std::cout << "subgroup " << k->to_string() << " (" << td::k_label(n, *k).value_or("unlabelled") << "): "
              << (cls.semifree ? "semi-free" : "not semi-free") << ", "
              << (cls.lebrun_compatible ? "LeBrun-compatible" : "non-LeBrun") << "; max |isotropy| "
              << cls.max_abs_isotropy << " on " << cls.witness.to_string() << '\n';
  }
  return kExitOk;
}

int run_subgroups(int n, int height, const std::string& format) {
  if (n < 3) throw UsageError("--n must be at least 3 for a subgroup scan");
  if (height < 1) throw UsageError("--height must be at least 1");
  const td::ScanResult result = td::scan(n, height);
  if (format == "json") {
    nlohmann::json doc = td::report_json(n, td::closed_form_rep(n), result.reports);
    doc["height_bound"] = height;
    doc["torus_invariant_dim"] = result.torus_invariant_dim;
    std::cout << doc.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << td::subgroups_csv(n, result.reports);
  } else {
    std::cout << "n = " << n << ", height bound " << height << ", torus-invariant dimension "
              << result.torus_invariant_dim << '\n';
    print_subgroup_table(std::cout, result);
    std::cout << "excess subgroups: " << join_directions(result.excess_set) << '\n';
  }
  return kExitOk;
}

int run_verify(int n_from, int n_to, std::uint64_t seed, int samples, const std::string& format) {
  if (n_from < 3 || n_to < n_from) throw UsageError("verify needs 3 <= --n-from <= --n-to");
  const td::VerificationResult result = td::run_verification(n_from, n_to, seed, samples);
  if (format == "json") {
    std::cout << result.to_json().dump(2) << '\n';
  } else {
    for (const auto& c : result.checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << "n=" << std::setw(3) << std::left << c.n << c.name
                << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
    std::cout << (result.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return result.all_passed() ? kExitOk : kExitInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus representation on H^1(Theta_Z) of LeBrun twistor spaces and U(1)-equivariant deformations"};
  app.require_subcommand(1);

  int n = 0;
  std::string a_text;
  std::string format = "text";
  const std::vector<std::string> text_json{"text", "json"};
  const std::vector<std::string> text_json_csv{"text", "json", "csv"};

  auto* rep = app.add_subcommand("rep", "Assembled representation on H^1(Theta_Z)");
  rep->add_option("--n", n, "Number of CP^2 summands")->required();
  rep->add_option("--a", a_text, "Comma separated rationals a_1 < ... < a_n (default 1..n)");
  rep->add_option("--format", format)->check(CLI::IsMember(text_json_csv));

  int samples = 0;
  std::uint64_t seed = 1;
  auto* alpha = app.add_subcommand("alpha", "gamma vectors, image rank and cokernel weights");
  alpha->add_option("--n", n)->required();
  alpha->add_option("--a", a_text);
  alpha->add_option("--samples", samples, "Also test K random configurations")->check(CLI::NonNegativeNumber);
  alpha->add_option("--seed", seed);
  alpha->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto* audit = app.add_subcommand("audit", "Dimension audit of the exact sequences");
  audit->add_option("--n", n)->required();
  audit->add_option("--format", format)->check(CLI::IsMember(text_json));

  std::string subgroup_text;
  auto* cycle = app.add_subcommand("cycle", "Invariant cycle of 2n+4 rational curves");
  cycle->add_option("--n", n)->required();
  cycle->add_option("--subgroup", subgroup_text, "Direction p,q of a U(1)-subgroup");
  cycle->add_option("--format", format)->check(CLI::IsMember(text_json));

  int height = -1;
  auto* subgroups = app.add_subcommand("subgroups", "Scan U(1)-subgroups for equivariant deformations");
  subgroups->add_option("--n", n)->required();
  subgroups->add_option("--height", height, "Height bound max(|p|,|q|) (default n+5)");
  subgroups->add_option("--format", format)->check(CLI::IsMember(text_json_csv));

  int n_from = 3, n_to = 12;
  std::string verify_format = "json";
  int verify_samples = 5;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite over a range of n");
  verify->add_option("--n-from", n_from);
  verify->add_option("--n-to", n_to);
  verify->add_option("--seed", seed);
  verify->add_option("--samples", verify_samples, "Random configurations per n")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (*rep) return run_rep(n, a_text, format);
    if (*alpha) return run_alpha(n, a_text, samples, seed, format);
    if (*audit) return run_audit(n, format);
    if (*cycle) return run_cycle(n, subgroup_text, format);
    if (*subgroups) return run_subgroups(n, height < 0 ? td::default_height(n) : height, format);
    if (*verify) return run_verify(n_from, n_to, seed, verify_samples, verify_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  return kExitInvalidArguments;
}
