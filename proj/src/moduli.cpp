#include "twistordef/moduli.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twistordef/deformation_rep.hpp"

namespace twistordef {

namespace {

void require_n(int n, int minimum, const char* what) {
  if (n < minimum)
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(minimum) +
                                ", got " + std::to_string(n));
}

bool is_excess(const WeightRep& total, SubgroupDirection k) {
  return fixed_dimension(total, k) > static_cast<int>(total.multiplicity({0, 0}));
}

}  // namespace

int fixed_dimension(const WeightRep& total, SubgroupDirection k) {
  return static_cast<int>(fixed_subrep(total, k).dimension());
}

int fixed_dimension(int n, SubgroupDirection k) {
  require_n(n, 2, "fixed_dimension");
  return fixed_dimension(closed_form_rep(n).total(), k);
}

int torus_invariant_dimension(int n) {
  require_n(n, 2, "torus_invariant_dimension");
  return static_cast<int>(assemble(Configuration::standard(n)).total().multiplicity({0, 0}));
}

std::vector<SubgroupDirection> primitive_directions(int height_bound) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
  std::vector<SubgroupDirection> out;
  out.push_back(SubgroupDirection::normalize(0, 1));
  for (int p = 1; p <= height_bound; ++p)
    for (int q = -height_bound; q <= height_bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back(SubgroupDirection::normalize(p, q));
  return out;
}

std::vector<SubgroupDirection> excess_subgroups(int n, int height_bound) {
  require_n(n, 2, "excess_subgroups");
  const WeightRep total = closed_form_rep(n).total();
  std::vector<SubgroupDirection> out;
  for (const auto& k : primitive_directions(height_bound))
    if (is_excess(total, k)) out.push_back(k);
  return out;
}

std::vector<SubgroupDirection> excess_subgroups_complete(int n) {
  require_n(n, 2, "excess_subgroups_complete");
  const WeightRep total = closed_form_rep(n).total();
  std::vector<SubgroupDirection> out;
  for (const auto& [w, mult] : total.entries()) {
    if (w.is_trivial()) continue;
    const SubgroupDirection k = annihilating_direction(w);
    if (is_excess(total, k)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> moduli_dimension(int n, SubgroupDirection k) {
  require_n(n, 3, "moduli_dimension");
  const WeightRep total = closed_form_rep(n).total();
  if (!is_excess(total, k)) return std::nullopt;
  // The residual circle (torus / K) acts nontrivially on the fixed subspace;
  // the local moduli space is the orbit space.
  return fixed_dimension(total, k) - 1;
}

std::optional<std::string> k_label(int n, SubgroupDirection k) {
  if (n < 3) return std::nullopt;
  const auto index = k_index(n, k);
  if (!index) return std::nullopt;
  return "K" + std::to_string(*index);
}

const SubgroupReport& ScanResult::report(SubgroupDirection k) const {
  for (const auto& r : reports)
    if (r.direction == k) return r;
  throw std::out_of_range("direction " + k.to_string() + " not in scan");
}

ScanResult scan(int n, int height_bound) {
  require_n(n, 3, "scan");
  const WeightRep total = closed_form_rep(n).total();
  ScanResult result;
  result.n = n;
  result.height_bound = height_bound;
  result.torus_invariant_dim = torus_invariant_dimension(n);
  for (const auto& k : primitive_directions(height_bound)) {
    SubgroupReport r{k, k_label(n, k), fixed_dimension(total, k), false, std::nullopt,
                     classify_subgroup(n, k)};
    r.is_excess = r.fixed_dim > result.torus_invariant_dim;
    if (r.is_excess) {
      r.moduli_dim = r.fixed_dim - 1;
      result.excess_set.push_back(k);
    }
    result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace twistordef
