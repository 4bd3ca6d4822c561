#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twistordef/invariant_cycle.hpp"
#include "twistordef/weights.hpp"

namespace twistordef {

inline int default_height(int n) { return n + 5; }

/// dim H^1(Theta_Z)^K for a given total representation.
int fixed_dimension(const WeightRep& total, SubgroupDirection k);
/// dim H^1(Theta_Z)^K from the closed-form representation. n >= 2.
int fixed_dimension(int n, SubgroupDirection k);

/// Multiplicity of the trivial weight in H^1(Theta_Z); always n - 1.
int torus_invariant_dimension(int n);

/// Canonical primitive directions with max(|p|,|q|) <= height_bound, sorted
/// lexicographically by (p, q).
std::vector<SubgroupDirection> primitive_directions(int height_bound);

/// Directions within the height bound whose fixed subspace is strictly
/// larger than the torus-invariant part.
std::vector<SubgroupDirection> excess_subgroups(int n, int height_bound);

/// The excess set with no height bound. Excess requires fixing a nontrivial
/// weight, and each nontrivial weight is fixed by exactly one circle, so the
/// candidates are the annihilating directions of the weights present.
std::vector<SubgroupDirection> excess_subgroups_complete(int n);

/// fixed_dimension - 1 when k is an excess subgroup, otherwise empty.
/// Throws std::invalid_argument for n < 3.
std::optional<int> moduli_dimension(int n, SubgroupDirection k);

/// "K<i>" for the distinguished subgroups K_0 .. K_{n-1}.
std::optional<std::string> k_label(int n, SubgroupDirection k);

struct SubgroupReport {
  SubgroupDirection direction;
  std::optional<std::string> k_label;
  int fixed_dim = 0;
  bool is_excess = false;
  std::optional<int> moduli_dim;
  Classification classification;
};

struct ScanResult {
  int n = 0;
  int height_bound = 0;
  int torus_invariant_dim = 0;
  std::vector<SubgroupReport> reports;
  std::vector<SubgroupDirection> excess_set;

  /// Throws std::out_of_range if the direction was not scanned.
  const SubgroupReport& report(SubgroupDirection k) const;
};

/// Reports for every primitive direction within the bound, in lexicographic
/// order. Throws std::invalid_argument for n < 3 or height_bound < 1.
ScanResult scan(int n, int height_bound);

}  // namespace twistordef
