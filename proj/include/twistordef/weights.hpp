#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace twistordef {

/// Character (s,t) -> s^s_exp t^t_exp of the torus C* x C*.
struct Weight {
  int s_exp = 0;
  int t_exp = 0;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  Weight operator-() const { return {-s_exp, -t_exp}; }
  friend Weight operator+(Weight a, Weight b) { return {a.s_exp + b.s_exp, a.t_exp + b.t_exp}; }
  friend Weight operator*(int k, Weight w) { return {k * w.s_exp, k * w.t_exp}; }

  bool is_trivial() const { return s_exp == 0 && t_exp == 0; }
  /// "(m,n)"
  std::string to_string() const;
};

/// Report order: lexicographic on (t_exp, s_exp).
struct CanonicalWeightOrder {
  bool operator()(const Weight& a, const Weight& b) const {
    return std::tie(a.t_exp, a.s_exp) < std::tie(b.t_exp, b.s_exp);
  }
};

/// Finite-dimensional torus representation, stored as a multiset of weights.
class WeightRep {
 public:
  using Entries = std::map<Weight, std::size_t, CanonicalWeightOrder>;

  WeightRep() = default;
  WeightRep(std::initializer_list<Weight> weights);

  void add(Weight w, std::size_t multiplicity = 1);
  WeightRep& operator+=(const WeightRep& other);
  friend WeightRep operator+(WeightRep a, const WeightRep& b) { return a += b; }

  std::size_t multiplicity(Weight w) const;
  std::size_t dimension() const;
  bool empty() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }

  /// "{(m,n)xk, ...}" in canonical order.
  std::string to_string() const;

  friend bool operator==(const WeightRep&, const WeightRep&) = default;

 private:
  Entries entries_;
};

/// Primitive lattice direction (p,q) naming the circle {(l^p, l^q)} in the
/// torus. Canonical sign: p > 0, or (p,q) = (0,1).
class SubgroupDirection {
 public:
  /// Throws std::invalid_argument for (0,0).
  static SubgroupDirection normalize(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// max(|p|, |q|)
  std::int64_t height() const;
  std::string to_string() const;

  friend auto operator<=>(const SubgroupDirection&, const SubgroupDirection&) = default;

 private:
  SubgroupDirection(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

inline SubgroupDirection normalize_direction(std::int64_t p, std::int64_t q) {
  return SubgroupDirection::normalize(p, q);
}

/// Exponent of l in the restriction of w to {(l^p, l^q)}: m*p + n*q.
std::int64_t pairing(Weight w, SubgroupDirection k);

bool is_fixed(Weight w, SubgroupDirection k);

/// The unique subgroup on which a nontrivial weight restricts trivially.
/// Throws std::invalid_argument for the trivial weight.
SubgroupDirection annihilating_direction(Weight w);

WeightRep fixed_subrep(const WeightRep& rep, SubgroupDirection k);

WeightRep negate_rep(const WeightRep& rep);

}  // namespace twistordef
