#include "twistordef/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twistordef {

std::string Weight::to_string() const {
  return "(" + std::to_string(s_exp) + "," + std::to_string(t_exp) + ")";
}

WeightRep::WeightRep(std::initializer_list<Weight> weights) {
  for (const auto& w : weights) add(w);
}

void WeightRep::add(Weight w, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[w] += multiplicity;
}

WeightRep& WeightRep::operator+=(const WeightRep& other) {
  for (const auto& [w, mult] : other.entries_) add(w, mult);
  return *this;
}

std::size_t WeightRep::multiplicity(Weight w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::size_t WeightRep::dimension() const {
  std::size_t d = 0;
  for (const auto& [w, mult] : entries_) d += mult;
  return d;
}

std::string WeightRep::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, mult] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += w.to_string() + "x" + std::to_string(mult);
  }
  return out + "}";
}

SubgroupDirection SubgroupDirection::normalize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("subgroup direction (0,0) is not a circle");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::int64_t SubgroupDirection::height() const {
  return std::max(p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_);
}

std::string SubgroupDirection::to_string() const {
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::int64_t pairing(Weight w, SubgroupDirection k) {
  return static_cast<std::int64_t>(w.s_exp) * k.p() + static_cast<std::int64_t>(w.t_exp) * k.q();
}

bool is_fixed(Weight w, SubgroupDirection k) { return pairing(w, k) == 0; }

SubgroupDirection annihilating_direction(Weight w) {
  if (w.is_trivial()) throw std::invalid_argument("trivial weight is fixed by every subgroup");
  return SubgroupDirection::normalize(-static_cast<std::int64_t>(w.t_exp), w.s_exp);
}

WeightRep fixed_subrep(const WeightRep& rep, SubgroupDirection k) {
  WeightRep out;
  for (const auto& [w, mult] : rep.entries())
    if (is_fixed(w, k)) out.add(w, mult);
  return out;
}

WeightRep negate_rep(const WeightRep& rep) {
  WeightRep out;
  for (const auto& [w, mult] : rep.entries()) out.add(-w, mult);
  return out;
}

}  // namespace twistordef
