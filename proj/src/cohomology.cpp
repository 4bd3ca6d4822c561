#include "twistordef/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twistordef {

namespace {

// Base coordinate v on the chart transforms as v -> s v.
constexpr Weight kBaseCharacter{1, 0};

}  // namespace

long h_p1(int degree, int i) {
  switch (i) {
    case 0:
      return std::max(degree + 1, 0);
    case 1:
      return std::max(-degree - 1, 0);
    default:
      throw std::invalid_argument("P^1 cohomology degree must be 0 or 1, got " + std::to_string(i));
  }
}

long h_q(int a, int b, int i) {
  if (i < 0 || i > 2)
    throw std::invalid_argument("Q cohomology degree must be 0, 1 or 2, got " + std::to_string(i));
  long total = 0;
  for (int j = 0; j <= 1; ++j) {
    const int k = i - j;
    if (k < 0 || k > 1) continue;
    total += h_p1(a, j) * h_p1(b, k);
  }
  return total;
}

WeightRep cech_h1_weights(int degree, const EquivariantChart& chart) {
  // (s,t) sends the local section v^-k to chi(s,t) (s^-1 v)^-k = chi s^k v^-k,
  // so zeta_k has weight fiber_character + k * (1,0).
  WeightRep rep;
  for (int k = 1; k <= -degree - 1; ++k) rep.add(chart.fiber_character + k * kBaseCharacter);
  return rep;
}

}  // namespace twistordef
