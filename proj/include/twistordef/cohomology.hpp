#pragma once

#include "twistordef/weights.hpp"

namespace twistordef {

/// dim H^i(P^1, O(degree)), i in {0,1}. Throws std::invalid_argument otherwise.
long h_p1(int degree, int i);

/// dim H^i(P^1 x P^1, O(a,b)), i in {0,1,2}, by Kunneth.
long h_q(int a, int b, int i);

struct LineBundleP1 {
  int degree = 0;
  long h(int i) const { return h_p1(degree, i); }
};

struct LineBundleQ {
  int a = 0;
  int b = 0;
  long h(int i) const { return h_q(a, b, i); }
};

/// Linearization of a line bundle on P^1 over the chart with coordinate v,
/// where the torus acts on the base by v -> s v and on the fiber coordinate
/// by fiber_character.
struct EquivariantChart {
  Weight fiber_character;
};

/// Torus weights of H^1(P^1, O(degree)) in the Cech basis zeta_k : v -> v^-k,
/// k = 1 .. -degree-1. Empty for degree >= -1.
WeightRep cech_h1_weights(int degree, const EquivariantChart& chart);

}  // namespace twistordef
