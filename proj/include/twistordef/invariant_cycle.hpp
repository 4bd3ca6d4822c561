#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistordef/weights.hpp"

namespace twistordef {

enum class CurveKind { C0bar, B0, E, Bn, C0, B0bar, Ebar, Bnbar };

struct CurveLabel {
  CurveKind kind;
  int index = 0;  // j for E_j and its conjugate, unused otherwise

  /// "C0", "C0bar", "B0", "E3", "E3bar", "Bn", ...
  std::string to_string() const;
  bool is_conjugate() const;
  friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
};

/// Torus-invariant rational curve in the twistor space, together with the
/// character by which the torus scales its distinguished affine coordinate.
struct CycleCurve {
  CurveLabel label;
  Weight tangent_character;
  std::string coordinate_name;
};

/// The cycle of 2n+4 invariant curves
///   conj C_0, B_0, E_1, ..., E_{n-1}, B_n, C_0, conj B_0, conj E_1, ..., conj E_{n-1}, conj B_n
/// where consecutive curves (cyclically) meet in isolated torus-fixed points.
class CycleModel {
 public:
  CycleModel(int n, std::vector<CycleCurve> curves);

  int n() const { return n_; }
  const std::vector<CycleCurve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }
  /// Throws std::out_of_range if the label is not on the cycle.
  const CycleCurve& curve(CurveLabel label) const;
  /// Curve following position i, wrapping around.
  const CycleCurve& next(std::size_t i) const { return curves_[(i + 1) % curves_.size()]; }

 private:
  int n_;
  std::vector<CycleCurve> curves_;
};

/// Throws std::invalid_argument for n < 3.
CycleModel build_cycle(int n);

/// Circle fixing the curve pointwise. Throws std::invalid_argument for a
/// trivial tangent character.
SubgroupDirection pointwise_stabilizer(const CycleCurve& curve);

/// Exponent by which the circle {(l^p, l^q)} scales the curve coordinate;
/// zero iff the curve is pointwise fixed.
std::int64_t isotropy_weight(const CycleCurve& curve, SubgroupDirection k);

/// i if k is the distinguished subgroup K_i (0 <= i <= n-1): K_0 fixes C_0
/// pointwise, K_i fixes E_i pointwise.
std::optional<int> k_index(int n, SubgroupDirection k);

struct Classification {
  bool semifree = true;
  bool lebrun_compatible = true;
  std::int64_t max_abs_isotropy = 0;
  CurveLabel witness{CurveKind::C0bar};  // curve attaining max_abs_isotropy
};

/// Semi-freeness is judged from isotropy weights on the cycle, which carries
/// every isolated torus-fixed point. A K_i with i >= 1 that is not semi-free
/// yields non-LeBrun metrics.
Classification classify_subgroup(int n, SubgroupDirection k);

}  // namespace twistordef
