#include "twistordef/invariant_cycle.hpp"

#include <stdexcept>
#include <utility>

namespace twistordef {

namespace {

// Weights of the coordinates (u, v, x, y, z) under
// (u,v,x,y,z) -> (s u, s v, t x, s^n t^-1 y, z).
struct CoordinateWeights {
  Weight u{1, 0};
  Weight v{1, 0};
  Weight x{0, 1};
  Weight y;
  Weight z{0, 0};
  // v - a_i u is homogeneous because u and v share a weight.
  Weight discriminant_factor{1, 0};

  explicit CoordinateWeights(int n) : y{n, -1} {}
};

}  // namespace

std::string CurveLabel::to_string() const {
  switch (kind) {
    case CurveKind::C0bar:
      return "C0bar";
    case CurveKind::B0:
      return "B0";
    case CurveKind::E:
      return "E" + std::to_string(index);
    case CurveKind::Bn:
      return "Bn";
    case CurveKind::C0:
      return "C0";
    case CurveKind::B0bar:
      return "B0bar";
    case CurveKind::Ebar:
      return "E" + std::to_string(index) + "bar";
    case CurveKind::Bnbar:
      return "Bnbar";
  }
  throw std::logic_error("unknown curve kind");
}

bool CurveLabel::is_conjugate() const {
  return kind == CurveKind::C0bar || kind == CurveKind::B0bar || kind == CurveKind::Ebar ||
         kind == CurveKind::Bnbar;
}

CycleModel::CycleModel(int n, std::vector<CycleCurve> curves) : n_(n), curves_(std::move(curves)) {
  if (curves_.size() != static_cast<std::size_t>(2 * n + 4))
    throw std::invalid_argument("invariant cycle must have 2n+4 curves");
}

const CycleCurve& CycleModel::curve(CurveLabel label) const {
  for (const auto& c : curves_)
    if (c.label == label) return c;
  throw std::out_of_range("curve " + label.to_string() + " not on the cycle");
}

CycleModel build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("invariant cycle requires n >= 3, got " + std::to_string(n));
  const CoordinateWeights w(n);

  // x~ = x/z on B_0, x~_j = x~ / prod_{i<=j} (v - a_i u) on E_j, y~ = y/z on B_n.
  const Weight x_tilde = w.x + -w.z;
  const Weight y_tilde = w.y + -w.z;
  auto x_tilde_j = [&](int j) { return x_tilde + -(j * w.discriminant_factor); };

  std::vector<CycleCurve> curves;
  curves.push_back({{CurveKind::C0bar}, w.v, "v"});
  curves.push_back({{CurveKind::B0}, x_tilde, "x~ = x/z"});
  for (int j = 1; j <= n - 1; ++j)
    curves.push_back({{CurveKind::E, j}, x_tilde_j(j), "x~_" + std::to_string(j)});
  curves.push_back({{CurveKind::Bn}, y_tilde, "y~ = y/z"});
  curves.push_back({{CurveKind::C0}, w.u, "u"});

  // Conjugate half of the cycle, running from C_0 back to conj C_0.
  curves.push_back({{CurveKind::B0bar}, -x_tilde, "conj(x~)"});
  for (int j = 1; j <= n - 1; ++j)
    curves.push_back({{CurveKind::Ebar, j}, -x_tilde_j(j), "conj(x~_" + std::to_string(j) + ")"});
  curves.push_back({{CurveKind::Bnbar}, -y_tilde, "conj(y~)"});
  return CycleModel(n, std::move(curves));
}

SubgroupDirection pointwise_stabilizer(const CycleCurve& curve) {
  if (curve.tangent_character.is_trivial())
    throw std::invalid_argument("curve " + curve.label.to_string() + " has trivial tangent character");
  return annihilating_direction(curve.tangent_character);
}

std::int64_t isotropy_weight(const CycleCurve& curve, SubgroupDirection k) {
  return pairing(curve.tangent_character, k);
}

std::optional<int> k_index(int n, SubgroupDirection k) {
  const CycleModel cycle = build_cycle(n);
  if (pointwise_stabilizer(cycle.curve({CurveKind::C0})) == k) return 0;
  for (int i = 1; i <= n - 1; ++i)
    if (pointwise_stabilizer(cycle.curve({CurveKind::E, i})) == k) return i;
  return std::nullopt;
}

Classification classify_subgroup(int n, SubgroupDirection k) {
  const CycleModel cycle = build_cycle(n);
  Classification out;
  out.witness = cycle.curves().front().label;
  for (const auto& c : cycle.curves()) {
    std::int64_t w = isotropy_weight(c, k);
    if (w < 0) w = -w;
    if (w > out.max_abs_isotropy) {
      out.max_abs_isotropy = w;
      out.witness = c.label;
    }
  }
  out.semifree = out.max_abs_isotropy <= 1;
  const auto index = k_index(n, k);
  out.lebrun_compatible = !(index && *index >= 1 && out.max_abs_isotropy >= 2);
  return out;
}

}  // namespace twistordef
