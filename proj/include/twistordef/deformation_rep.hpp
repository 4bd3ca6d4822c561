#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistordef/rat_matrix.hpp"
#include "twistordef/rational.hpp"
#include "twistordef/weights.hpp"

namespace twistordef {

/// Raised when the image of H^0(Theta_Q) in the normal sections has rank
/// below 5. Unreachable through a validated Configuration.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n >= 2 strictly increasing positive rationals a_1 < ... < a_n; the
/// discriminant curves are C_i = {v = a_i u} in Q.
class Configuration {
 public:
  /// Throws std::invalid_argument if the parameters violate the invariants.
  explicit Configuration(std::vector<Rational> a);

  /// a_i = i.
  static Configuration standard(int n);

  int n() const { return static_cast<int>(a_.size()); }
  std::span<const Rational> parameters() const { return a_; }
  std::string to_string() const;

 private:
  std::vector<Rational> a_;
};

/// Uniformly generated valid configuration: positive increments num/den with
/// num, den in [1, 50].
Configuration random_configuration(int n, std::mt19937_64& rng);

/// The three coordinate blocks of the sum of H^0(N_i), and the torus weight
/// of each block (nu_i -> s nu_i, u nu_i fixed, u^2 nu_i -> s^-1 u^2 nu_i).
enum class SectionBlock { nu = 0, u_nu = 1, u2_nu = 2 };
inline constexpr std::array<SectionBlock, 3> kSectionBlocks{SectionBlock::nu, SectionBlock::u_nu,
                                                            SectionBlock::u2_nu};
Weight block_weight(SectionBlock block);

/// Element of the sum over i of H^0(N_{C_i/Q}) in the basis
/// (nu_1..nu_n, u nu_1..u nu_n, u^2 nu_1..u^2 nu_n).
class NormalSectionVector {
 public:
  explicit NormalSectionVector(int n);
  NormalSectionVector(int n, std::vector<Rational> coords);

  int n() const { return n_; }
  std::span<const Rational> coords() const { return coords_; }
  std::span<const Rational> block(SectionBlock b) const;
  Rational& at(SectionBlock b, int curve);
  const Rational& at(SectionBlock b, int curve) const;

  /// Blocks carrying a nonzero coordinate.
  std::vector<SectionBlock> support() const;
  bool is_zero() const;

  NormalSectionVector& operator+=(const NormalSectionVector& rhs);
  friend NormalSectionVector operator+(NormalSectionVector a, const NormalSectionVector& b) {
    return a += b;
  }
  NormalSectionVector operator-() const;
  friend bool operator==(const NormalSectionVector&, const NormalSectionVector&) = default;

 private:
  int n_;
  std::vector<Rational> coords_;
};

/// Holomorphic vector field g(u) d/du + h(v) d/dv on Q with g, h of degree
/// at most 2; coefficients are listed from the constant term up.
struct QuadraticVectorField {
  std::array<Rational, 3> du;
  std::array<Rational, 3> dv;
};

/// Basis of sl(2) + sl(2) = H^0(Theta_Q) as vector fields, in the order
/// u d/du, -u^2 d/du, d/du, v d/dv, -v^2 d/dv, d/dv.
std::array<QuadraticVectorField, 6> sl2_pair_generators();

/// Normal component of a field along C_i = {v = a u}, with respect to the
/// splitting tau = d/du + a d/dv, nu = a d/du - d/dv, as coefficients of
/// (nu, u nu, u^2 nu).
std::array<Rational, 3> normal_component(const QuadraticVectorField& field, const Rational& a);

/// gamma_1..gamma_6: images of the generators under
/// alpha : H^0(Theta_Q) -> sum_i H^0(N_i).
std::array<NormalSectionVector, 6> gamma_vectors(const Configuration& cfg);

/// Reduced echelon basis of span(gamma_2..gamma_6) in the 3n-dimensional
/// ambient. Throws DegenerateConfiguration if the rank is not 5.
RatMatrix alpha_image(const Configuration& cfg);

/// Torus representation on H^1(Theta_Y), computed as the cokernel of alpha
/// one weight block at a time.
WeightRep cokernel_rep(const Configuration& cfg);

/// Torus representation on H^1(N_{C_0/Z}) from the Cech computation on the
/// two summands O(1-n).
WeightRep normal_bundle_rep_c0(int n);

/// H^1(Theta_Z) = rep1 (H^1(Theta_Y)) + rep2 (H^1(N_{C_0})) + rep3 (H^1(N_{conj C_0})).
struct AssembledRep {
  WeightRep rep1;
  WeightRep rep2;
  WeightRep rep3;

  WeightRep total() const { return rep1 + rep2 + rep3; }
  std::size_t dimension() const { return rep1.dimension() + rep2.dimension() + rep3.dimension(); }
  friend bool operator==(const AssembledRep&, const AssembledRep&) = default;
};

AssembledRep assemble(const Configuration& cfg);

/// Same representation read off the closed-form index ranges, with no linear
/// algebra. Throws std::invalid_argument for n < 2.
AssembledRep closed_form_rep(int n);

struct AuditCheck {
  std::string name;
  std::string statement;
  long expected = 0;
  long actual = 0;
  bool passed = false;
};

struct AuditReport {
  int n = 0;
  std::vector<AuditCheck> checks;

  bool all_passed() const;
  /// Throws std::out_of_range for an unknown name.
  const AuditCheck& check(const std::string& name) const;
};

/// Dimension bookkeeping behind dim H^1(Theta_Z) = 7n - 13, recomputed from
/// line bundle cohomology. Failed checks are reported, never thrown.
AuditReport dimension_audit(int n);

}  // namespace twistordef
