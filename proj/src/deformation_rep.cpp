#include "twistordef/deformation_rep.hpp"

#include <algorithm>
#include <utility>

#include "twistordef/cohomology.hpp"

namespace twistordef {

namespace {

constexpr std::size_t kImageRank = 5;

RatMatrix gamma_matrix(const Configuration& cfg) {
  const auto gammas = gamma_vectors(cfg);
  RatMatrix m(0, static_cast<std::size_t>(3 * cfg.n()));
  for (std::size_t k = 1; k < gammas.size(); ++k) m.append_row(gammas[k].coords());
  return m;
}

// Adds (s, t_exp) for s running from first_s to last_s inclusive.
void add_range(WeightRep& rep, int first_s, int last_s, int t_exp, int step) {
  for (int s = first_s; step > 0 ? s <= last_s : s >= last_s; s += step) rep.add({s, t_exp});
}

}  // namespace

Configuration::Configuration(std::vector<Rational> a) : a_(std::move(a)) {
  if (a_.size() < 2)
    throw std::invalid_argument("configuration needs n >= 2 parameters, got " + std::to_string(a_.size()));
  if (a_.front().sign() <= 0)
    throw std::invalid_argument("configuration parameters must be positive");
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (!(a_[i - 1] < a_[i]))
      throw std::invalid_argument("configuration parameters must be strictly increasing");
}

Configuration Configuration::standard(int n) {
  std::vector<Rational> a;
  for (int i = 1; i <= n; ++i) a.emplace_back(i);
  return Configuration(std::move(a));
}

std::string Configuration::to_string() const {
  std::string out = "n=" + std::to_string(n()) + " a=(";
  for (std::size_t i = 0; i < a_.size(); ++i) out += (i ? ", " : "") + a_[i].to_string();
  return out + ")";
}

Configuration random_configuration(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 50);
  std::vector<Rational> a;
  Rational acc(0);
  for (int i = 0; i < n; ++i) {
    acc += Rational(dist(rng), dist(rng));
    a.push_back(acc);
  }
  return Configuration(std::move(a));
}

Weight block_weight(SectionBlock block) {
  switch (block) {
    case SectionBlock::nu:
      return {1, 0};
    case SectionBlock::u_nu:
      return {0, 0};
    case SectionBlock::u2_nu:
      return {-1, 0};
  }
  throw std::logic_error("unknown section block");
}

NormalSectionVector::NormalSectionVector(int n) : n_(n), coords_(static_cast<std::size_t>(3 * n)) {}

NormalSectionVector::NormalSectionVector(int n, std::vector<Rational> coords)
    : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(3 * n))
    throw std::invalid_argument("normal section vector needs 3n = " + std::to_string(3 * n) +
                                " coordinates, got " + std::to_string(coords_.size()));
}

std::span<const Rational> NormalSectionVector::block(SectionBlock b) const {
  return std::span<const Rational>(coords_).subspan(static_cast<std::size_t>(b) * n_, n_);
}

Rational& NormalSectionVector::at(SectionBlock b, int curve) {
  return coords_.at(static_cast<std::size_t>(b) * n_ + curve);
}

const Rational& NormalSectionVector::at(SectionBlock b, int curve) const {
  return coords_.at(static_cast<std::size_t>(b) * n_ + curve);
}

std::vector<SectionBlock> NormalSectionVector::support() const {
  std::vector<SectionBlock> out;
  for (auto b : kSectionBlocks) {
    const auto entries = block(b);
    if (std::any_of(entries.begin(), entries.end(), [](const Rational& r) { return !r.is_zero(); }))
      out.push_back(b);
  }
  return out;
}

bool NormalSectionVector::is_zero() const { return support().empty(); }

NormalSectionVector& NormalSectionVector::operator+=(const NormalSectionVector& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("normal section vectors of different n");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

NormalSectionVector NormalSectionVector::operator-() const {
  NormalSectionVector out(n_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
  return out;
}

std::array<QuadraticVectorField, 6> sl2_pair_generators() {
  const Rational z(0), one(1), minus_one(-1);
  return {{
      {{z, one, z}, {z, z, z}},        // u d/du
      {{z, z, minus_one}, {z, z, z}},  // -u^2 d/du
      {{one, z, z}, {z, z, z}},        // d/du
      {{z, z, z}, {z, one, z}},        // v d/dv
      {{z, z, z}, {z, z, minus_one}},  // -v^2 d/dv
      {{z, z, z}, {one, z, z}},        // d/dv
  }};
}

std::array<Rational, 3> normal_component(const QuadraticVectorField& field, const Rational& a) {
  // On C_i, v = a u. Writing g d/du + h d/dv = alpha tau + beta nu gives
  // beta = (a g - h) / (1 + a^2), a polynomial of degree <= 2 in u.
  const Rational scale = Rational(1) / (Rational(1) + a * a);
  std::array<Rational, 3> beta;
  Rational a_pow(1);
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational h_k = field.dv[k] * a_pow;  // h(a u) = sum dv[k] a^k u^k
    beta[k] = (a * field.du[k] - h_k) * scale;
    a_pow *= a;
  }
  return beta;
}

std::array<NormalSectionVector, 6> gamma_vectors(const Configuration& cfg) {
  const int n = cfg.n();
  const auto generators = sl2_pair_generators();
  std::array<NormalSectionVector, 6> gammas{
      NormalSectionVector(n), NormalSectionVector(n), NormalSectionVector(n),
      NormalSectionVector(n), NormalSectionVector(n), NormalSectionVector(n)};
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const auto beta = normal_component(generators[k], cfg.parameters()[i]);
      for (auto b : kSectionBlocks) gammas[k].at(b, i) = beta[static_cast<std::size_t>(b)];
    }
  }
  return gammas;
}

RatMatrix alpha_image(const Configuration& cfg) {
  RatMatrix basis = row_space_basis(gamma_matrix(cfg));
  if (basis.rows() != kImageRank)
    throw DegenerateConfiguration("image of alpha has rank " + std::to_string(basis.rows()) +
                                  ", expected 5 for " + cfg.to_string());
  return basis;
}

WeightRep cokernel_rep(const Configuration& cfg) {
  const int n = cfg.n();
  const RatMatrix image = alpha_image(cfg);

  // The image is torus-invariant, so it splits along the weight blocks and
  // its projection to each block equals its intersection with that block.
  WeightRep rep;
  std::size_t rank_sum = 0;
  for (auto b : kSectionBlocks) {
    const RatMatrix projected = image.column_block(static_cast<std::size_t>(b) * n, n);
    const std::size_t block_rank = rank(projected);
    rank_sum += block_rank;
    rep.add(block_weight(b), quotient_dimension(static_cast<std::size_t>(n), projected));
  }
  if (rank_sum != image.rows())
    throw std::logic_error("image of alpha is not a sum of weight subspaces");
  return rep;
}

WeightRep normal_bundle_rep_c0(int n) {
  if (n < 2) throw std::invalid_argument("normal bundle representation needs n >= 2");
  // N_{C_0/Z} = O(1-n) + O(1-n); fiber coordinates z/y over u = 0 and
  // z/(u^-1 y) over u = infinity.
  const EquivariantChart over_zero{{-n, 1}};
  const EquivariantChart over_infinity{{1 - n, 1}};
  return cech_h1_weights(1 - n, over_zero) + cech_h1_weights(1 - n, over_infinity);
}

AssembledRep assemble(const Configuration& cfg) {
  AssembledRep out;
  out.rep1 = cokernel_rep(cfg);
  out.rep2 = normal_bundle_rep_c0(cfg.n());
  out.rep3 = negate_rep(out.rep2);
  return out;
}

AssembledRep closed_form_rep(int n) {
  if (n < 2) throw std::invalid_argument("closed-form representation needs n >= 2");
  AssembledRep out;
  out.rep1.add({0, 0}, n - 1);
  out.rep1.add({1, 0}, n - 2);
  out.rep1.add({-1, 0}, n - 2);

  add_range(out.rep2, 1 - n, -2, 1, 1);
  add_range(out.rep2, 2 - n, -1, 1, 1);

  add_range(out.rep3, n - 1, 2, -1, -1);
  add_range(out.rep3, n - 2, 1, -1, -1);
  return out;
}

bool AuditReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

const AuditCheck& AuditReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no audit check named " + name);
}

AuditReport dimension_audit(int n) {
  if (n < 2) throw std::invalid_argument("dimension audit needs n >= 2");
  AuditReport report;
  report.n = n;
  auto record = [&](std::string name, std::string statement, long expected, long actual) {
    report.checks.push_back({std::move(name), std::move(statement), expected, actual, expected == actual});
  };

  record("extension_group_vanishes", "h^1(O_Q(1,n-1) + O_Q(n-1,1)) = 0, so pi_* O_Y(E + conj E) splits",
         0, h_q(1, n - 1, 1) + h_q(n - 1, 1, 1));

  for (int i = 1; i <= 2; ++i) {
    record("relative_tangent_h" + std::to_string(i),
           "h^" + std::to_string(i) + "(O_Q + O_Q(-1,1-n) + O_Q(1-n,-1)) = 0, so H^i(Theta_Y) = H^i(F)",
           0, h_q(0, 0, i) + h_q(-1, 1 - n, i) + h_q(1 - n, -1, i));
  }

  const long theta_q_h0 = h_q(2, 0, 0) + h_q(0, 2, 0);
  record("theta_q_h0", "h^0(Theta_Q) = dim sl(2) + sl(2)", 6, theta_q_h0);
  record("theta_q_higher", "h^1(Theta_Q) + h^2(Theta_Q) = 0",
         0, h_q(2, 0, 1) + h_q(0, 2, 1) + h_q(2, 0, 2) + h_q(0, 2, 2));

  // N_{C_i/Q} = O(2) for a (1,1)-curve on Q.
  const long normal_h0 = n * h_p1(2, 0);
  record("normal_sections_h0", "sum_i h^0(N_{C_i/Q}) = 3n", 3L * n, normal_h0);
  record("normal_sections_h1", "sum_i h^1(N_{C_i/Q}) = 0", 0, n * h_p1(2, 1));

  const long image_rank = static_cast<long>(rank(gamma_matrix(Configuration::standard(n))));
  record("alpha_image_rank", "rank of alpha : H^0(Theta_Q) -> sum_i H^0(N_i) is 6 - 1 = 5", 5, image_rank);
  record("h0_F", "h^0(F) = h^0(Theta_Q) - rank(alpha) = 1", 1, theta_q_h0 - image_rank);

  const long h1_theta_y = normal_h0 - image_rank;
  record("h1_theta_y", "h^1(Theta_Y) = h^1(F) = 3n - image rank = 3n - 5", 3L * n - 5, h1_theta_y);

  const long summand_h1 = h_p1(1 - n, 1);
  record("normal_summand_h1", "h^1(O(1-n)) = n - 2 per summand of N_{C_0/Z}", n - 2L, summand_h1);
  const long normal_total = 2 * 2 * summand_h1;
  record("normal_bundle_h1_total", "h^1(N_{C_0/Z}) + h^1(N_{conj C_0/Z}) = 2 * 2 * (n - 2)", 4L * (n - 2),
         normal_total);

  record("h1_theta_z", "h^1(Theta_Z) = (3n - 5) + 4(n - 2) = 7n - 13", 7L * n - 13, h1_theta_y + normal_total);
  record("h2_theta_z", "h^2(Theta_Z) = 0 since H^2(Theta_Y) = H^2(Theta_Q) = 0 and normal bundles live on curves",
         0, h_q(2, 0, 2) + h_q(0, 2, 2));
  return report;
}

}  // namespace twistordef
