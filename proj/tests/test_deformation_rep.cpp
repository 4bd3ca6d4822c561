#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"
#include "twistordef/deformation_rep.hpp"

using namespace twistordef;

namespace {

// gamma_{ik} straight from the coefficient table, block and value per k.
struct GammaEntry {
  SectionBlock block;
  Rational value;
};

GammaEntry gamma_formula(int k, const Rational& a) {
  const Rational den = Rational(1) + a * a;
  switch (k) {
    case 1:
      return {SectionBlock::u_nu, a / den};
    case 2:
      return {SectionBlock::u2_nu, -a / den};
    case 3:
      return {SectionBlock::nu, a / den};
    case 4:
      return {SectionBlock::u_nu, -a / den};
    case 5:
      return {SectionBlock::u2_nu, a * a / den};
    default:
      return {SectionBlock::nu, -Rational(1) / den};
  }
}

RatMatrix gammas_as_rows(const Configuration& cfg) {
  const auto gammas = gamma_vectors(cfg);
  RatMatrix m(0, 3 * cfg.n());
  for (int k = 1; k < 6; ++k) m.append_row(gammas[k].coords());
  return m;
}

Configuration cfg_of(std::vector<Rational> a) { return Configuration(std::move(a)); }

}  // namespace

TEST_CASE("configuration invariants") {
  CHECK_NOTHROW(cfg_of({1, 2}));
  CHECK_THROWS_AS(cfg_of({1}), std::invalid_argument);
  CHECK_THROWS_AS(cfg_of({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cfg_of({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cfg_of({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cfg_of({Rational(-1, 2), 1}), std::invalid_argument);
  CHECK(Configuration::standard(4).parameters()[3] == Rational(4));
  CHECK_THROWS_AS(NormalSectionVector(3, std::vector<Rational>(8)), std::invalid_argument);
}

TEST_CASE("vector field projection reproduces the gamma coefficient table") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 7, rng);
    const auto gammas = gamma_vectors(cfg);
    for (int k = 1; k <= 6; ++k) {
      for (int i = 0; i < cfg.n(); ++i) {
        const GammaEntry e = gamma_formula(k, cfg.parameters()[i]);
        for (auto b : kSectionBlocks) {
          const Rational expected = b == e.block ? e.value : Rational(0);
          REQUIRE(gammas[k - 1].at(b, i) == expected);
        }
      }
    }
  }
}

TEST_CASE("gamma vectors for n=3, a=(1,2,3)") {
  const auto g = gamma_vectors(Configuration::standard(3));
  const std::vector<Rational> nu3(g[2].block(SectionBlock::nu).begin(), g[2].block(SectionBlock::nu).end());
  CHECK(nu3 == std::vector<Rational>{Rational(1, 2), Rational(2, 5), Rational(3, 10)});
  CHECK(g[2].support() == std::vector<SectionBlock>{SectionBlock::nu});
  const std::vector<Rational> nu6(g[5].block(SectionBlock::nu).begin(), g[5].block(SectionBlock::nu).end());
  CHECK(nu6 == std::vector<Rational>{Rational(-1, 2), Rational(-1, 5), Rational(-1, 10)});
  CHECK(g[0] == -g[3]);
}

TEST_CASE("gamma_1 + gamma_4 = 0 and each gamma lives in one weight block") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gamma_vectors(random_configuration(2 + trial % 10, rng));
    REQUIRE((g[0] + g[3]).is_zero());
    for (const auto& v : g) REQUIRE(v.support().size() == 1);
  }
}

TEST_CASE("image of alpha has rank 5") {
  CHECK(alpha_image(Configuration::standard(3)).rows() == 5);

  const Configuration two = cfg_of({1, 2});
  CHECK(oracle::rank_by_minors(gammas_as_rows(two)) == 5);
  CHECK(alpha_image(two).rows() == 5);

  const Configuration four = cfg_of({Rational(1, 2), 1, Rational(3, 2), 7});
  CHECK(oracle::rank_by_minors(gammas_as_rows(four)) == 5);
  CHECK(alpha_image(four).rows() == 5);
}

TEST_CASE("rank 5 across random configurations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 29, rng);
    REQUIRE(alpha_image(cfg).rows() == 5);
  }
}

TEST_CASE("cokernel representation") {
  CHECK(cokernel_rep(Configuration::standard(3)) == WeightRep{{0, 0}, {0, 0}, {1, 0}, {-1, 0}});
  const WeightRep two = cokernel_rep(cfg_of({1, 2}));
  CHECK(two == WeightRep{{0, 0}});
  CHECK(two.dimension() == 1);

  WeightRep six;
  six.add({0, 0}, 5);
  six.add({1, 0}, 4);
  six.add({-1, 0}, 4);
  CHECK(cokernel_rep(Configuration::standard(6)) == six);
}

TEST_CASE("normal bundle representation of C_0") {
  CHECK(normal_bundle_rep_c0(3) == WeightRep{{-2, 1}, {-1, 1}});
  CHECK(normal_bundle_rep_c0(2).empty());
  CHECK(normal_bundle_rep_c0(5) == WeightRep{{-4, 1}, {-3, 1}, {-2, 1}, {-3, 1}, {-2, 1}, {-1, 1}});
  CHECK_THROWS_AS(normal_bundle_rep_c0(1), std::invalid_argument);
}

TEST_CASE("assembled representation") {
  const AssembledRep three = assemble(Configuration::standard(3));
  CHECK(three.total() == WeightRep{{0, 0}, {0, 0}, {1, 0}, {-1, 0}, {-2, 1}, {-1, 1}, {2, -1}, {1, -1}});
  CHECK(three.dimension() == 8);
  CHECK(assemble(Configuration::standard(10)).dimension() == 57);

  const AssembledRep two = assemble(cfg_of({1, 2}));
  CHECK(two.total() == WeightRep{{0, 0}});
}

TEST_CASE("closed form representation") {
  CHECK(closed_form_rep(3) == assemble(Configuration::standard(3)));
  CHECK(closed_form_rep(4).rep3 == WeightRep{{3, -1}, {2, -1}, {2, -1}, {1, -1}});
  const AssembledRep two = closed_form_rep(2);
  CHECK(two.rep1 == WeightRep{{0, 0}});
  CHECK(two.rep2.empty());
  CHECK(two.rep3.empty());
  CHECK_THROWS_AS(closed_form_rep(1), std::invalid_argument);
}

TEST_CASE("assemble equals closed form on 200 random configurations") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(2, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = pick_n(rng);
    const AssembledRep rep = assemble(random_configuration(n, rng));
    REQUIRE(rep == closed_form_rep(n));
    REQUIRE(rep.dimension() == static_cast<std::size_t>(7 * n - 13));
    REQUIRE(rep.rep1.dimension() == static_cast<std::size_t>(3 * n - 5));
    REQUIRE(rep.rep2.dimension() == static_cast<std::size_t>(2 * n - 4));
    REQUIRE(rep.rep3 == negate_rep(rep.rep2));
    REQUIRE(negate_rep(rep.total()) == rep.total());
  }
}

TEST_CASE("dimension audit") {
  const AuditReport four = dimension_audit(4);
  CHECK(four.all_passed());
  CHECK(four.check("normal_summand_h1").actual == 2);
  CHECK(four.check("normal_bundle_h1_total").actual == 8);
  CHECK(dimension_audit(3).check("extension_group_vanishes").actual == 0);
  CHECK(dimension_audit(2).check("h1_theta_y").actual == 1);
  CHECK(dimension_audit(2).all_passed());
  for (int n = 2; n <= 15; ++n) REQUIRE(dimension_audit(n).all_passed());
  CHECK_THROWS_AS(four.check("nonexistent"), std::out_of_range);
  CHECK_THROWS_AS(dimension_audit(1), std::invalid_argument);
}
