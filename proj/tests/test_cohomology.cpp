#include <gtest/gtest.h>

#include <random>

#include "equisplit/cohomology.hpp"
#include "equisplit/random.hpp"
#include "support.hpp"

using namespace equisplit;
using equisplit::testing::mat;
using equisplit::testing::plain_bundle;
using equisplit::testing::torus;
using equisplit::testing::z;

namespace {

EquivariantBundle random_valid_bundle(std::mt19937_64& rng, std::size_t max_rank = 4, int ops = 8) {
  const TorusAction t = equisplit::testing::random_torus(rng, rng() % 3);
  return random_instance(rng(), equisplit::testing::random_summands(rng, 1 + rng() % max_rank, t), t, ops).bundle;
}

}  // namespace

TEST(H0Sections, LineBundles) {
  const TorusAction t = torus({2});
  for (int n = -3; n <= 4; ++n) {
    const LineSummand s{n, Weight{5}};
    const auto L = standard_linearization(n, s.lam, t);
    const auto sections = h0_sections(L);
    ASSERT_EQ(sections.size(), static_cast<std::size_t>(std::max(0, n + 1)));
    for (const auto& sec : sections) ASSERT_TRUE(is_global_section(L, sec));
    Character expected;
    for (int d = 0; d <= n; ++d) expected.add(Weight{5 - 2 * d});
    EXPECT_EQ(h0_character(L), expected);
  }
}

TEST(H0Sections, JumpInstanceHasTwoSections) {
  const auto E = plain_bundle(mat({{z(1), z(0)}, {LaurentPoly{}, z(-1)}}));
  const auto sections = h0_sections(E);
  EXPECT_EQ(sections.size(), 2u);
  for (const auto& s : sections) {
    EXPECT_TRUE(is_global_section(E, s));
    EXPECT_EQ(*s.weight, Weight{});
  }
}

TEST(H0Sections, SumOfLineBundlesCharacter) {
  const TorusAction t = torus({1});
  const auto E = direct_sum(standard_linearization(1, Weight{0}, t), standard_linearization(0, Weight{0}, t));
  Character expected;
  expected.add(Weight{0}, 2);
  expected.add(Weight{-1}, 1);
  EXPECT_EQ(h0_character(E), expected);
}

TEST(H1Character, LineBundles) {
  const TorusAction t = torus({1});
  Character expected;
  expected.add(Weight{1});
  EXPECT_EQ(h1_character(standard_linearization(-2, Weight{0}, t)), expected);
  for (int n = -1; n <= 3; ++n) EXPECT_TRUE(h1_character(standard_linearization(n, Weight{0}, t)).empty());
  for (int n = -6; n <= 2; ++n) {
    const LineSummand s{n, Weight{1}};
    EXPECT_EQ(h1_character(standard_linearization(n, s.lam, torus({-3}))), line_h1_character(s, torus({-3})));
  }
}

TEST(EulerCheck, LineBundlesAndBoundary) {
  for (int n = -5; n <= 5; ++n) {
    const auto r = euler_check(standard_linearization(n, Weight{0}, torus({1})));
    EXPECT_TRUE(r.ok()) << n;
  }
  const auto r = euler_check(standard_linearization(-2, Weight{0}, torus({1})));
  EXPECT_EQ(r.h1, 1);
  EXPECT_EQ(r.serre_dual_h0, 1);
}

TEST(EulerCheck, RandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto E = random_valid_bundle(rng);
    const auto r = euler_check(E);
    ASSERT_TRUE(r.riemann_roch) << E.A.to_string();
    ASSERT_TRUE(r.serre_duality) << E.A.to_string();
  }
}

TEST(Cohomology, CechKernelMatchesAdjugateKernel) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto E = random_valid_bundle(rng);
    const auto cech = cech_cohomology(E);
    ASSERT_EQ(cech.kernel, h0_character(E)) << E.A.to_string();
    ASSERT_EQ(static_cast<std::size_t>(cech.kernel.dimension()), h0_dimension(E));
  }
}

TEST(Cohomology, SectionsAreHomogeneousAndCompatible) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto E = random_valid_bundle(rng);
    for (const auto& s : h0_sections(E)) ASSERT_TRUE(is_global_section(E, s));
  }
}

TEST(Cohomology, TwistMonotonicityAndFunctoriality) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto E = random_valid_bundle(rng, 3, 6);
    const Weight zero = Weight::zero(E.torus.rank());
    std::size_t previous = h0_dimension(E);
    for (int k = 1; k <= 4; ++k) {
      const std::size_t now = h0_dimension(twist(E, -k, zero));
      ASSERT_LE(now, previous);
      previous = now;
    }
    const auto F = random_instance(rng(), equisplit::testing::random_summands(rng, 2, E.torus), E.torus, 5).bundle;
    ASSERT_EQ(h0_character(direct_sum(E, F)), h0_character(E) + h0_character(F));
    ASSERT_EQ(h1_character(direct_sum(E, F)), h1_character(E) + h1_character(F));
  }
}

TEST(Cohomology, WindowCapIsEnforced) {
  const auto E = standard_linearization(-4, Weight{0}, torus({1}));
  CechOptions tight;
  tight.max_window = 1;
  EXPECT_THROW(cech_cohomology(E, tight), std::runtime_error);
}

TEST(Cohomology, RejectsInvalidBundles) {
  const auto bad = equisplit::testing::bundle(mat({{z(-1)}}), {Weight{0}}, {Weight{0}}, torus({1}));
  EXPECT_THROW(h0_sections(bad), std::invalid_argument);
  EXPECT_THROW(cech_cohomology(bad), std::invalid_argument);
}
