#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "equisplit/cohomology.hpp"
#include "equisplit/random.hpp"
#include "equisplit/splitting.hpp"
#include "support.hpp"

using namespace equisplit;
using equisplit::testing::bundle;
using equisplit::testing::mat;
using equisplit::testing::plain_bundle;
using equisplit::testing::torus;
using equisplit::testing::z;

namespace {

// [[z^-1, 1], [0, z^-1]] with lambda0 = (0, -1), a = 1.
EquivariantBundle extension() {
  return bundle(mat({{z(-1), z(0)}, {LaurentPoly{}, z(-1)}}), {Weight{0}, Weight{-1}}, {Weight{-1}, Weight{-2}},
                torus({1}));
}

std::vector<LineSummand> sorted(std::vector<LineSummand> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> degrees(const std::vector<LineSummand>& v) {
  std::vector<int> out;
  for (const auto& s : v) out.push_back(s.n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(MaxTwist, Examples) {
  EXPECT_EQ(max_twist(standard_linearization(3, Weight{0}, torus({1}))), 3);
  EXPECT_EQ(max_twist(plain_bundle(mat({{z(1), z(0)}, {LaurentPoly{}, z(-1)}}))), 0);
  EXPECT_EQ(max_twist(plain_bundle(mat({{z(-2), LaurentPoly{}}, {LaurentPoly{}, z(3)}}))), 2);
}

TEST(EigenSection, Examples) {
  const auto trivial = bundle(LaurentMatrix::identity(2), {Weight{0}, Weight{0}}, {Weight{0}, Weight{0}}, torus({1}));
  const Section s = eigen_section(trivial);
  EXPECT_EQ(*s.weight, Weight{0});
  EXPECT_TRUE(is_global_section(trivial, s));

  // extension(-1) has one section in each of the weights 0 and -1; the tie-break
  // picks the smaller one.
  const auto twisted = twist(extension(), -1, Weight{0});
  Character expected;
  expected.add(Weight{0});
  expected.add(Weight{-1});
  EXPECT_EQ(h0_character(twisted), expected);
  const Section t = eigen_section(twisted);
  EXPECT_EQ(*t.weight, Weight{-1});
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(t.f[i].is_zero() || t.f[i].is_monomial());
    EXPECT_TRUE(t.g[i].is_zero() || t.g[i].is_monomial());
  }

  const Section u = eigen_section(plain_bundle(LaurentMatrix::identity(2)));
  EXPECT_EQ(*u.weight, Weight{});
  EXPECT_THROW(eigen_section(standard_linearization(-1, Weight{0}, torus({1}))), std::domain_error);
}

TEST(Peel, RankOne) {
  const auto step = peel(standard_linearization(2, Weight{4}, torus({1})));
  EXPECT_EQ(step.summand, (LineSummand{2, Weight{4}}));
  EXPECT_EQ(step.quotient.rank(), 0u);
}

TEST(Peel, ExtensionFollowsTieBreak) {
  const auto E = extension();
  const auto step = peel(E);
  EXPECT_EQ(step.summand, (LineSummand{1, Weight{-1}}));
  ASSERT_EQ(step.quotient.rank(), 1u);
  EXPECT_EQ(degree(step.quotient), 1);
  EXPECT_EQ(step.quotient.lambda0, std::vector<Weight>{Weight{0}});
  EXPECT_TRUE(validate(step.quotient).ok());
  const auto frame = step.V.reflected() * E.A * mat_inverse(step.U);
  EXPECT_EQ(frame, step.framed.A);
  EXPECT_EQ(frame(0, 0), z(-1));
  EXPECT_TRUE(frame(1, 0).is_zero());
  EXPECT_EQ(frame.block(1, 1, 1, 1), step.quotient.A);
  EXPECT_EQ(frame.block(0, 1, 1, 1), step.beta);
}

TEST(Peel, DiagonalPicksSmallestWeight) {
  const auto E = bundle(mat({{z(-1), LaurentPoly{}}, {LaurentPoly{}, z(-1)}}), {Weight{5}, Weight{7}},
                        {Weight{4}, Weight{6}}, torus({1}));
  EXPECT_EQ(peel(E).summand, (LineSummand{1, Weight{5}}));
}

TEST(Peel, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, rng() % 3);
    const auto inst = random_instance(rng(), equisplit::testing::random_summands(rng, 1 + rng() % 4, t), t, 8);
    const auto& E = inst.bundle;
    const auto step = peel(E);
    ASSERT_TRUE(mat_det(step.U).is_constant());
    ASSERT_TRUE(mat_det(step.V).is_constant());
    ASSERT_TRUE(step.U.is_polynomial() && step.V.is_polynomial());
    ASSERT_EQ(step.V.reflected() * E.A * mat_inverse(step.U), step.framed.A);
    ASSERT_TRUE(validate(step.framed).ok());
    ASSERT_EQ(step.framed.lambda0[0], step.summand.lam);
    ASSERT_EQ(degree(step.quotient), degree(E) - step.summand.n);
    ASSERT_EQ(step.summand.n, degrees(inst.expected).front());
  }
}

TEST(TriangularClear, Examples) {
  const auto R = bundle(mat({{z(-1), z(0)}, {LaurentPoly{}, z(-1)}}), {Weight{0}, Weight{0}}, {Weight{-1}, Weight{-1}},
                        torus({0}));
  const auto c = triangular_clear(R);
  EXPECT_EQ(c.WInf, LaurentMatrix::identity(2));
  EXPECT_EQ(c.W0inv, mat({{z(0), z(1, -1)}, {LaurentPoly{}, z(0)}}));
  EXPECT_EQ(c.WInf.reflected() * R.A * c.W0inv, mat({{z(-1), LaurentPoly{}}, {LaurentPoly{}, z(-1)}}));

  const auto D = plain_bundle(mat({{z(-2), LaurentPoly{}}, {LaurentPoly{}, z(1)}}));
  const auto d = triangular_clear(D);
  EXPECT_EQ(d.W0, LaurentMatrix::identity(2));
  EXPECT_EQ(d.WInf, LaurentMatrix::identity(2));

  const auto S = plain_bundle(mat({{z(0), z(-3)}, {LaurentPoly{}, z(2)}}));
  const auto s = triangular_clear(S);
  EXPECT_EQ(s.W0, LaurentMatrix::identity(2));
  EXPECT_EQ(s.WInf, mat({{z(0), z(5, -1)}, {LaurentPoly{}, z(0)}}));
  EXPECT_EQ(s.WInf.reflected() * S.A * s.W0inv, mat({{z(0), LaurentPoly{}}, {LaurentPoly{}, z(2)}}));
}

TEST(TriangularClear, RejectsBadShape) {
  EXPECT_THROW(triangular_clear(plain_bundle(mat({{z(1), LaurentPoly{}}, {LaurentPoly{}, z(-1)}}))),
               std::invalid_argument);
  EXPECT_THROW(triangular_clear(plain_bundle(mat({{z(0), LaurentPoly{}}, {z(0), z(0)}}))), std::invalid_argument);
  EXPECT_THROW(triangular_clear(plain_bundle(mat({{z(0, 2), LaurentPoly{}}, {LaurentPoly{}, z(0)}}))),
               std::invalid_argument);
}

TEST(EquivariantSplit, Examples) {
  const auto D = bundle(mat({{z(-2), LaurentPoly{}}, {LaurentPoly{}, z(3)}}), {Weight{0}, Weight{0}},
                        {Weight{-2}, Weight{3}}, torus({1}));
  EXPECT_EQ(sorted(equivariant_split(D).summands), sorted({{2, Weight{0}}, {-3, Weight{0}}}));

  const auto r3 = equivariant_split(extension());
  EXPECT_EQ(sorted(r3.summands), sorted({{1, Weight{0}}, {1, Weight{-1}}}));
  EXPECT_TRUE(verify_certificate(extension(), r3.certificate).ok());

  const auto J = plain_bundle(mat({{z(1), z(0)}, {LaurentPoly{}, z(-1)}}));
  const auto rj = equivariant_split(J);
  EXPECT_EQ(degrees(rj.summands), (std::vector<int>{0, 0}));
  EXPECT_TRUE(verify_certificate(J, rj.certificate).ok());
}

TEST(EquivariantSplit, RecoversHiddenAnswer) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, rng() % 3);
    const auto inst = random_instance(rng(), equisplit::testing::random_summands(rng, 1 + rng() % 4, t), t, 10);
    const auto result = equivariant_split(inst.bundle);
    ASSERT_EQ(degrees(result.summands), degrees(inst.expected));
    if (!t.acts_trivially()) ASSERT_EQ(sorted(result.summands), sorted(inst.expected)) << inst.bundle.A;
    const auto report = verify_certificate(inst.bundle, result.certificate);
    ASSERT_TRUE(report.ok()) << inst.bundle.A;
    for (std::size_t k = 1; k < result.steps.size(); ++k) {
      ASSERT_GE(result.steps[k - 1].summand.n, result.steps[k].summand.n);
    }
  }
}

TEST(EquivariantSplit, GlobalCharacterShift) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, 1 + rng() % 2, false);
    const auto inst = random_instance(rng(), equisplit::testing::random_summands(rng, 1 + rng() % 3, t), t, 6);
    const Weight chi = equisplit::testing::random_summands(rng, 1, t).front().lam;
    auto shifted = inst.bundle;
    for (auto& w : shifted.lambda0) w += chi;
    for (auto& w : shifted.lambdaInf) w += chi;
    auto expected = equivariant_split(inst.bundle).summands;
    for (auto& s : expected) s.lam += chi;
    ASSERT_EQ(sorted(equivariant_split(shifted).summands), sorted(expected));
  }
}

TEST(VerifyCertificate, IdentityAndMutations) {
  const auto D = bundle(mat({{z(-2), LaurentPoly{}}, {LaurentPoly{}, z(1)}}), {Weight{3}, Weight{0}},
                        {Weight{1}, Weight{1}}, torus({1}));
  SplittingCertificate id{{{2, Weight{3}}, {-1, Weight{0}}}, LaurentMatrix::identity(2), LaurentMatrix::identity(2)};
  EXPECT_TRUE(verify_certificate(D, id).ok());

  auto wrong_weight = id;
  wrong_weight.summands[0].lam = Weight{2};
  EXPECT_FALSE(verify_certificate(D, wrong_weight).ok());

  auto unsorted = id;
  std::swap(unsorted.summands[0], unsorted.summands[1]);
  EXPECT_FALSE(verify_certificate(D, unsorted).ok());

  std::mt19937_64 rng(67);
  int caught = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, 1, false);
    const auto inst = random_instance(rng(), equisplit::testing::random_summands(rng, 2 + rng() % 2, t), t, 8);
    auto cert = equivariant_split(inst.bundle).certificate;
    const std::size_t i = rng() % cert.M0.rows(), j = rng() % cert.M0.cols();
    cert.M0(i, j) += z(static_cast<int>(rng() % 3), 1);
    const auto report = verify_certificate(inst.bundle, cert);
    ASSERT_FALSE(report.product && report.equivariance);
    ++caught;
  }
  EXPECT_EQ(caught, 40);
}

TEST(SplittingHom, InverseAndInvariant) {
  const auto E = extension();
  const auto cert = equivariant_split(E).certificate;
  const auto maps = splitting_hom(E, cert);
  const auto ps = compose(maps.p, maps.s);
  EXPECT_EQ(ps.F0, LaurentMatrix::identity(2));
  EXPECT_EQ(ps.FInf, LaurentMatrix::identity(2));
  EXPECT_TRUE(is_bundle_map(maps.s));
  EXPECT_TRUE(is_bundle_map(maps.p));
  const Weight zero{0};
  EXPECT_EQ(weight_project_hom(maps.s, zero).F0, maps.s.F0);
  EXPECT_EQ(weight_project_hom(maps.p, zero).F0, maps.p.F0);

  const auto D = bundle(mat({{z(-1), LaurentPoly{}}, {LaurentPoly{}, z(0)}}), {Weight{0}, Weight{2}},
                        {Weight{-1}, Weight{2}}, torus({1}));
  SplittingCertificate id{{{1, Weight{0}}, {0, Weight{2}}}, LaurentMatrix::identity(2), LaurentMatrix::identity(2)};
  const auto trivial = splitting_hom(D, id);
  EXPECT_EQ(trivial.s.F0, LaurentMatrix::identity(2));
  EXPECT_EQ(trivial.p.FInf, LaurentMatrix::identity(2));

  auto bad = id;
  bad.M0(0, 1) = z(0);
  EXPECT_THROW(splitting_hom(D, bad), std::invalid_argument);
}

TEST(InvariantLift, SurjectiveOnPeelSteps) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, rng() % 2);
    const auto inst = random_instance(rng(), equisplit::testing::random_summands(rng, 2 + rng() % 2, t, 2), t, 6);
    const auto report = invariant_lift(peel(inst.bundle));
    ASSERT_GT(report.target_dim, 0u);
    ASSERT_TRUE(report.surjective()) << inst.bundle.A;
  }
}
