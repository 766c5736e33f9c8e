#include <gtest/gtest.h>

#include <random>

#include "equisplit/serialize.hpp"
#include "support.hpp"

using namespace equisplit;
using equisplit::testing::mat;
using equisplit::testing::z;

TEST(Serialize, BundleRoundTrip) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const TorusAction t = equisplit::testing::random_torus(rng, rng() % 3);
    const auto E = random_instance(rng(), equisplit::testing::random_summands(rng, 1 + rng() % 4, t), t, 8).bundle;
    const Json j = bundle_to_json(E);
    EXPECT_EQ(bundle_from_json(parse_json_text(j.dump())), E);
  }
}

TEST(Serialize, BigCoefficientsUseStrings) {
  LaurentMatrix M(1, 1);
  M(0, 0) = LaurentPoly::monomial(make_rational(mpz_class("123456789012345678901234567890"), mpz_class(7)), -2);
  const Json j = matrix_to_json(M);
  EXPECT_TRUE(j[0][0][0][1].is_string());
  EXPECT_EQ(matrix_from_json(j), M);
}

TEST(Serialize, ParseErrorsCarryPointers) {
  const auto pointer_of = [](const std::string& text) {
    try {
      bundle_from_json(parse_json_text(text));
    } catch (const ParseError& e) {
      return e.pointer();
    }
    return std::string("no error");
  };
  EXPECT_EQ(pointer_of(R"({"torus": {"rank": 0, "a": []}})"), "/rank");
  EXPECT_EQ(pointer_of(R"({"rank": 1, "torus": {"rank": 1, "a": [1]}, "lambda0": [[0]], "lambdaInf": [[0, 1]],
                          "A": [[[[0, 1, 1]]]]})"),
            "/lambdaInf/0");
  EXPECT_EQ(pointer_of(R"({"rank": 1, "torus": {"rank": 1, "a": [1]}, "lambda0": [[0]], "lambdaInf": [[0]],
                          "A": [[[[0, 1, 0]]]]})"),
            "/A/0/0/0/2");
  EXPECT_EQ(pointer_of(R"({"rank": 2, "torus": {"rank": 0, "a": []}, "lambda0": [[], []], "lambdaInf": [[], []],
                          "A": [[[], []], [[]]]})"),
            "/A/1");
  EXPECT_EQ(pointer_of("[1, 2"), "");
}

TEST(Serialize, InstanceExpectedBlock) {
  const Json j = parse_json_text(R"({"rank": 1, "torus": {"rank": 1, "a": [1]}, "lambda0": [[0]],
    "lambdaInf": [[-3]], "A": [[[[-3, 1, 1]]]], "expected": {"summands": [{"n": 3, "lam": [0]}]}})");
  const auto file = instance_from_json(j);
  ASSERT_TRUE(file.expected.has_value());
  EXPECT_EQ(*file.expected, (std::vector<LineSummand>{{3, Weight{0}}}));
}

TEST(Serialize, CharacterAndCertificateRoundTrip) {
  Character chi;
  chi.add(Weight{2, -1}, 3);
  chi.add(Weight{-1, 0}, 1);
  const Json j = character_to_json(chi);
  EXPECT_EQ(j[0]["weight"], Json::array({-1, 0}));
  EXPECT_EQ(character_from_json(j), chi);

  SplittingCertificate cert{{{1, Weight{0}}, {-1, Weight{2}}},
                            mat({{z(0), z(2, make_rational(-3, 2))}, {LaurentPoly{}, z(0)}}),
                            LaurentMatrix::identity(2)};
  const auto back = certificate_from_json(certificate_to_json(cert), 1);
  EXPECT_EQ(back.summands, cert.summands);
  EXPECT_EQ(back.M0, cert.M0);
  EXPECT_EQ(back.MInf, cert.MInf);
}
