#include <gtest/gtest.h>

#include "sixv/error.hpp"
#include "sixv/params.hpp"

using namespace sixv;

TEST(Sampler, DeterministicForAFixedSeed) {
  Sampler a(42), b(42);
  EXPECT_EQ(a.uniform(5), b.uniform(5));
}

TEST(Sampler, DrawsStayInsideTheUnitRectangle) {
  Sampler s(7);
  for (const cplx z : s.uniform(500)) {
    EXPECT_LE(std::abs(z.real()), 1.0);
    EXPECT_LE(std::abs(z.imag()), 1.0);
  }
}

TEST(Sampler, ModelDrawsAreGeneric) {
  Sampler s(11);
  for (int t = 0; t < 20; ++t) {
    const ModelParams p = s.model(5, {0.5, 0.3});
    EXPECT_TRUE(is_generic(p));
    EXPECT_NO_THROW(validate(p));
  }
}

TEST(Sampler, PointsAvoidGivenValues) {
  Sampler s(12);
  const ModelParams p = s.model(3, {0.5, 0.3});
  const std::vector<cplx> avoid{0.1, -0.2};
  const auto pt = s.point(4, p, avoid);
  EXPECT_TRUE(is_generic_point(pt, p));
}

TEST(Sampler, ImpossibleGenericityReportsExhaustion) {
  Sampler s(13);
  try {
    s.model(3, {0.5, 0.3}, 10.0, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenericityExhausted);
  }
}

TEST(Validate, RejectsSizeOutOfRangeAndWrongMuLength) {
  EXPECT_THROW(validate(ModelParams{9, {0.5, 0.3}, std::vector<cplx>(9), 0}), Error);
  EXPECT_THROW(validate(ModelParams{0, {0.5, 0.3}, {}, 0}), Error);
  EXPECT_THROW(validate(ModelParams{3, {0.5, 0.3}, std::vector<cplx>(2), 0}), Error);
}

TEST(Genericity, CoincidingInhomogeneitiesAreNotGeneric) {
  const ModelParams p{2, {0.5, 0.3}, {0.1, 0.1}, 0};
  EXPECT_FALSE(is_generic(p));
}

TEST(Genericity, PointHittingAPoleIsRejected) {
  const ModelParams p{2, {0.5, 0.3}, {0.1, -0.2}, 0};
  const std::vector<cplx> bad{0.1};
  EXPECT_FALSE(is_generic_point(bad, p));
}
