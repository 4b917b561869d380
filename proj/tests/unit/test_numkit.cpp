#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "sixv/error.hpp"
#include "sixv/numkit.hpp"
#include "sixv/params.hpp"

using namespace sixv;

namespace {

CMatrix random_matrix(Eigen::Index n, Sampler& s) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = s.uniform();
  }
  return m;
}

}  // namespace

TEST(Kron, MatchesBlockDefinition) {
  Sampler s(1);
  const CMatrix a = random_matrix(2, s);
  const CMatrix b = random_matrix(3, s);
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_LT((k.block(3 * i, 3 * j, 3, 3) - a(i, j) * b).norm(), 1e-15);
    }
  }
}

TEST(Kron, MixedProductProperty) {
  Sampler s(2);
  const CMatrix a = random_matrix(2, s), b = random_matrix(2, s), c = random_matrix(2, s), d = random_matrix(2, s);
  EXPECT_LT((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm(), 1e-13);
}

TEST(Kron, AllOfThreeFactorsIsAssociative) {
  Sampler s(3);
  const std::vector<CMatrix> f{random_matrix(2, s), random_matrix(2, s), random_matrix(2, s)};
  EXPECT_LT((kron_all(f) - kron(kron(f[0], f[1]), f[2])).norm(), 1e-14);
}

TEST(OpNorm, DiagonalMatrix) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = cplx(0, -5.0);
  m(2, 2) = 1.0;
  EXPECT_NEAR(op_norm(m), 5.0, 1e-14);
}

TEST(EigGeneral, BiorthonormalTriples) {
  Sampler s(4);
  const CMatrix m = random_matrix(6, s);
  const auto triples = eig_general(m);
  ASSERT_EQ(triples.size(), 6u);
  for (const auto& t : triples) {
    EXPECT_LT((m * t.right - t.value * t.right).norm(), 1e-11);
    EXPECT_LT((t.left.transpose() * m - t.value * t.left.transpose()).norm(), 1e-10 * t.left.norm());
    EXPECT_NEAR(std::abs(cplx(t.left.transpose() * t.right) - 1.0), 0.0, 1e-11);
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = 0; j < triples.size(); ++j) {
      if (i == j) continue;
      EXPECT_LT(std::abs(cplx(triples[i].left.transpose() * triples[j].right)), 1e-9);
    }
  }
}

TEST(EigGeneral, SortedLexicographically) {
  Sampler s(5);
  const auto triples = eig_general(random_matrix(5, s));
  for (std::size_t i = 1; i < triples.size(); ++i) {
    const cplx a = triples[i - 1].value, b = triples[i].value;
    EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag()));
  }
}

TEST(EigGeneral, RejectsOversizedInput) {
  EXPECT_THROW(eig_general(CMatrix::Identity(8, 8), 4), Error);
}

TEST(CPoly, EvaluationAndDerivative) {
  const CPoly p(std::vector<cplx>{1.0, cplx(0, 2), 3.0});
  const cplx x(0.3, -0.7);
  EXPECT_LT(std::abs(p(x) - (1.0 + cplx(0, 2) * x + 3.0 * x * x)), 1e-15);
  EXPECT_LT(std::abs(p.derivative()(x) - (cplx(0, 2) + 6.0 * x)), 1e-15);
}

TEST(CPoly, ProductAndDifference) {
  const CPoly p(std::vector<cplx>{1.0, 1.0});
  const CPoly q(std::vector<cplx>{-1.0, 1.0});
  const CPoly pq = p * q;
  ASSERT_EQ(pq.degree(), 2);
  EXPECT_LT(std::abs(pq.coeffs()[0] + 1.0), 1e-15);
  EXPECT_LT(std::abs(pq.coeffs()[1]), 1e-15);
  EXPECT_LT(std::abs(pq.coeffs()[2] - 1.0), 1e-15);
  EXPECT_LT(std::abs((p - q)(cplx(0.4, 0.1)) - 2.0), 1e-15);
}

TEST(CPoly, TrimmedDropsNegligibleLeadingTerms) {
  const CPoly p(std::vector<cplx>{1.0, 2.0, 1e-20});
  EXPECT_EQ(p.trimmed(1e-15).degree(), 1);
}

TEST(FitPoly, RecoversCoefficientsFromCircleNodes) {
  const std::vector<cplx> truth{cplx(0.5, 0.1), cplx(-1.0, 0.3), cplx(0.2, -0.7), cplx(1.1, 0.0)};
  const CPoly p(truth);
  std::vector<Sample> samples;
  for (const cplx x : circle_nodes(4, 1.3)) samples.push_back({x, p(x)});
  const CPoly fit = fit_poly(samples, 3);
  for (std::size_t k = 0; k < truth.size(); ++k) EXPECT_LT(std::abs(fit.coeffs()[k] - truth[k]), 1e-13);
}

TEST(FitPoly, IllConditionedSystemThrows) {
  std::vector<Sample> samples{{1.0, 1.0}, {1.0 + 1e-15, 2.0}};
  try {
    fit_poly(samples, 1);
    FAIL() << "expected SingularSystem";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
  }
}

TEST(PolyRoots, RoundTripThroughFromRoots) {
  const std::vector<cplx> roots{cplx(0.3, 0.2), cplx(-1.2, 0.5), cplx(0.0, -0.8), cplx(2.0, 0.1)};
  auto found = poly_roots(CPoly::from_roots(roots));
  ASSERT_EQ(found.size(), roots.size());
  for (const cplx r : roots) {
    double best = 1e9;
    for (const cplx f : found) best = std::min(best, std::abs(f - r));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(PolyRoots, ConstantPolynomialThrowsDegreeZero) {
  try {
    poly_roots(CPoly(std::vector<cplx>{3.0}));
    FAIL() << "expected DegreeZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
  }
}

TEST(CircleNodes, LieOnTheCircle) {
  const auto xs = circle_nodes(7, 1.3, 0.1);
  ASSERT_EQ(xs.size(), 7u);
  for (const cplx x : xs) EXPECT_NEAR(std::abs(x), 1.3, 1e-15);
  EXPECT_NEAR(std::arg(xs[0]), 0.1, 1e-15);
}
