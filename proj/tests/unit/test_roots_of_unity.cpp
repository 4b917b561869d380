#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sixv/error.hpp"
#include "sixv/roots_of_unity.hpp"
#include "sixv/vertex_core.hpp"

using namespace sixv;

namespace {

struct Scenario {
  RootOfUnitySpec spec;
  ModelParams p;
  std::vector<SpectralData> data;
};

Scenario prepare(int k, int l, int L, std::uint64_t seed, bool zeros = true) {
  Sampler s(seed);
  const RootOfUnitySpec spec = make_root_of_unity(k, l);
  Scenario out{spec, s.model(L, spec.gamma()), {}};
  const TransferSpectrum ts(out.p, s);
  for (const auto& st : ts.states()) {
    if (zeros) {
      out.data.push_back(extract_zeros(st, out.p, s));
    } else {
      out.data.push_back(SpectralData{st, 0.0, {}, std::nullopt, 0.0});
    }
  }
  return out;
}

}  // namespace

TEST(RootOfUnitySpec, ConstructionAndCondition) {
  const auto spec = make_root_of_unity(1, 3);
  EXPECT_LT(std::abs(spec.gamma() - cplx(0.0, std::numbers::pi / 3)), 1e-15);
  EXPECT_LT(root_condition_residual(spec), 1e-12);
  EXPECT_FALSE(spec.conjectural());
  EXPECT_TRUE(make_root_of_unity(2, 5).conjectural());
}

TEST(RootOfUnitySpec, RejectsTrivialAndNonCoprimeOrders) {
  EXPECT_THROW(make_root_of_unity(1, 1), Error);
  EXPECT_THROW(make_root_of_unity(2, 4), Error);
}

TEST(Truncation, ProductOfShiftedBOperatorsVanishes) {
  Sampler s(600);
  for (int l = 2; l <= 4; ++l) {
    for (int L = 2; L <= 5; ++L) {
      const auto spec = make_root_of_unity(1, l);
      const ModelParams p = s.model(L, spec.gamma());
      EXPECT_TRUE(check_truncation(spec, s.uniform(), p).passed()) << "l=" << l << " L=" << L;
    }
  }
}

TEST(Truncation, ShorterProductDoesNotVanish) {
  Sampler s(601);
  const auto spec = make_root_of_unity(1, 3);
  const ModelParams p = s.model(3, spec.gamma());
  const cplx l = s.uniform();
  const CMatrix b0 = monodromy(l, p).b_op;
  const CMatrix b1 = monodromy(l - p.gamma, p).b_op;
  EXPECT_GT(op_norm(b0 * b1) / (op_norm(b0) * op_norm(b1)), 1e-3);
}

TEST(Inversion, FreeFermionPointEveryState) {
  for (int L = 2; L <= 4; ++L) {
    const Scenario su = prepare(1, 2, L, 610 + L, false);
    Sampler s(620 + L);
    for (const auto& d : su.data) {
      EXPECT_TRUE(check_inversion_l2(d.state, su.spec, su.p, s).passed()) << "L=" << L;
    }
  }
}

TEST(Inversion, HomogeneousRightHandSide) {
  const auto spec = make_root_of_unity(1, 2);
  const ModelParams p{3, spec.gamma(), {0.0, 0.0, 0.0}, 0};
  Sampler s(630);
  const TransferSpectrum ts(p, s);
  for (const auto& st : ts.states()) EXPECT_TRUE(check_inversion_l2(st, spec, p, s).passed());
}

TEST(Bethe, HoldsForOrdersTwoAndThree) {
  for (int l = 2; l <= 3; ++l) {
    for (int L = 2; L <= 4; ++L) {
      const Scenario su = prepare(1, l, L, 640 + 10 * l + L);
      for (const auto& d : su.data) {
        EXPECT_TRUE(check_bethe(d, su.spec, su.p).passed()) << "l=" << l << " L=" << L;
      }
    }
  }
}

TEST(Bethe, SelfFactorIsMinusOne) {
  const Scenario su = prepare(1, 3, 3, 650);
  for (const auto& d : su.data) {
    const auto with_self = bethe_residual(d, su.p);
    const auto without = bethe_residual_excluding_self(d, su.p);
    ASSERT_EQ(with_self.size(), without.size());
    for (std::size_t i = 0; i < with_self.size(); ++i) {
      EXPECT_LT(with_self[i], 1e-6);
      EXPECT_GT(without[i], 1e-3);
    }
  }
}

TEST(Bethe, OrderFiveIsRecordedAsConjectureEvidence) {
  const Scenario su = prepare(1, 5, 3, 660);
  for (const auto& d : su.data) {
    const CheckReport r = check_bethe(d, su.spec, su.p);
    EXPECT_EQ(r.records.front().verdict, Verdict::ConjectureEvidence);
    EXPECT_TRUE(r.passed());
  }
}

TEST(OrderThree, ExplicitAndCoefficientForms) {
  for (int L = 2; L <= 3; ++L) {
    const Scenario su = prepare(1, 3, L, 670 + L);
    Sampler s(680 + L);
    for (const auto& d : su.data) {
      const CheckReport r = check_l3_relation(d, su.spec, su.p, s);
      EXPECT_TRUE(r.passed()) << "L=" << L << " max=" << r.max_residual();
    }
  }
}

TEST(OrderFour, FourTermRelationHolds) {
  for (int L : {2, 3, 4}) {
    const Scenario su = prepare(1, 4, L, 690 + L);
    Sampler s(700 + L);
    for (const auto& d : su.data) {
      const CheckReport r = check_l4_relation(d, su.spec, su.p, s);
      for (const auto& rec : r.records) {
        if (rec.name == "l4_relation" || rec.name == "q_signed_periodicity") {
          EXPECT_EQ(rec.verdict, Verdict::Pass) << rec.name << " L=" << L;
        }
      }
    }
  }
}

// Q picks up the sign (-1)^{L+1} under lambda -> lambda + gamma.
TEST(OrderFour, QShiftSign) {
  for (int L = 2; L <= 5; ++L) {
    const auto spec = make_root_of_unity(1, 4);
    Sampler s(710 + L);
    const ModelParams p = s.model(L, spec.gamma());
    const cplx l = s.uniform();
    const double sign = L % 2 == 1 ? 1.0 : -1.0;
    EXPECT_LT(std::abs(q_function(l + p.gamma, p) - sign * q_function(l, p)), 1e-10 * std::abs(q_function(l, p)));
  }
}

TEST(TruncatedRelation, VanishesForSmallOrders) {
  for (int l = 2; l <= 4; ++l) {
    for (int L = 2; L <= 4; ++L) {
      const Scenario su = prepare(1, l, L, 720 + 10 * l + L, false);
      Sampler s(730 + L);
      const cplx lam = s.point(1, su.p)[0];
      for (const auto& d : su.data) {
        EXPECT_TRUE(check_truncated_relation(d.state, su.spec, lam, su.p).passed()) << "l=" << l << " L=" << L;
      }
    }
  }
}

TEST(Checks, RejectMismatchedAnisotropy) {
  Sampler s(740);
  const auto spec = make_root_of_unity(1, 3);
  const ModelParams p = s.model(2, {0.5, 0.3});
  EXPECT_THROW(check_truncation(spec, 0.1, p), Error);
}
