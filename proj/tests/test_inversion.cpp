#include <gtest/gtest.h>

#include "reemobius/inversion.hpp"

namespace cat = reemobius::catalog;
namespace inv = reemobius::inversion;
using cat::ClassInstance;
using cat::ClassTag;
using reemobius::Integer;
using reemobius::Natural;
using reemobius::Rational;
using reemobius::TargetGroup;

namespace {
const std::vector<unsigned> kTestN = {3, 5, 7, 9, 15, 21, 25, 33, 45};
}

TEST(Sigma, Recipes) {
  EXPECT_EQ(inv::sigma(TargetGroup::F2, {ClassTag::E, 3}), Natural(64));
  EXPECT_EQ(inv::sigma(TargetGroup::Hecke3, {ClassTag::Ct1, 3}), Natural(56));
  EXPECT_EQ(inv::sigma(TargetGroup::FreeProd9Inf, {ClassTag::E, 3}), Natural(0));
  EXPECT_EQ(inv::sigma(TargetGroup::TripleInvolution, {ClassTag::V, 3}), Natural(27));
  EXPECT_EQ(inv::sigma(TargetGroup::C3C3, {ClassTag::Ct1, 3}), Natural(64));
}

TEST(PhiClassSum, FreeGroupRankTwo) {
  EXPECT_EQ(inv::d_count(TargetGroup::F2, 3), Natural(3357637312ULL));
  EXPECT_EQ(inv::d_count(TargetGroup::F2, 5), Natural::parse("9965130790521984"));
  EXPECT_EQ(inv::d_count(TargetGroup::F2, 7), Natural::parse("34169987177353651660608"));
  // The class sum and the closed form agree here; see the acceptance binary
  // for the comparison against the published n = 9 value.
  EXPECT_EQ(inv::d_count(TargetGroup::F2, 9),
            Natural::parse("127167013743759383021219557056"));
}

TEST(PhiClassSum, ModularGroup) {
  EXPECT_EQ(inv::phi_class_sum(TargetGroup::Hecke3, 3), cat::group_order(3) * 672);
  EXPECT_EQ(inv::d_count(TargetGroup::Hecke3, 3), Natural(224));
}

TEST(PhiClassSum, ExtendedTargetsNeedFlag) {
  EXPECT_THROW(inv::d_count(TargetGroup::C3C3, 3), std::invalid_argument);
  EXPECT_NO_THROW(inv::d_count(TargetGroup::C3C3, 3, true));
}

TEST(PhiClassSum, BoundedBySigmaOfWholeGroup) {
  for (unsigned n : {3u, 5u, 7u, 9u}) {
    for (TargetGroup t : reemobius::kAllTargets) {
      const Natural phi = inv::phi_class_sum(t, n);
      EXPECT_LE(phi, inv::sigma(t, {ClassTag::R, n})) << reemobius::target_id(t);
      EXPECT_TRUE(cat::aut_order(n).divides(phi) || phi.is_zero());
    }
  }
}

TEST(PhiClassSum, LinearInSigma) {
  for (unsigned n : {3u, 15u}) {
    const Integer base = inv::hall_sum(n, [](const ClassInstance& h) {
      return inv::sigma(TargetGroup::F2, h);
    });
    const Integer scaled = inv::hall_sum(n, [](const ClassInstance& h) {
      return inv::sigma(TargetGroup::F2, h) * 17;
    });
    EXPECT_EQ(scaled, base * 17);
  }
}

TEST(PhiClassSum, ConstantSigmaGivesTrivialMobius) {
  // With σ ≡ 1 the sum is Σ μ over all subgroups, which is 0 as μ(1) = 0.
  for (unsigned n : kTestN) {
    const Integer s = inv::hall_sum(n, [](const ClassInstance&) { return Natural(1); });
    EXPECT_EQ(s, 0) << n;
  }
}

TEST(ClosedForms, AgreeExceptPrintedC3Inf) {
  for (unsigned n : {3u, 5u, 7u, 15u, 45u}) {
    const auto report = inv::cross_check_corollaries(n);
    EXPECT_TRUE(report.core_agree());
    for (const auto& c : report.checks) {
      if (c.target == TargetGroup::FreeProd3Inf) {
        EXPECT_FALSE(c.agree) << n;
      } else {
        EXPECT_TRUE(c.agree) << reemobius::target_id(c.target) << " at " << n;
      }
    }
  }
}

TEST(ClosedForms, C3InfDiscrepancyAtThree) {
  const auto report = inv::cross_check_corollaries(3);
  for (const auto& c : report.checks) {
    if (c.target != TargetGroup::FreeProd3Inf) continue;
    EXPECT_EQ(c.discrepancy, cat::group_order(3).value() * 1023360);
  }
}

TEST(Probability, ModularAtThree) {
  const auto p = inv::generation_probability(inv::ProbabilitySpec::parse("2,3"), 3);
  EXPECT_EQ(p.str(), "648/703");
  EXPECT_EQ(p, inv::p23_closed_form(3));
}

TEST(Probability, TwoRoutesAgree) {
  const auto spec = inv::ProbabilitySpec::parse("2,3");
  for (unsigned n = 3; n <= 45; n += 2) {
    EXPECT_EQ(inv::generation_probability(spec, n), inv::p23_closed_form(n)) << n;
  }
}

TEST(Probability, IncreasingAndInUnitInterval) {
  for (const char* text : {"2,3", "3,3", "inf,inf", "2,inf", "2,2,2", "2,9", "9,inf"}) {
    const auto spec = inv::ProbabilitySpec::parse(text);
    Rational prev;
    for (unsigned n = 3; n <= 11; n += 2) {
      const Rational p = inv::generation_probability(spec, n);
      EXPECT_GT(p, Rational());
      EXPECT_LT(p, Rational(Natural(1)));
      if (n > 3) {
        EXPECT_GT(p, prev) << text << " n=" << n;
      }
      prev = p;
    }
  }
}

TEST(Probability, SpecParsing) {
  EXPECT_EQ(inv::ProbabilitySpec::parse("inf,inf").orders, (std::vector<unsigned>{0, 0}));
  EXPECT_TRUE(inv::ProbabilitySpec::parse("2,2,2").triple_involutions());
  EXPECT_EQ(inv::ProbabilitySpec::parse("2,9").str(), "2,9");
  EXPECT_THROW(inv::ProbabilitySpec::parse("2,5"), std::invalid_argument);
  EXPECT_THROW(inv::ProbabilitySpec::parse("3,3,3"), std::invalid_argument);
  EXPECT_THROW(inv::ProbabilitySpec::parse("2"), std::invalid_argument);
  EXPECT_THROW(inv::ProbabilitySpec::parse(""), std::invalid_argument);
}

TEST(DefiningRelation, Examples) {
  EXPECT_TRUE(inv::verify_defining_relation({ClassTag::P, 1}, 3));
  EXPECT_TRUE(inv::verify_defining_relation({ClassTag::R, 3}, 3));
  EXPECT_TRUE(inv::verify_defining_relation({ClassTag::V, 3}, 3));
}

TEST(DefiningRelation, EveryClassEveryN) {
  for (unsigned n : kTestN) {
    for (const auto& inst : cat::class_instances(n)) {
      EXPECT_TRUE(inv::verify_defining_relation(inst, n))
          << inst.str() << " at n=" << n << " sum "
          << inv::defining_relation_sum(inst, n);
    }
  }
}

TEST(TrivialMobius, Vanishes) {
  for (unsigned n : kTestN) {
    EXPECT_TRUE(inv::verify_trivial_mobius(n)) << n;
  }
}
