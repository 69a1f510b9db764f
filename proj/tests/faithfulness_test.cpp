#include <gtest/gtest.h>

#include <array>

#include "corpus.hpp"
#include "expect_error.hpp"
#include "gbs/faithfulness.hpp"
#include "oracle.hpp"

namespace gbs {
namespace {

using testing::Decimal;
using testing::GraphPtr;
using testing::Rng;

const QuadScalar kRoot2 = QuadScalar::sqrt(2);
const QuadScalar kTheta = kRoot2 - QuadScalar(1);

BranchingSystem loop_system(const QuadScalar& theta) {
  const GraphPtr g = testing::single_loop();
  return build_rotation_system(g, {{EdgeId{0}, theta}});
}

BranchingSystem two_cycle_system(const QuadScalar& t1, const QuadScalar& t2) {
  const GraphPtr g = testing::two_cycle();
  return build_rotation_system(g, {{g->edge("e"), t1}, {g->edge("f"), t2}});
}

/// Decimal model of F ∩ f_{alpha^q}(F) = ∅ for F = [l1, l1 + len) under
/// rotation by theta: the image [t, t + len) mod 1 must avoid [0, len).
bool decimal_disjoint(const Decimal& len, const Decimal& theta, unsigned q) {
  Decimal t = theta * q;
  t -= floor(t);
  return len > 0 && len <= t && t + len <= 1;
}

TEST(SeparatingSet, IrrationalLoopFirstThreePowers) {
  const BranchingSystem bs = loop_system(kTheta);
  const std::array<unsigned, 3> powers{1, 2, 3};
  const SeparatingSet f = separating_set(bs, VertexId{0}, powers);
  EXPECT_EQ(f.set.lo, QuadScalar(0));
  EXPECT_EQ(f.set.hi, (QuadScalar(3) - QuadScalar(2) * kRoot2) / QuadScalar(2));
  EXPECT_EQ(f.powers, std::vector<unsigned>(powers.begin(), powers.end()));
}

TEST(SeparatingSet, ThetaNearOneHalf) {
  // theta = 1/2 + (sqrt2 - 1)/100, so the margin of power 1 is 1/2 - (sqrt2 - 1)/100.
  const QuadScalar theta = QuadScalar(Rational(1, 2)) + kTheta / QuadScalar(100);
  const BranchingSystem bs = loop_system(theta);
  const std::array<unsigned, 1> powers{1};
  const SeparatingSet f = separating_set(bs, VertexId{0}, powers);
  EXPECT_EQ(f.set.hi, (QuadScalar(1) - theta) / QuadScalar(2));
  const auto moved = compose_path_map(bs, Path(bs.graph(), {EdgeId{0}})).image(IntervalSet(f.set));
  EXPECT_TRUE(moved.is_disjoint_from(IntervalSet(f.set)));
}

TEST(SeparatingSet, Errors) {
  const std::array<unsigned, 2> powers{1, 2};
  EXPECT_GBS_ERROR(separating_set(loop_system(QuadScalar(Rational(7, 12))), VertexId{0}, powers), RationalTheta);
  EXPECT_GBS_ERROR(separating_set(loop_system(kTheta), VertexId{0}, std::span<const unsigned>{}), InvalidArgument);
  const std::array<unsigned, 2> with_zero{0, 1};
  EXPECT_GBS_ERROR(separating_set(loop_system(kTheta), VertexId{0}, with_zero), InvalidArgument);

  const GraphPtr tail = testing::make_graph({"v", "u"}, {{"e", "v", "v"}, {"t", "u", "v"}});
  const BranchingSystem bs =
      build_rotation_system(tail, {{tail->edge("e"), kTheta}, {tail->edge("t"), QuadScalar(0)}});
  EXPECT_GBS_ERROR(separating_set(bs, tail->vertex("u"), powers), NotABasePoint);
  EXPECT_NO_THROW(separating_set(bs, tail->vertex("v"), powers));

  const BranchingSystem affine = build_affine_system(testing::single_loop());
  EXPECT_GBS_ERROR(separating_set(affine, VertexId{0}, powers), NotRotationSystem);
}

TEST(CycleAngle, TwoCycleSumsAngles) {
  const BranchingSystem bs = two_cycle_system(QuadScalar(Rational(1, 3)), QuadScalar(Rational(1, 4)));
  for (VertexId w : bs.graph().vertex_ids()) EXPECT_EQ(cycle_angle(bs, w), QuadScalar(Rational(7, 12)));
  const BranchingSystem wrap = two_cycle_system(QuadScalar(Rational(3, 4)), kTheta);
  EXPECT_EQ(cycle_angle(wrap, VertexId{0}), QuadScalar(Rational(-5, 4)) + kRoot2);
}

TEST(FaithfulnessCheck, IrrationalLoop) {
  const BranchingSystem bs = loop_system(kTheta);
  const FaithfulnessVerdict v = faithfulness_check(bs);
  EXPECT_TRUE(v.criterion_satisfied());
  EXPECT_EQ(v.max_power, 10u);
  ASSERT_EQ(v.base_points.size(), 1u);
  const BasePointVerdict& b = v.base_points.front();
  EXPECT_EQ(b.theta, kTheta);
  EXPECT_FALSE(b.rational);
  ASSERT_TRUE(b.separating.has_value());
  // 5 theta = 5 sqrt2 - 5 has the smallest margin, 5 sqrt2 - 7.
  EXPECT_EQ(b.separating->set.hi, (QuadScalar(5) * kRoot2 - QuadScalar(7)) / QuadScalar(2));
  EXPECT_EQ(b.separating->powers.size(), 10u);
  EXPECT_FALSE(b.kernel_term.has_value());
}

TEST(FaithfulnessCheck, RationalLoopKernelUsesDenominator) {
  const BranchingSystem bs = loop_system(QuadScalar(Rational(7, 12)));
  const FaithfulnessVerdict v = faithfulness_check(bs);
  EXPECT_FALSE(v.criterion_satisfied());
  ASSERT_EQ(v.base_points.size(), 1u);
  const BasePointVerdict& b = v.base_points.front();
  EXPECT_TRUE(b.rational);
  EXPECT_EQ(b.denominator, 12u);
  EXPECT_TRUE(b.kernel_confirmed);
  ASSERT_TRUE(b.kernel_term.has_value());
  EXPECT_EQ(*b.kernel_term, parse_term(bs.graph_ptr(), "s[e.e.e.e.e.e.e.e.e.e.e.e] - p[v]"));
  const Path alpha12 = Path(bs.graph(), {EdgeId{0}}).power(12);
  EXPECT_EQ(compose_path_map(bs, alpha12), PiecewiseAffineMap::identity(bs.domain_set(VertexId{0})));
  EXPECT_EQ(op_path(bs, alpha12, Mode::cstar), op_vertex(bs, VertexId{0}));
  EXPECT_FALSE(v.notes.empty());
}

TEST(FaithfulnessCheck, ConditionLIsVacuous) {
  const GraphPtr g = testing::make_graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "a", "a"}});
  const BranchingSystem bs = build_affine_system(g);
  const FaithfulnessVerdict v = faithfulness_check(bs);
  EXPECT_TRUE(v.base_points.empty());
  EXPECT_TRUE(v.criterion_satisfied());
  EXPECT_GBS_ERROR(faithfulness_check(bs, 0), InvalidArgument);
}

TEST(FaithfulnessCheck, AffineSystemWithBasePointRejected) {
  const BranchingSystem affine = build_affine_system(testing::single_loop());
  EXPECT_GBS_ERROR(faithfulness_check(affine), NotRotationSystem);
  // A rotation system whose cycle map was replaced no longer carries its angle.
  const BranchingSystem rot = loop_system(kTheta);
  const BranchingSystem tampered = rot.with_map(EdgeId{0}, PiecewiseAffineMap::identity(rot.domain_set(VertexId{0})));
  EXPECT_GBS_ERROR(faithfulness_check(tampered), NotRotationSystem);
}

TEST(PowerProfile, RationalLoop) {
  const BranchingSystem bs = loop_system(QuadScalar(Rational(3, 8)));
  for (Mode mode : {Mode::cstar, Mode::algebraic}) {
    const auto probes = power_profile(bs, VertexId{0}, 16, mode);
    ASSERT_EQ(probes.size(), 16u);
    for (const PowerProbe& p : probes) {
      EXPECT_EQ(p.identity, p.power % 8 == 0) << p.power;
      if (!p.identity) {
        ASSERT_TRUE(p.witness.has_value());
        const Path alpha_n = Path(bs.graph(), {EdgeId{0}}).power(p.power);
        const CanonicalOperator diff = op_sub(op_path(bs, alpha_n, mode), op_vertex(bs, VertexId{0}));
        EXPECT_FALSE(diff.apply(*p.witness).is_zero());
      }
    }
  }
}

TEST(FaithfulnessProperty, IrrationalAnglesSeparateFiftyPowers) {
  Rng rng(testing::suite_seed());
  std::vector<unsigned> powers(50);
  for (unsigned i = 0; i < 50; ++i) powers[i] = i + 1;
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t d = std::array<std::int64_t, 4>{2, 3, 5, 7}[trial % 4];
    const bool loop = trial % 2 == 0;
    const BranchingSystem bs = loop ? loop_system(testing::random_angle(rng, d, false))
                                    : two_cycle_system(testing::random_angle(rng, d, false),
                                                       testing::random_angle(rng, d, true));
    for (VertexId w : exitless_base_points(bs.graph())) {
      const QuadScalar theta = cycle_angle(bs, w);
      ASSERT_FALSE(theta.is_rational());
      const SeparatingSet f = separating_set(bs, w, powers);
      const Decimal len = testing::decimal(f.set.hi - f.set.lo);
      for (unsigned q : powers) EXPECT_TRUE(decimal_disjoint(len, testing::decimal(theta), q)) << q;
    }
  }
}

TEST(FaithfulnessProperty, RationalAnglesReturnAtDenominator) {
  Rng rng(testing::suite_seed() + 1);
  for (int trial = 0; trial < 12; ++trial) {
    const BranchingSystem bs = trial % 2 == 0 ? loop_system(testing::random_angle(rng, 2, true))
                                              : two_cycle_system(testing::random_angle(rng, 2, true),
                                                                 testing::random_angle(rng, 2, true));
    const FaithfulnessVerdict v = faithfulness_check(bs);
    for (const BasePointVerdict& b : v.base_points) {
      ASSERT_TRUE(b.rational);
      const unsigned long q = *b.denominator;
      EXPECT_EQ(Rational(b.theta.rational_part() * q).get_den(), 1);
      EXPECT_TRUE(b.kernel_confirmed);
      const auto probes = power_profile(bs, b.base, static_cast<unsigned>(q), Mode::cstar);
      for (const PowerProbe& p : probes) {
        EXPECT_EQ(p.identity, p.power == q);
        if (p.power < q) {
          EXPECT_TRUE(p.witness.has_value());
        }
      }
    }
  }
}

void expect_converse(const ConverseReport& r) {
  EXPECT_TRUE(r.element_in_kernel);
  EXPECT_TRUE(r.all_vertices_nonzero());
  EXPECT_EQ(r.vertex_nonzero.size(), r.system.graph().vertex_ids().size());
  EXPECT_TRUE(r.axioms.ok());
  EXPECT_TRUE(r.relations.ok());
  EXPECT_FALSE(r.element.is_zero());
  EXPECT_TRUE(compose_path_map(r.system, r.cycle) == PiecewiseAffineMap::identity(r.system.domain_set(r.cycle.source())));
}

TEST(ConverseCstar, SingleLoop) {
  const ConverseReport r = converse_ckut_cstar(*testing::single_loop());
  expect_converse(r);
  EXPECT_EQ(r.element.to_string(), "-p[v] + s[e]^");
  EXPECT_EQ(op_edge_adjoint(r.system, EdgeId{0}, Mode::cstar), op_vertex(r.system, VertexId{0}));
}

TEST(ConverseCstar, TwoCycle) {
  const ConverseReport r = converse_ckut_cstar(*testing::two_cycle());
  expect_converse(r);
  EXPECT_EQ(r.cycle.length(), 2u);
}

TEST(ConverseCstar, NonLCorpus) {
  Rng rng(testing::suite_seed() + 2);
  for (const DirectedGraph& g : testing::non_L_corpus(rng, 20)) {
    const ConverseReport r = converse_ckut_cstar(g);
    expect_converse(r);
    // The cycle's edges lead the re-enumerated edge list.
    for (std::size_t i = 0; i < r.cycle.length(); ++i) EXPECT_EQ(r.cycle.edges()[i].index, i);
  }
}

TEST(ConverseCstar, ConditionLRejected) {
  const GraphPtr g = testing::make_graph({"v", "w"}, {{"e", "v", "v"}, {"x", "v", "w"}});
  EXPECT_GBS_ERROR(converse_ckut_cstar(*g), ConditionLHolds);
  EXPECT_GBS_ERROR(converse_ckut_leavitt(*g), ConditionLHolds);
}

TEST(ConverseLeavitt, SingleLoop) {
  const ConverseLeavittReport r = converse_ckut_leavitt(*testing::single_loop());
  EXPECT_TRUE(r.affine.element_in_kernel);
  EXPECT_EQ(r.affine.relations.mode, Mode::algebraic);
  EXPECT_TRUE(r.perturbed_axioms.ok());
  EXPECT_TRUE(r.perturbed_relations.ok());
  EXPECT_FALSE(r.perturbed_check.in_kernel);
  EXPECT_FALSE(r.witness_image.is_zero());

  const Interval unit{QuadScalar(0), QuadScalar(1)};
  EXPECT_EQ(r.perturbed.map(EdgeId{0}), perturbation_map(unit, unit));
  EXPECT_NE(compose_path_map(r.perturbed, r.affine.cycle), PiecewiseAffineMap::identity(IntervalSet(unit)));
  // phi = chi[0,1/4) pulls back to chi[0,1/2).
  const StepFunction phi = StepFunction::indicator(Interval{QuadScalar(0), QuadScalar(Rational(1, 4))});
  const StepFunction image = evaluate(r.affine.element, r.perturbed, Mode::algebraic).apply(phi);
  EXPECT_EQ(image, StepFunction::indicator(Interval{QuadScalar(Rational(1, 4)), QuadScalar(Rational(1, 2))}));
}

TEST(ConverseLeavitt, NonLCorpus) {
  Rng rng(testing::suite_seed() + 3);
  for (const DirectedGraph& g : testing::non_L_corpus(rng, 20)) {
    const ConverseLeavittReport r = converse_ckut_leavitt(g);
    EXPECT_TRUE(r.affine.element_in_kernel);
    EXPECT_TRUE(r.affine.all_vertices_nonzero());
    EXPECT_TRUE(r.perturbed_axioms.ok());
    EXPECT_TRUE(r.perturbed_relations.ok());
    EXPECT_FALSE(r.perturbed_check.in_kernel);
    ASSERT_TRUE(r.perturbed_check.witness.has_value());
    EXPECT_EQ(evaluate(r.affine.element, r.perturbed, Mode::algebraic).apply(*r.perturbed_check.witness),
              r.witness_image);
    EXPECT_FALSE(r.witness_image.is_zero());
  }
}

TEST(PerturbationMap, ShapeAndErrors) {
  const Interval k{QuadScalar(2), QuadScalar(3)};
  const Interval l{QuadScalar(-1), QuadScalar(0)};
  const PiecewiseAffineMap m = perturbation_map(k, l);
  EXPECT_EQ(m.slope_at(QuadScalar(Rational(9, 4))), Rational(1, 2));
  EXPECT_EQ(m.slope_at(QuadScalar(Rational(11, 4))), Rational(3, 2));
  EXPECT_EQ(m.image(IntervalSet(k)), IntervalSet(l));
  EXPECT_EQ(m.image(IntervalSet(Interval{QuadScalar(2), QuadScalar(Rational(5, 2))})),
            IntervalSet(Interval{QuadScalar(-1), QuadScalar(Rational(-3, 4))}));
  EXPECT_GBS_ERROR(perturbation_map(Interval{QuadScalar(0), QuadScalar(2)}, l), InvalidMap);
}

}  // namespace
}  // namespace gbs
