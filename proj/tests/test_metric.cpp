#include <gtest/gtest.h>

#include "support.hpp"
#include "tfn/metric.hpp"
#include "tfn/verify.hpp"

using namespace tfn;
using tfn::test::Q;
using tfn::test::T;

namespace {

const OrderId kTotal = OrderId::Kind::TotalSum;
const OrderId kUpper = OrderId::Kind::UpperSum;
const OrderId kLower = OrderId::Kind::LowerSum;
using Case_ = BallDescription::Case;

// Every TFN with integer coordinates in [-n, n].
std::vector<Tfn> integer_lattice(int n) {
  std::vector<Tfn> out;
  for (int lo = -n; lo <= n; ++lo) {
    for (int peak = lo; peak <= n; ++peak) {
      for (int hi = peak; hi <= n; ++hi) out.push_back(Tfn::make(lo, peak, hi));
    }
  }
  return out;
}

}  // namespace

TEST(Abs, Examples) {
  EXPECT_EQ(fuzzy_abs(kUpper, T("(-3,-1,2)")), T("(-2,1,3)"));
  EXPECT_EQ(fuzzy_abs(kUpper, T("(-2,0,1)")), T("(-1,0,2)"));
  for (const OrderId& o : all_orders()) EXPECT_EQ(fuzzy_abs(o, T("(-2,0,2)")), T("(-2,0,2)"));
}

TEST(Distance, Examples) {
  EXPECT_EQ(fuzzy_distance(kUpper, T("(0,1,2)"), T("(0,1,2)")), T("(-2,0,2)"));
  for (const OrderId& o : all_orders()) EXPECT_EQ(fuzzy_distance(o, Tfn::scalar(3), Tfn::scalar(5)), Tfn::scalar(2));
  SampleConfig cfg;
  Sampler s(cfg);
  for (int i = 0; i < 1000; ++i) {
    const Tfn a = s.tfn(), b = s.tfn();
    EXPECT_EQ(fuzzy_distance(kTotal, a, b), fuzzy_distance(kTotal, b, a));
  }
}

TEST(Abs, Lex231CoincidesWithUpperSum) {
  SampleConfig cfg;
  Sampler s(cfg);
  const OrderId lex231 = OrderId::lex(2, 3, 1);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Tfn a = s.structured() ? s.structured_tfn() : s.tfn();
    ASSERT_EQ(fuzzy_abs(lex231, a), fuzzy_abs(kUpper, a)) << a;
  }
}

TEST(Abs, SelfDistanceIsMinimalAtTheNarrowestMember) {
  SampleConfig cfg;
  Sampler s(cfg);
  for (const OrderId& o : {kTotal, kUpper}) {
    const Comparator c(o);
    for (int i = 0; i < 2000; ++i) {
      const Tfn a = s.structured_tfn();
      const Tfn a0 = null_min(a);
      const auto ord = c(fuzzy_distance(c, a, a), fuzzy_distance(c, a0, a));
      EXPECT_TRUE(ord >= 0) << a;
      EXPECT_EQ(ord == 0, a == a0) << a;
    }
  }
}

TEST(Solvers, Examples) {
  EXPECT_EQ(solve_sub_right(T("(0,1,2)"), T("(-2,0,3)")), T("(-1,1,2)"));
  EXPECT_EQ(solve_sub_right(Tfn::scalar(3), Tfn{}), Tfn::scalar(3));
  EXPECT_FALSE(solve_sub_right(T("(0,1,2)"), Tfn{}));
  EXPECT_EQ(solve_sub_left(T("(0,1,2)"), T("(-2,0,3)")), T("(0,1,3)"));
  EXPECT_EQ(solve_sub_left(Tfn::scalar(3), Tfn::scalar(4)), Tfn::scalar(7));
  EXPECT_FALSE(solve_sub_left(T("(0,1,2)"), T("(0.5,1,1.5)")));
}

TEST(Solvers, AgreeWithLatticeSearch) {
  // Small integer data have integer solutions, so a lattice search is exhaustive.
  const auto lattice = integer_lattice(8);
  SampleConfig cfg;
  Sampler s(cfg);
  for (int i = 0; i < 120; ++i) {
    const Tfn beta = s.small_tfn();
    const Tfn gamma = s.small_tfn();
    std::optional<Tfn> right, left;
    for (const Tfn& a : lattice) {
      if (beta - a == gamma) right = a;
      if (a - beta == gamma) left = a;
    }
    EXPECT_EQ(solve_sub_right(beta, gamma), right) << beta << " " << gamma;
    EXPECT_EQ(solve_sub_left(beta, gamma), left) << beta << " " << gamma;
  }
}

TEST(AbsEquation, Examples) {
  EXPECT_EQ(abs_equation_solutions(kUpper, Tfn{}, T("(-1,0,1)")), std::vector<Tfn>{T("(-1,0,1)")});
  EXPECT_EQ(abs_equation_solutions(kUpper, T("(0,1,2)"), T("(-2,0,3)")), (std::vector<Tfn>{T("(-1,1,2)"), T("(0,1,3)")}));
  EXPECT_TRUE(abs_equation_solutions(kUpper, T("(0,0,10)"), T("(-1,0,1)")).empty());
  EXPECT_THROW(abs_equation_solutions(kUpper, Tfn{}, Tfn{}), InvalidRadius);
  EXPECT_THROW(abs_equation_solutions(kUpper, Tfn{}, T("(-2,-1,0)")), InvalidRadius);
  EXPECT_THROW(abs_equation_solutions(kLower, Tfn{}, T("(0,1,2)")), UnsupportedOrder);
}

TEST(AbsEquation, EverySolutionIsAtDistanceGamma) {
  SampleConfig cfg;
  Sampler s(cfg);
  const auto lattice = integer_lattice(6);
  for (const OrderId& o : {kTotal, kUpper}) {
    const Comparator c(o);
    for (int i = 0; i < 40; ++i) {
      const Tfn beta = s.small_tfn();
      Tfn gamma = s.small_tfn();
      if (!c.less(Tfn{}, gamma)) gamma = -gamma;
      if (!c.less(Tfn{}, gamma)) continue;
      std::vector<Tfn> brute;
      for (const Tfn& a : lattice) {
        if (fuzzy_distance(c, a, beta) == gamma) brute.push_back(a);
      }
      auto got = abs_equation_solutions(o, beta, gamma);
      std::sort(got.begin(), got.end(), [&](auto& x, auto& y) { return c.less(x, y); });
      std::sort(brute.begin(), brute.end(), [&](auto& x, auto& y) { return c.less(x, y); });
      EXPECT_EQ(got, brute) << o.name() << " " << beta << " " << gamma;
    }
  }
}

TEST(Ball, MembershipExamples) {
  const Comparator upper(kUpper);
  EXPECT_TRUE(closed_ball_member(upper, Tfn{}, T("(-1,0,1)"), T("(-0.5,0,0.5)")));
  EXPECT_FALSE(closed_ball_member(upper, Tfn{}, T("(-1,0,1)"), T("(-2,0,2)")));
  EXPECT_TRUE(closed_ball_member(upper, Tfn::scalar(3), T("(-1,0,1)"), Tfn::scalar(3)));
}

TEST(Ball, SymmetricRadiusMatchesBruteForce) {
  const BallDescription ball = closed_ball_description(kUpper, Tfn{}, T("(-1,0,1)"));
  EXPECT_EQ(ball.kind, Case_::SymmetricRadius);
  EXPECT_EQ(ball.endpoints->first, Tfn{});
  EXPECT_EQ(ball.endpoints->second, T("(-1,0,1)"));
  EXPECT_EQ(render(ball), "[0, (-1, 0, 1)]");
  const Comparator upper(kUpper);
  // Grid with step 1/4: members are exactly (-t, 0, t) with 0 <= t <= 1.
  for (int lo = -12; lo <= 12; ++lo) {
    for (int peak = lo; peak <= 12; ++peak) {
      for (int hi = peak; hi <= 12; ++hi) {
        const Tfn a = Tfn::make(make_rational(lo, 4), make_rational(peak, 4), make_rational(hi, 4));
        const bool expected = peak == 0 && lo == -hi && hi <= 4;
        EXPECT_EQ(closed_ball_member(upper, Tfn{}, T("(-1,0,1)"), a), expected) << a;
        EXPECT_EQ(description_membership(ball, upper, a, Tfn{}, T("(-1,0,1)")).closed, expected) << a;
      }
    }
  }
}

TEST(Ball, DescriptionExamples) {
  EXPECT_EQ(closed_ball_description(kUpper, T("(0,0,10)"), T("(-1,0,1)")).kind, Case_::Empty);
  EXPECT_EQ(render(closed_ball_description(kUpper, T("(0,0,10)"), T("(-1,0,1)"))), "∅");
  const BallDescription two = closed_ball_description(kUpper, T("(0,1,2)"), T("(-2,0,3)"));
  EXPECT_EQ(two.kind, Case_::TwoSolutionInterval);
  EXPECT_EQ(*two.excluded_anchor, T("(-1,1,2)"));
  EXPECT_EQ(two.endpoints->second, T("(0,1,3)"));
  EXPECT_EQ(two.open_exclusions, (std::vector<Tfn>{T("(-1,1,2)"), T("(0,1,3)")}));
  EXPECT_THROW(closed_ball_description(kLower, Tfn{}, T("(0,1,2)")), UnsupportedOrder);
  EXPECT_THROW(closed_ball_description(kUpper, Tfn{}, T("(-1,-1,0)")), InvalidRadius);
}

TEST(Ball, EveryCaseIsReachable) {
  const Comparator upper(kUpper);
  EXPECT_EQ(closed_ball_description(kUpper, T("(-2,0,2)"), T("(0,1,1)")).kind, Case_::OpenOpenStrip);
  EXPECT_EQ(closed_ball_description(kUpper, T("(-2,0,1)"), T("(0,1,3)")).kind, Case_::LeftMinClosed);
  EXPECT_EQ(closed_ball_description(kUpper, T("(-2,0,1)"), T("(-2,1,2)")).kind, Case_::RightMinOpen);
  // Without MIN-MAX compatibility the margin-violating cases have no interval form.
  OrderProperties partial = declared_properties(kUpper);
  partial.minmax_compatible = false;
  const BallDescription direct = closed_ball_description(upper, partial, T("(-2,0,2)"), T("(0,1,1)"));
  EXPECT_EQ(direct.kind, Case_::DirectOnly);
  EXPECT_FALSE(direct.endpoints);
}

TEST(Ball, RightOnlyCaseStartsAtTheNarrowestMember) {
  // Here β - α = γ is solvable but α - β = γ is not. The point below lies in
  // Null(α1) below α1, is inside the ball, and would be lost by an interval
  // starting at α1 itself.
  const Comparator upper(kUpper);
  const Tfn beta = T("(-2,0,1/2)");
  const Tfn gamma = T("(-2,1,2)");
  const Tfn probe = T("(-5/4,-1,-1/4)");
  const BallDescription ball = closed_ball_description(kUpper, beta, gamma);
  ASSERT_EQ(ball.kind, Case_::RightMinOpen);
  const Tfn a1 = *solve_sub_right(beta, gamma);
  EXPECT_TRUE(in_nullifying_set(a1, probe));
  EXPECT_TRUE(upper.less(probe, a1));
  EXPECT_TRUE(closed_ball_member(upper, beta, gamma, probe));
  EXPECT_EQ(ball.endpoints->first, null_min(a1));
  EXPECT_TRUE(description_membership(ball, upper, probe, beta, gamma).closed);
}

TEST(Ball, DescriptionsAgreeWithDirectEvaluation) {
  SampleConfig cfg;
  cfg.ball_pairs = 150;
  for (const OrderId& o : {kTotal, kUpper}) {
    const VerificationReport r = check_ball_oracle_equivalence(Comparator(o), declared_properties(o), cfg);
    EXPECT_EQ(r.verdict, Verdict::Pass) << o.name() << " " << (r.counterexample ? r.counterexample->clause : "");
  }
}
