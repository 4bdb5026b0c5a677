// Acceptance runner: `acceptance N` checks one criterion and prints a single
// "criterion N: PASS|FAIL ..." line; without arguments it runs all of them.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tfn/io.hpp"
#include "tfn/metric.hpp"
#include "tfn/orders.hpp"
#include "tfn/verify.hpp"

using namespace tfn;
using K = OrderId::Kind;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Tfn T(const std::string& s) { return parse_tfn(s); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void example_one(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Tfn alpha = T("(-0.5,-0.3,-0.1)");
  const Tfn beta = T("(0.2806,0.4806,0.6806)");
  const Tfn gamma = T("0.7");
  bool ok = true;
  for (K k : {K::TotalSum, K::UpperSum}) {
    ok &= compare(k, alpha, T("(0.1,0.3,0.5)")) < 0;
    ok &= compare(k, alpha, -alpha) < 0;
    ok &= compare(k, beta, gamma) < 0;
  }
  const double ms = seconds_since(t0) * 1000;
  out.require(ok, "verdicts");
  out.require(ms < 1.0, "runtime under 1 ms");
  out.detail << " alpha < -alpha and beta < gamma under total-sum and upper-sum (" << ms << " ms)";
}

void example_two(Outcome& out) {
  for (K k : {K::TotalSum, K::UpperSum}) {
    out.require(compare(k, T("(0.4,0.5,0.6)"), T("(0.2,0.5,0.8)")) < 0, OrderId(k).name());
  }
  out.detail << " (0.4,0.5,0.6) < (0.2,0.5,0.8) under total-sum and upper-sum";
}

void example_four(Outcome& out) {
  const Tfn a = T("(0.35,0.5,1)");
  const Tfn b = T("(0.15,0.65,0.8)");
  out.require(compare(K::UpperSum, a, b) < 0, "upper-sum a < b");
  out.require(compare(K::TotalSum, b, a) < 0, "total-sum b < a");
  out.detail << " upper-sum prefers (0.15,0.65,0.8), total-sum prefers (0.35,0.5,1)";
}

void wlt_witnesses(Outcome& out) {
  const SampleConfig cfg;
  const std::vector<std::pair<OrderId, Tfn>> expected{{K::TPrime, T("(-9,1,8)")},
                                                      {OrderId::lex(1, 2, 3), T("(-1,2,3)")},
                                                      {OrderId::lex(3, 1, 2), T("(-1,2,3)")},
                                                      {OrderId::lex(2, 1, 3), T("(-1,0,2)")}};
  for (const auto& [order, witness] : expected) {
    const VerificationReport r = check_wlt(order, cfg);
    const bool found = r.verdict == Verdict::Fail && r.counterexample &&
                       r.counterexample->original.values.front() == witness;
    out.require(found, order.name());
    out.detail << " " << order.name() << "@"
               << (r.counterexample ? to_string(r.counterexample->original.values.front()) : "none");
  }
}

void axiom_suite(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const SampleConfig cfg;
  std::size_t checks = 0;
  for (const OrderId& o : all_orders()) {
    for (Axiom a : {Axiom::TotalOrder, Axiom::Arithmetic, Axiom::MinMax}) {
      out.require(verify(o, a, cfg).verdict == Verdict::Pass, o.name() + " " + to_string(a));
      ++checks;
    }
    const bool wlt = verify(o, Axiom::Wlt, cfg).verdict == Verdict::Pass;
    const bool expect_wlt = o == K::TotalSum || o == K::UpperSum || o == K::LowerSum;
    out.require(wlt == expect_wlt, o.name() + " wlt");
    ++checks;
    if (wlt) {
      const bool proj = verify(o, Axiom::Projection, cfg).verdict == Verdict::Pass;
      out.require(proj == (o == K::UpperSum || o == K::LowerSum), o.name() + " projection");
      ++checks;
    }
  }
  const double s = seconds_since(t0);
  out.require(s < 60, "runtime under 60 s");
  out.detail << " " << checks << " checks at " << cfg.count << " samples, seed " << cfg.seed << " (" << s << " s)";
}

void abs_suite(Outcome& out) {
  const SampleConfig cfg;
  for (const OrderId& o : {OrderId(K::TotalSum), OrderId(K::UpperSum), OrderId::lex(2, 3, 1)}) {
    out.require(check_abs_properties(o, cfg).verdict == Verdict::Pass, o.name() + " passes");
  }
  for (K k : {K::Pessimistic, K::LowerSum}) {
    const VerificationReport r = check_abs_properties(OrderId(k), cfg);
    out.require(r.verdict == Verdict::Fail && r.counterexample->clause.rfind("(i)", 0) == 0,
                OrderId(k).name() + " fails (i)");
  }
  Sampler s(cfg);
  const Comparator lex231(OrderId::lex(2, 3, 1));
  const Comparator upper(K::UpperSum);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Tfn a = s.structured_tfn();
    differ += fuzzy_abs(lex231, a) != fuzzy_abs(upper, a);
  }
  out.require(differ == 0, "lex-231 and upper-sum absolute values coincide");
  out.detail << " abs suite verdicts as expected; |a| coincidence mismatches: " << differ << "/" << cfg.count;
}

void fiber_conformance(Outcome& out) {
  SampleConfig cfg;
  Sampler s(cfg);
  std::vector<std::pair<Tfn, Tfn>> pairs;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Tfn a = s.structured_tfn();
    pairs.emplace_back(a, s.same_fiber(a));
  }
  auto run = [&](K k, FiberBranch branch, bool first_two_clauses_only) {
    std::size_t mismatches = 0;
    std::size_t compared = 0;
    std::string first;
    for (const auto& [a, b] : pairs) {
      std::strong_ordering got = compare(k, a, b);
      if (first_two_clauses_only) {
        // Pessimistic cascade on a fiber: lo + peak, then hi.
        if (a.lo() == b.lo() && a.hi() == b.hi()) continue;
        got = cmp(a.lo(), b.lo()) != 0 ? cmp(a.lo(), b.lo()) <=> 0 : cmp(a.hi(), b.hi()) <=> 0;
      }
      ++compared;
      const auto want = fiber_compare_oracle(branch, a.peak(), {a.lo(), a.hi()}, {b.lo(), b.hi()});
      if (got != want && mismatches++ == 0) first = to_string(a) + " vs " + to_string(b);
    }
    out.require(mismatches == 0, OrderId(k).name());
    out.detail << " " << OrderId(k).name() << ": " << mismatches << "/" << compared << " mismatches";
    if (!first.empty()) out.detail << " (first " << first << ")";
  };
  run(K::TotalSum, FiberBranch::WithPositiveI0, false);
  run(K::UpperSum, FiberBranch::WithPositiveI0, false);
  run(K::LowerSum, FiberBranch::WithoutPositiveI0, false);
  run(K::Pessimistic, FiberBranch::WithoutPositiveI0, true);
}

void ball_equivalence(Outcome& out) {
  SampleConfig cfg;
  cfg.ball_pairs = 1000;
  for (K k : {K::UpperSum, K::TotalSum}) {
    const Comparator order(k);
    Sampler s(cfg);
    std::map<BallDescription::Case, std::size_t> seen;
    std::size_t probes_min = SIZE_MAX;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < cfg.ball_pairs; ++i) {
      const Tfn beta = s.structured_tfn();
      Tfn gamma = i % 4 == 0 ? s.zero_symmetric() : s.structured_tfn();
      if (gamma.peak() == 0 && !is_in_I0(gamma) && gamma.lo() == gamma.hi()) gamma = s.zero_symmetric();
      if (order(Tfn{}, gamma) > 0) gamma = -gamma;
      if (order(Tfn{}, gamma) >= 0) gamma = s.zero_symmetric();
      const BallDescription ball = closed_ball_description(OrderId(k), beta, gamma);
      ++seen[ball.kind];
      const std::vector<Tfn> probes = ball_probe_grid(beta, gamma, ball);
      probes_min = std::min(probes_min, probes.size());
      for (const Tfn& a : probes) {
        const BallMembership m = description_membership(ball, order, a, beta, gamma);
        mismatches += m.closed != closed_ball_member(order, beta, gamma, a);
        mismatches += m.open != open_ball_member(order, beta, gamma, a);
      }
    }
    const VerificationReport r = check_ball_oracle_equivalence(order, declared_properties(k), cfg);
    out.require(r.verdict == Verdict::Pass, OrderId(k).name() + " checker");
    out.require(mismatches == 0, OrderId(k).name() + " mismatches");
    out.require(probes_min >= 1000, OrderId(k).name() + " probe count");
    for (auto c : {BallDescription::Case::Empty, BallDescription::Case::SymmetricRadius,
                   BallDescription::Case::TwoSolutionInterval, BallDescription::Case::OpenOpenStrip,
                   BallDescription::Case::LeftMinClosed, BallDescription::Case::RightMinOpen}) {
      out.require(seen[c] > 0, OrderId(k).name() + " reaches " + to_string(c));
    }
    out.detail << " " << OrderId(k).name() << ": " << mismatches << " mismatches, >=" << probes_min << " probes;";
    for (const auto& [c, n] : seen) out.detail << " " << to_string(c) << "=" << n;
    out.detail << ";";
  }
}

void solver_round_trip(Outcome& out) {
  const SampleConfig cfg;
  Sampler s(cfg);
  std::size_t right = 0, left = 0, bad = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Tfn beta = s.structured_tfn();
    const Tfn gamma = s.structured_tfn();
    // beta - a = gamma forces a = (b2 - g2, b - g, b1 - g1), which is ordered iff
    // each margin of beta is at most the matching margin of gamma.
    const bool right_ok = beta.lower_margin() <= gamma.lower_margin() && beta.upper_margin() <= gamma.upper_margin();
    const bool left_ok = beta.upper_margin() <= gamma.lower_margin() && beta.lower_margin() <= gamma.upper_margin();
    if (const auto a = solve_sub_right(beta, gamma)) {
      ++right;
      bad += beta - *a != gamma || !right_ok;
    } else {
      bad += right_ok;
    }
    if (const auto a = solve_sub_left(beta, gamma)) {
      ++left;
      bad += *a - beta != gamma || !left_ok;
    } else {
      bad += left_ok;
    }
  }
  out.require(bad == 0, "round trip");
  out.require(right > 0 && left > 0 && right < cfg.count && left < cfg.count, "both outcomes exercised");
  out.detail << " " << cfg.count << " pairs, " << right << " right and " << left << " left solutions, " << bad
             << " failures";
}

void mutation_controls(Outcome& out) {
  SampleConfig cfg;
  cfg.ball_pairs = 200;
  for (Axiom a : all_axioms()) {
    const Mutant m = designated_mutant(a);
    const VerificationReport r = run_check(a, m.order, m.claimed, cfg);
    out.require(r.verdict == Verdict::Fail, to_string(a));
    out.detail << " " << to_string(a) << ":" << to_string(r.verdict);
  }
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> all{
      {"worked ranking example (sign pair, near-scalar)", example_one},
      {"same-fiber preference", example_two},
      {"upper-sum and total-sum disagree", example_four},
      {"WLT counterexamples", wlt_witnesses},
      {"axiom suite", axiom_suite},
      {"absolute value suite", abs_suite},
      {"fiber conformance", fiber_conformance},
      {"ball oracle equivalence", ball_equivalence},
      {"solver round trip", solver_round_trip},
      {"mutation controls", mutation_controls},
  };
  return all;
}

bool run(std::size_t n) {
  Outcome out;
  try {
    criteria().at(n - 1).second(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << n << ": " << (out.pass ? "PASS" : "FAIL") << " " << criteria().at(n - 1).first << ":"
            << out.detail.str() << std::endl;
  return out.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::stoul(argv[i]));
  if (which.empty()) {
    for (std::size_t n = 1; n <= criteria().size(); ++n) which.push_back(n);
  }
  bool ok = true;
  for (std::size_t n : which) {
    if (n < 1 || n > criteria().size()) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    ok &= run(n);
  }
  return ok ? 0 : 1;
}
