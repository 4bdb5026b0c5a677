#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tfn/metric.hpp"
#include "tfn/orders.hpp"
#include "tfn/tfn.hpp"

namespace tfn {

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  Rational range_lo = -16;
  Rational range_hi = 16;
  long denominator_bound = 64;
  /// Share of samples drawn from the special families instead of uniformly.
  double structured_fraction = 0.5;
  /// (β, γ) pairs per ball check. Each pair is probed at 1000+ points, so
  /// this is kept well below `count`.
  std::size_t ball_pairs = 1000;
};

enum class Axiom { TotalOrder, Arithmetic, MinMax, Wlt, Projection, Reasonable, Abs, NullOrder, Interval, Ball, Positives };

const std::vector<Axiom>& all_axioms();
std::string to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view text);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict verdict);

/// One checked instance: the TFNs involved plus an optional scalar.
struct Case {
  std::vector<Tfn> values;
  Rational scalar = 0;

  friend bool operator==(const Case&, const Case&) = default;
};

struct Counterexample {
  Case original;
  Case minimized;
  std::string clause;
  /// Clause violated by the minimized case; shrinking may trip an earlier one.
  std::string minimized_clause;
};

struct VerificationReport {
  Axiom axiom = Axiom::TotalOrder;
  std::string order;
  Verdict verdict = Verdict::Pass;
  std::size_t samples_checked = 0;
  std::optional<Counterexample> counterexample;
  /// Positive-side evidence, e.g. a positives witness separating two orders.
  std::optional<Tfn> witness;
  std::string note;
};

/// Uniform and structured TFN generator. Rationals have denominators up to
/// `denominator_bound` and lie in the configured range.
class Sampler {
 public:
  explicit Sampler(const SampleConfig& cfg);

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1U) != 0; }
  bool structured();

  Rational rational();
  Rational nonnegative();
  Rational positive();
  Rational small_integer();

  Tfn tfn();
  Tfn small_tfn();
  Tfn scalar() { return Tfn::scalar(rational()); }
  Tfn zero_symmetric() { return Tfn::zero_symmetric(positive()); }
  /// Another member of the fiber over peak(a).
  Tfn same_fiber(const Tfn& a);
  /// Another member of Null(a).
  Tfn same_null(const Tfn& a);
  /// A TFN whose support lies strictly above the support of a.
  Tfn disjoint_above(const Tfn& a);
  /// One of the special families above, chosen at random.
  Tfn structured_tfn();

 private:
  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

/// Returns the violated clause, or nothing if the case satisfies the axiom.
using CaseCheck = std::function<std::optional<std::string>(const Case&)>;

VerificationReport check_total_order_axioms(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_arithmetic_compat(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_minmax_compat(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_wlt(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_projection_compat(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_reasonable_method(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_abs_properties(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_null_order_theorem(const Comparator& order, const SampleConfig& cfg);
VerificationReport check_interval_property(const Comparator& order, const SampleConfig& cfg);
/// Uses the claimed flags to build ball descriptions; returns NotApplicable
/// when the flags rule the order out.
VerificationReport check_ball_oracle_equivalence(const Comparator& order, const OrderProperties& claimed,
                                                 const SampleConfig& cfg);
/// Fails unless the two orders agree on all sampled pairs exactly when their
/// positives agree. When `expect_distinct` is set a separating positives
/// witness must also be found.
VerificationReport check_positives_determine(const Comparator& first, const Comparator& second,
                                             const SampleConfig& cfg, bool expect_distinct = false);

/// Per-case predicate behind each single-order checker; used for replay.
CaseCheck case_check(Axiom axiom, const Comparator& order, const OrderProperties& claimed = {});
CaseCheck positives_case_check(const Comparator& first, const Comparator& second);

/// Re-runs a single case.
std::optional<std::string> replay(const CaseCheck& check, const Case& c);

/// Shrinks a failing case by moving coordinates toward 0 and halving
/// denominators while the check still fails.
Case shrink(const CaseCheck& check, const Case& failing);

/// Probe points used by the ball check: a coarse grid over (peak, lower
/// margin, upper margin) around β plus dense probes near every anchor of the
/// description (endpoints, excluded anchors, solutions, nullifying sets).
std::vector<Tfn> ball_probe_grid(const Tfn& beta, const Tfn& gamma, const BallDescription& ball);

/// Catalog-level entry point: checks whose preconditions fail under the
/// declared flags report NotApplicable. Positives compares the order against
/// every other catalog order.
VerificationReport verify(const OrderId& order, Axiom axiom, const SampleConfig& cfg);

/// Declared flags that contradict the checker verdicts on `cfg`; empty when
/// every flag is traceable.
std::vector<std::string> flag_mismatches(const OrderId& order, const SampleConfig& cfg);

/// Deliberately broken comparator that the given checker must reject.
struct Mutant {
  Comparator order;
  OrderProperties claimed;
};
Mutant designated_mutant(Axiom axiom);

/// Runs the checker for `axiom` against an arbitrary comparator.
VerificationReport run_check(Axiom axiom, const Comparator& order, const OrderProperties& claimed,
                             const SampleConfig& cfg);

}  // namespace tfn
