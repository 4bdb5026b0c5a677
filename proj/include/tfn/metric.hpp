#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfn/orders.hpp"
#include "tfn/tfn.hpp"

namespace tfn {

class InvalidRadius : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |α| = max{α, -α} under the given order. Defined for every total order;
/// whether it behaves like an absolute value depends on the order.
Tfn fuzzy_abs(const Comparator& order, const Tfn& a);

/// D(α, β) = |α - β|.
Tfn fuzzy_distance(const Comparator& order, const Tfn& a, const Tfn& b);

/// Solves β - α = γ. A solution exists iff both margins of β are bounded by
/// the matching margins of γ.
std::optional<Tfn> solve_sub_right(const Tfn& beta, const Tfn& gamma);

/// Solves α - β = γ. A solution exists iff the margins of β are bounded by
/// the opposite margins of γ.
std::optional<Tfn> solve_sub_left(const Tfn& beta, const Tfn& gamma);

/// Every α with |α - β| = γ, for orders with the weak law of trichotomy and
/// positive 0-symmetric numbers. Throws InvalidRadius unless 0 ≺ γ.
std::vector<Tfn> abs_equation_solutions(const OrderId& order, const Tfn& beta, const Tfn& gamma);

bool closed_ball_member(const Comparator& order, const Tfn& beta, const Tfn& gamma, const Tfn& a);
bool open_ball_member(const Comparator& order, const Tfn& beta, const Tfn& gamma, const Tfn& a);

/// Interval form of a closed ball together with the points removed for the
/// open ball.
struct BallDescription {
  enum class Case { Empty, SymmetricRadius, TwoSolutionInterval, OpenOpenStrip, LeftMinClosed, RightMinOpen, DirectOnly };
  enum class Excluded { None, ZeroSymmetricShift, NullifyingSet };

  Case kind = Case::Empty;
  /// Lower and upper interval endpoints.
  std::optional<std::pair<Tfn, Tfn>> endpoints;
  bool lower_closed = true;
  bool upper_closed = true;
  /// Excluded subset, anchored at `excluded_anchor`: a + I0 or Null(a).
  Excluded excluded = Excluded::None;
  std::optional<Tfn> excluded_anchor;
  /// Points in the closed ball that the open ball drops.
  std::vector<Tfn> open_exclusions;
};

/// Selects the interval characterisation from the margin comparisons of β and
/// γ. Requires 0 ≺ γ (InvalidRadius) and an order with the weak law of
/// trichotomy and positive 0-symmetric numbers (UnsupportedOrder). Margin
/// configurations that need MIN-MAX compatibility fall back to DirectOnly when
/// the order lacks it.
BallDescription closed_ball_description(const Comparator& order, const OrderProperties& properties, const Tfn& beta,
                                        const Tfn& gamma);
BallDescription closed_ball_description(const OrderId& order, const Tfn& beta, const Tfn& gamma);

struct BallMembership {
  bool closed;
  bool open;
};

/// Membership read off the description alone. DirectOnly descriptions carry
/// no interval, so the caller must pass β and γ for direct evaluation.
BallMembership description_membership(const BallDescription& ball, const Comparator& order, const Tfn& a,
                                      const Tfn& beta, const Tfn& gamma);

std::string to_string(BallDescription::Case kind);
std::string to_string(BallDescription::Excluded excluded);
/// Interval notation, e.g. "[min Null(a1), a2] \ (a1 + I0)" with the
/// endpoints substituted.
std::string render(const BallDescription& ball);

}  // namespace tfn
