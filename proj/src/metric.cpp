#include "tfn/metric.hpp"

namespace tfn {

namespace {

struct Margins {
  Rational lower;
  Rational upper;
};

Margins margins(const Tfn& a) { return {a.lower_margin(), a.upper_margin()}; }

// Lemma conditions: β - α = γ solvable, and α - β = γ solvable.
bool right_solvable(const Margins& b, const Margins& c) { return b.lower <= c.lower && b.upper <= c.upper; }
bool left_solvable(const Margins& b, const Margins& c) { return b.lower <= c.upper && b.upper <= c.lower; }

void require_positive_radius(const Comparator& order, const Tfn& gamma) {
  if (!order.less(Tfn{}, gamma)) throw InvalidRadius("radius " + to_string(gamma) + " is not positive under " + order.name());
}

std::string point(const Tfn& a) { return a.is_scalar() ? to_string(a.lo()) : to_string(a); }

void require_abs_order(const Comparator& order, const OrderProperties& p) {
  if (!p.arithmetic_compatible || !p.wlt || !p.positive_zero_symmetrics)
    throw UnsupportedOrder(order.name() + " lacks arithmetic compatibility, WLT or positive 0-symmetric numbers");
}

}  // namespace

Tfn fuzzy_abs(const Comparator& order, const Tfn& a) {
  Tfn negated = -a;
  return order.less_equal(negated, a) ? a : negated;
}

Tfn fuzzy_distance(const Comparator& order, const Tfn& a, const Tfn& b) { return fuzzy_abs(order, a - b); }

std::optional<Tfn> solve_sub_right(const Tfn& beta, const Tfn& gamma) {
  if (!right_solvable(margins(beta), margins(gamma))) return std::nullopt;
  return Tfn::make(beta.hi() - gamma.hi(), beta.peak() - gamma.peak(), beta.lo() - gamma.lo());
}

std::optional<Tfn> solve_sub_left(const Tfn& beta, const Tfn& gamma) {
  if (!left_solvable(margins(beta), margins(gamma))) return std::nullopt;
  return Tfn::make(beta.hi() + gamma.lo(), beta.peak() + gamma.peak(), beta.lo() + gamma.hi());
}

std::vector<Tfn> abs_equation_solutions(const OrderId& order, const Tfn& beta, const Tfn& gamma) {
  const Comparator cmp(order);
  require_positive_radius(cmp, gamma);
  require_abs_order(cmp, declared_properties(order));
  std::vector<Tfn> out;
  for (const auto& candidate : {solve_sub_right(beta, gamma), solve_sub_left(beta, gamma)}) {
    if (!candidate || fuzzy_distance(cmp, *candidate, beta) != gamma) continue;
    if (out.empty() || out.front() != *candidate) out.push_back(*candidate);
  }
  return out;
}

bool closed_ball_member(const Comparator& order, const Tfn& beta, const Tfn& gamma, const Tfn& a) {
  return order.less_equal(fuzzy_distance(order, a, beta), gamma);
}

bool open_ball_member(const Comparator& order, const Tfn& beta, const Tfn& gamma, const Tfn& a) {
  return order.less(fuzzy_distance(order, a, beta), gamma);
}

BallDescription closed_ball_description(const Comparator& order, const OrderProperties& properties, const Tfn& beta,
                                        const Tfn& gamma) {
  using Case = BallDescription::Case;
  using Excluded = BallDescription::Excluded;
  require_positive_radius(order, gamma);
  require_abs_order(order, properties);

  const Margins b = margins(beta);
  const Margins c = margins(gamma);
  BallDescription ball;

  if (is_in_I0(gamma)) {
    const Rational& k = gamma.hi();
    if (std::max(b.lower, b.upper) > k) {
      ball.kind = Case::Empty;
      return ball;
    }
    const Tfn apex = Tfn::make(beta.hi() - k, beta.peak(), beta.lo() + k);
    ball.kind = Case::SymmetricRadius;
    ball.endpoints.emplace(null_min(beta), apex);
    ball.open_exclusions = {apex};
    return ball;
  }

  const bool right = right_solvable(b, c);
  const bool left = left_solvable(b, c);
  if (right && left) {
    const Tfn a1 = *solve_sub_right(beta, gamma);
    const Tfn a2 = *solve_sub_left(beta, gamma);
    ball.kind = Case::TwoSolutionInterval;
    ball.endpoints.emplace(null_min(a1), a2);
    ball.excluded = Excluded::ZeroSymmetricShift;
    ball.excluded_anchor = a1;
    ball.open_exclusions = {a1, a2};
    return ball;
  }

  if (!properties.minmax_compatible) {
    ball.kind = Case::DirectOnly;
    return ball;
  }

  if (!right && !left) {
    const Tfn a1 = null_min(beta - gamma);
    ball.kind = Case::OpenOpenStrip;
    ball.endpoints.emplace(a1, null_min(beta + gamma));
    ball.lower_closed = false;
    ball.upper_closed = false;
    ball.excluded = Excluded::NullifyingSet;
    ball.excluded_anchor = a1;
    return ball;
  }

  if (!right) {
    const Tfn a1 = null_min(beta - gamma);
    const Tfn a2 = *solve_sub_left(beta, gamma);
    ball.kind = Case::LeftMinClosed;
    ball.endpoints.emplace(a1, a2);
    ball.excluded = Excluded::NullifyingSet;
    ball.excluded_anchor = a1;
    ball.open_exclusions = {a2};
    return ball;
  }

  // β - α = γ is solvable but α - β = γ is not. The members of Null(α1)
  // below α1 stay inside the ball, so the interval starts at min Null(α1).
  const Tfn a1 = *solve_sub_right(beta, gamma);
  ball.kind = Case::RightMinOpen;
  ball.endpoints.emplace(null_min(a1), null_min(beta + gamma));
  ball.upper_closed = false;
  ball.excluded = Excluded::ZeroSymmetricShift;
  ball.excluded_anchor = a1;
  ball.open_exclusions = {a1};
  return ball;
}

BallDescription closed_ball_description(const OrderId& order, const Tfn& beta, const Tfn& gamma) {
  return closed_ball_description(Comparator(order), declared_properties(order), beta, gamma);
}

BallMembership description_membership(const BallDescription& ball, const Comparator& order, const Tfn& a,
                                      const Tfn& beta, const Tfn& gamma) {
  using Case = BallDescription::Case;
  using Excluded = BallDescription::Excluded;
  if (ball.kind == Case::Empty) return {false, false};
  if (ball.kind == Case::DirectOnly) {
    const auto ord = order(fuzzy_distance(order, a, beta), gamma);
    return {ord <= 0, ord < 0};
  }
  const auto& [lower, upper] = *ball.endpoints;
  const auto lo_ord = order(lower, a);
  const auto up_ord = order(a, upper);
  bool inside = (ball.lower_closed ? lo_ord <= 0 : lo_ord < 0) && (ball.upper_closed ? up_ord <= 0 : up_ord < 0);
  if (inside && ball.excluded == Excluded::ZeroSymmetricShift) inside = !in_zero_symmetric_shift(*ball.excluded_anchor, a);
  if (inside && ball.excluded == Excluded::NullifyingSet) inside = !in_nullifying_set(*ball.excluded_anchor, a);
  bool open = inside;
  for (const Tfn& dropped : ball.open_exclusions) {
    if (dropped == a) open = false;
  }
  return {inside, open};
}

std::string to_string(BallDescription::Case kind) {
  using Case = BallDescription::Case;
  switch (kind) {
    case Case::Empty: return "Empty";
    case Case::SymmetricRadius: return "SymmetricRadius";
    case Case::TwoSolutionInterval: return "TwoSolutionInterval";
    case Case::OpenOpenStrip: return "OpenOpenStrip";
    case Case::LeftMinClosed: return "LeftMinClosed";
    case Case::RightMinOpen: return "RightMinOpen";
    case Case::DirectOnly: return "DirectOnly";
  }
  return "?";
}

std::string to_string(BallDescription::Excluded excluded) {
  switch (excluded) {
    case BallDescription::Excluded::None: return "none";
    case BallDescription::Excluded::ZeroSymmetricShift: return "a1 + I0";
    case BallDescription::Excluded::NullifyingSet: return "Null(a1)";
  }
  return "?";
}

std::string render(const BallDescription& ball) {
  if (ball.kind == BallDescription::Case::Empty) return "∅";
  if (ball.kind == BallDescription::Case::DirectOnly) return "{a : |a - b| <= g} (no interval form)";
  const auto& [lower, upper] = *ball.endpoints;
  std::string out = (ball.lower_closed ? "[" : "(") + point(lower) + ", " + point(upper) +
                    (ball.upper_closed ? "]" : ")");
  if (ball.excluded == BallDescription::Excluded::ZeroSymmetricShift)
    out += " \\ (" + point(*ball.excluded_anchor) + " + I0)";
  if (ball.excluded == BallDescription::Excluded::NullifyingSet) {
    const std::string anchor = point(*ball.excluded_anchor);
    out += " \\ Null" + (anchor.front() == '(' ? anchor : "(" + anchor + ")");
  }
  return out;
}

}  // namespace tfn
