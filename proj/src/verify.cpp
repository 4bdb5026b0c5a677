#include "tfn/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tfn {

namespace {

std::optional<Tfn> try_make(const Rational& lo, const Rational& peak, const Rational& hi) {
  if (lo <= peak && peak <= hi) return Tfn::make(lo, peak, hi);
  return std::nullopt;
}

Rational max_margin(const Tfn& a) { return std::max(a.lower_margin(), a.upper_margin()); }

std::string show(const Tfn& a) { return to_string(a); }

using Key = std::function<Rational(const Tfn&)>;

Comparator key_order(std::string name, std::vector<Key> keys) {
  return Comparator(std::move(name), [keys = std::move(keys)](const Tfn& a, const Tfn& b) {
    for (const Key& key : keys) {
      if (const int s = cmp(key(a), key(b)); s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  });
}

// ---------------------------------------------------------------------------
// Case generation

using Generator = std::function<Case(Sampler&, bool structured)>;

Tfn related(Sampler& s, const Tfn& a) {
  switch (s.index(7)) {
    case 0: return s.same_fiber(a);
    case 1: return s.same_null(a);
    case 2: return s.disjoint_above(a);
    case 3: return s.scalar();
    case 4: return s.zero_symmetric();
    case 5: return s.small_tfn();
    default: return s.tfn();
  }
}

Case triple_case(Sampler& s, bool structured) {
  if (!structured) return {{s.tfn(), s.tfn(), s.tfn()}, s.rational()};
  const Tfn a = s.structured_tfn();
  const Tfn b = related(s, a);
  const Tfn c = related(s, s.coin() ? a : b);
  return {{a, b, c}, s.coin() ? s.small_integer() : s.rational()};
}

Case nonnegative_scalar(Case c) {
  c.scalar = abs(c.scalar);
  return c;
}

Case pair_case(Sampler& s, bool structured) {
  if (!structured) return {{s.tfn(), s.tfn()}};
  const Tfn a = s.structured_tfn();
  return {{a, related(s, a)}};
}

Case ky_pair_case(Sampler& s, bool structured) {
  const Tfn a = structured ? s.structured_tfn() : s.tfn();
  const Tfn b = structured ? related(s, a) : s.tfn();
  if (structured || s.coin()) {
    const MinMaxOutcome mm = min_max_classify(a, b);
    if (mm.tag == MinMaxOutcome::Tag::ComparableKY) return {{*mm.min, *mm.max}};
    const Tfn lo = Tfn::make(std::min(a.lo(), b.lo()), std::min(a.peak(), b.peak()), std::min(a.hi(), b.hi()));
    const Tfn hi = Tfn::make(std::max(a.lo(), b.lo()), std::max(a.peak(), b.peak()), std::max(a.hi(), b.hi()));
    return {{lo, hi}};
  }
  return {{a, b}};
}

Case single_case(Sampler& s, bool structured) {
  if (!structured) return {{s.tfn()}};
  return {{s.coin() ? s.small_tfn() : s.structured_tfn()}};
}

Case null_pair_case(Sampler& s, bool structured) {
  const Tfn a = structured ? s.structured_tfn() : s.tfn();
  return {{a, s.same_null(a)}};
}

// A candidate γ that might fall between two members of one nullifying set
// under some order without belonging to the set itself.
Tfn between_candidate(Sampler& s, const Tfn& first, const Tfn& second) {
  const Rational hi = first.hi() + (second.hi() - first.hi()) * make_rational(static_cast<long>(s.index(9)), 8);
  const Rational lo = first.lo() + (second.lo() - first.lo()) * make_rational(static_cast<long>(s.index(9)), 8);
  const Rational peak = first.peak() + s.rational() / 8;
  std::optional<Tfn> out;
  switch (s.index(6)) {
    case 0: out = try_make(first.total_sum() - peak - hi, peak, hi); break;
    case 1: out = try_make(first.lo() + first.peak() - peak, peak, hi); break;
    case 2: out = try_make(lo, peak, first.peak() + first.hi() - peak); break;
    case 3: out = try_make(lo, first.peak(), hi); break;
    case 4: out = s.same_null(first); break;
    default: break;
  }
  return out ? *out : s.tfn();
}

Case interval_case(Sampler& s, bool structured) {
  Tfn first = structured ? s.structured_tfn() : s.tfn();
  Tfn second = s.same_null(first);
  if (s.index(4) == 0) {
    first = s.zero_symmetric();
    second = s.zero_symmetric();
  }
  return {{first, second, between_candidate(s, first, second)}};
}

Tfn make_positive(const Comparator& order, const Tfn& gamma) {
  if (order.less(Tfn{}, gamma)) return gamma;
  if (order.less(Tfn{}, -gamma)) return -gamma;
  const Tfn shifted = gamma + Tfn::scalar(abs(gamma.peak()) + gamma.lower_margin() + gamma.upper_margin() + 1);
  return shifted;
}

Case ball_case(Sampler& s, const Comparator& order, bool structured) {
  if (!structured) return {{s.tfn(), make_positive(order, s.tfn())}};
  const int kind = static_cast<int>(s.index(6));
  Rational bl = s.positive();
  Rational bu = s.positive();
  if (kind >= 4) {
    if (bl < bu) std::swap(bl, bu);
    if (bl == bu) bl += 1;
  }
  const Rational b = s.rational();
  const Tfn beta = Tfn::make(b - bl, b, b + bu);
  const Rational fraction = make_rational(static_cast<long>(s.index(8)), 8);
  const Rational below = make_rational(static_cast<long>(1 + s.index(7)), 8);
  const Rational widest = std::max(bl, bu);
  const Rational c = s.rational();
  Rational cl;
  Rational cu;
  switch (kind) {
    case 0: return {{beta, Tfn::zero_symmetric(widest * below)}};
    case 1: return {{beta, Tfn::zero_symmetric(widest + s.nonnegative())}};
    case 2:
      cl = widest + s.nonnegative();
      cu = widest + s.nonnegative();
      break;
    case 3:
      cl = std::min(bl, bu) * below * (s.coin() ? 1 : 0);
      cu = std::min(bl, bu) * below;
      if (s.coin()) std::swap(cl, cu);
      break;
    case 4:
      cl = bu + (bl - bu) * fraction;
      cu = bl + s.nonnegative();
      break;
    default:
      cu = bu + (bl - bu) * fraction;
      cl = bl + s.nonnegative();
      break;
  }
  return {{beta, make_positive(order, Tfn::make(c - cl, c, c + cu))}};
}

Case positives_pair_case(Sampler& s, bool structured) {
  if (!structured) return {{s.tfn(), s.tfn()}};
  const Tfn a = s.structured_tfn();
  switch (s.index(3)) {
    case 0: return {{Tfn{}, s.zero_symmetric()}};
    case 1: return {{a, a + s.zero_symmetric()}};
    default: return {{a, related(s, a)}};
  }
}

// ---------------------------------------------------------------------------
// Shrinking

std::size_t complexity(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) * 4 + mpz_sizeinbase(x.get_den_mpz_t(), 2) +
         static_cast<std::size_t>(x.get_num() < 0 ? 1 : 0) + static_cast<std::size_t>(x != 0 ? 1 : 0);
}

std::size_t complexity(const Case& c) {
  std::size_t total = complexity(c.scalar);
  for (const Tfn& v : c.values) total += complexity(v.lo()) + complexity(v.peak()) + complexity(v.hi());
  return total;
}

std::vector<Rational> simpler(const Rational& x) {
  std::vector<Rational> out;
  if (x == 0) return out;
  out.emplace_back(0);
  mpz_class truncated;
  mpz_tdiv_q(truncated.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x.get_den() != 1) {
    out.emplace_back(truncated);
    const mpz_class half_den = x.get_den() / 2;
    if (half_den > 1) {
      mpz_class num;
      mpz_class scaled = x.get_num() * half_den;
      mpz_tdiv_q(num.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
      Rational r(num, half_den);
      r.canonicalize();
      out.push_back(r);
    }
  } else {
    out.emplace_back(x.get_num() - sgn(x));
    out.emplace_back(mpz_class(x.get_num() / 2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine

VerificationReport run_cases(Axiom axiom, const std::string& name, const SampleConfig& cfg, std::size_t count,
                             const std::vector<Case>& pool, const Generator& generate, const CaseCheck& check) {
  VerificationReport report;
  report.axiom = axiom;
  report.order = name;
  Sampler sampler(cfg);
  for (std::size_t i = 0; i < count; ++i) {
    const Case c = i < pool.size() ? pool[i] : generate(sampler, sampler.structured());
    if (auto clause = check(c)) {
      report.verdict = Verdict::Fail;
      report.samples_checked = i + 1;
      const Case minimized = shrink(check, c);
      report.counterexample = Counterexample{c, minimized, *clause, check(minimized).value_or(*clause)};
      return report;
    }
  }
  report.samples_checked = count;
  return report;
}

VerificationReport not_applicable(Axiom axiom, const std::string& name, std::string note) {
  VerificationReport report;
  report.axiom = axiom;
  report.order = name;
  report.verdict = Verdict::NotApplicable;
  report.note = std::move(note);
  return report;
}

Tfn t(long lo, long peak, long hi) { return Tfn::make(lo, peak, hi); }

// Named witnesses come first so the known failures are always exercised.
std::vector<Case> witness_pool(Axiom axiom) {
  switch (axiom) {
    case Axiom::Wlt: return {{{t(-1, 2, 3)}}, {{t(-1, 0, 2)}}, {{t(-9, 1, 8)}}};
    case Axiom::Projection: return {{{t(0, 0, 0), t(-10, 1, 2)}}};
    case Axiom::Abs:
      return {{{t(-1, 0, 1), t(0, 1, 2), t(-3, -1, 2)}, 2}, {{t(-2, 0, 1), t(-1, 0, 2), t(5, 5, 5)}, -1}};
    case Axiom::NullOrder: return {{{t(1, 2, 5), t(2, 2, 4)}}, {{t(1, 2, 5), t(0, 2, 6)}}};
    case Axiom::Reasonable:
      return {{{Tfn::make(make_rational(-1, 2), make_rational(-3, 10), make_rational(-1, 10)),
                Tfn::make(make_rational(1, 10), make_rational(3, 10), make_rational(1, 2)), t(0, 0, 0)},
               1},
              {{t(0, 0, 5), t(6, 6, 6), t(1, 2, 3)}, 2}};
    case Axiom::Positives: return {{{t(0, 0, 0), t(-1, 0, 1)}}, {{t(0, 0, 0), t(-10, 1, 2)}}};
    case Axiom::Ball:
      return {{{t(0, 0, 0), t(-1, 0, 1)}}, {{t(0, 1, 2), t(-2, 0, 3)}}, {{t(0, 0, 10), t(-1, 0, 1)}},
              {{Tfn::make(-2, 0, make_rational(1, 2)), t(-2, 1, 2)}}};
    default: return {};
  }
}

std::optional<std::string> fail(std::string clause) { return clause; }

std::string ordering_word(std::strong_ordering o) { return to_string(o); }

}  // namespace

// ---------------------------------------------------------------------------
// Sampler

Sampler::Sampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

bool Sampler::structured() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < cfg_.structured_fraction;
}

Rational Sampler::rational() {
  const long den = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(cfg_.denominator_bound));
  mpz_class lo;
  mpz_class hi;
  const Rational scaled_lo = cfg_.range_lo * den;
  const Rational scaled_hi = cfg_.range_hi * den;
  mpz_cdiv_q(lo.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
  const mpz_class span = hi - lo + 1;
  const mpz_class offset = mpz_class(static_cast<unsigned long>(rng_() >> 1)) % span;
  Rational r(lo + offset, den);
  r.canonicalize();
  return r;
}

Rational Sampler::nonnegative() { return abs(rational()); }

Rational Sampler::positive() {
  Rational r = nonnegative();
  return r == 0 ? make_rational(1, 1 + static_cast<long>(index(static_cast<std::size_t>(cfg_.denominator_bound)))) : r;
}

Rational Sampler::small_integer() { return Rational(static_cast<long>(index(7)) - 3); }

Tfn Sampler::tfn() {
  std::array<Rational, 3> v{rational(), rational(), rational()};
  std::sort(v.begin(), v.end());
  return Tfn::make(v[0], v[1], v[2]);
}

Tfn Sampler::small_tfn() {
  std::array<Rational, 3> v{small_integer(), small_integer(), small_integer()};
  std::sort(v.begin(), v.end());
  return Tfn::make(v[0], v[1], v[2]);
}

Tfn Sampler::same_fiber(const Tfn& a) { return Tfn::make(a.peak() - nonnegative(), a.peak(), a.peak() + nonnegative()); }

Tfn Sampler::same_null(const Tfn& a) {
  // Moving lo down by d and hi up by d keeps peak and endpoint sum; d may be
  // negative as long as the support stays around the peak.
  const Rational shrink_limit = std::min(a.lower_margin(), a.upper_margin());
  Rational d = rational() / 2;
  if (d < -shrink_limit) d = -shrink_limit * make_rational(static_cast<long>(index(5)), 4);
  return Tfn::make(a.lo() - d, a.peak(), a.hi() + d);
}

Tfn Sampler::disjoint_above(const Tfn& a) {
  const Rational lo = a.hi() + positive();
  const Rational peak = lo + nonnegative();
  return Tfn::make(lo, peak, peak + nonnegative());
}

Tfn Sampler::structured_tfn() {
  switch (index(5)) {
    case 0: return scalar();
    case 1: return zero_symmetric();
    case 2: return small_tfn();
    case 3: return same_fiber(Tfn::scalar(small_integer()));
    default: return same_null(tfn());
  }
}

// ---------------------------------------------------------------------------
// Axiom metadata

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms{Axiom::TotalOrder, Axiom::Arithmetic, Axiom::MinMax,    Axiom::Wlt,
                                         Axiom::Projection, Axiom::Reasonable, Axiom::Abs,       Axiom::NullOrder,
                                         Axiom::Interval,   Axiom::Ball,       Axiom::Positives};
  return axioms;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::TotalOrder: return "total-order";
    case Axiom::Arithmetic: return "arithmetic";
    case Axiom::MinMax: return "minmax";
    case Axiom::Wlt: return "wlt";
    case Axiom::Projection: return "projection";
    case Axiom::Reasonable: return "reasonable";
    case Axiom::Abs: return "abs";
    case Axiom::NullOrder: return "null-order";
    case Axiom::Interval: return "interval";
    case Axiom::Ball: return "ball";
    case Axiom::Positives: return "positives";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view text) {
  for (Axiom axiom : all_axioms()) {
    if (to_string(axiom) == text) return axiom;
  }
  return std::nullopt;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Per-case predicates

CaseCheck case_check(Axiom axiom, const Comparator& order, const OrderProperties& claimed) {
  switch (axiom) {
    case Axiom::TotalOrder:
      return [order](const Case& c) -> std::optional<std::string> {
        const auto& v = c.values;
        for (const Tfn& a : v) {
          if (order(a, a) != 0) return fail("reflexivity: a vs a is " + ordering_word(order(a, a)) + " for a = " + show(a));
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < v.size(); ++j) {
            const auto ab = order(v[i], v[j]);
            const auto ba = order(v[j], v[i]);
            if ((ab < 0) != (ba > 0) || (ab == 0) != (ba == 0))
              return fail("totality: a vs b is " + ordering_word(ab) + " but b vs a is " + ordering_word(ba));
            if (ab == 0 && v[i] != v[j]) return fail("antisymmetry: " + show(v[i]) + " and " + show(v[j]) + " are tied");
            for (std::size_t k = 0; k < v.size(); ++k) {
              if (ab <= 0 && order(v[j], v[k]) <= 0 && order(v[i], v[k]) > 0)
                return fail("transitivity: " + show(v[i]) + " <= " + show(v[j]) + " <= " + show(v[k]) + " but first > last");
            }
          }
        }
        return std::nullopt;
      };
    case Axiom::Arithmetic:
      return [order](const Case& c) -> std::optional<std::string> {
        const auto& v = c.values;
        const auto base = order(v[0], v[1]);
        if (order(v[0] + v[2], v[1] + v[2]) != base) return fail("addition: a + g vs b + g differs from a vs b");
        const Rational s = abs(c.scalar);
        if (s > 0 && order(s * v[0], s * v[1]) != base) return fail("scaling: t*a vs t*b differs from a vs b for t > 0");
        return std::nullopt;
      };
    case Axiom::MinMax:
      return [order](const Case& c) -> std::optional<std::string> {
        const MinMaxOutcome mm = min_max_classify(c.values[0], c.values[1]);
        if (mm.tag != MinMaxOutcome::Tag::ComparableKY) return std::nullopt;
        if (!order.less_equal(*mm.min, *mm.max)) return fail("MIN(a, b) = " + show(*mm.min) + " ranks above MAX(a, b)");
        return std::nullopt;
      };
    case Axiom::Wlt:
      return [order](const Case& c) -> std::optional<std::string> {
        const Tfn& a = c.values[0];
        if (is_in_I0(a)) return std::nullopt;
        const int hits = (a == Tfn{} ? 1 : 0) + (order.less(Tfn{}, a) ? 1 : 0) + (order.less(Tfn{}, -a) ? 1 : 0);
        if (hits != 1) return fail("trichotomy: " + std::to_string(hits) + " of {a = 0, 0 < a, 0 < -a} hold for " + show(a));
        return std::nullopt;
      };
    case Axiom::Projection:
      return [order](const Case& c) -> std::optional<std::string> {
        for (int flip = 0; flip < 2; ++flip) {
          const Tfn& a = c.values[flip];
          const Tfn& b = c.values[1 - flip];
          if (a.peak() < b.peak() && !order.less(a, b))
            return fail("projection: peak " + to_string(a.peak()) + " < " + to_string(b.peak()) + " but not a < b");
        }
        return std::nullopt;
      };
    case Axiom::Reasonable:
      return [order](const Case& c) -> std::optional<std::string> {
        const auto& v = c.values;
        if (auto clause = case_check(Axiom::TotalOrder, order)(c)) return "(i)-(iii) " + *clause;
        if (order.less_equal(v[0], v[1]) && !order.less_equal(v[0] + v[2], v[1] + v[2])) return fail("(iv) sum compatibility");
        const Rational s = abs(c.scalar);
        if (order.less_equal(v[0], v[1]) && !order.less_equal(s * v[0], s * v[1])) return fail("(v) scalar compatibility");
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[i].hi() < v[j].lo() && !order.less(v[i], v[j]))
              return fail("(vi) disjoint supports: " + show(v[i]) + " lies below " + show(v[j]) + " but is not smaller");
          }
        }
        return std::nullopt;
      };
    case Axiom::Abs:
      return [order](const Case& c) -> std::optional<std::string> {
        const auto& v = c.values;
        const Tfn zero;
        auto absv = [&](const Tfn& x) { return fuzzy_abs(order, x); };
        auto dist = [&](const Tfn& x, const Tfn& y) { return fuzzy_distance(order, x, y); };
        for (const Tfn& a : v) {
          if (!order.less_equal(zero, absv(a))) return fail("(i) |a| < 0 for a = " + show(a));
          if ((absv(a) == zero) != (a == zero)) return fail("(i) |a| = 0 without a = 0 for a = " + show(a));
          if (absv(c.scalar * a) != abs(c.scalar) * absv(a)) return fail("(ii) |t a| != |t| |a| for a = " + show(a));
        }
        if (!order.less_equal(absv(v[0] + v[1]), absv(v[0]) + absv(v[1]))) return fail("(iii) |a + b| > |a| + |b|");
        static constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
          const Tfn &x = v[p[0]], &y = v[p[1]], &z = v[p[2]];
          if (!order.less_equal(dist(x, z), dist(x, y) + dist(y, z))) return fail("(iv) |a - c| > |a - b| + |b - c|");
        }
        if (!order.less_equal(absv(absv(v[0]) - absv(v[1])), dist(v[0], v[1]))) return fail("(v) ||a| - |b|| > |a - b|");
        for (const Tfn& a : v) {
          const Tfn self = dist(a, a);
          if (!in_nullifying_set(zero, self)) return fail("distance: D(a, a) outside Null(0) for a = " + show(a));
          if ((self == zero) != a.is_scalar()) return fail("distance: D(a, a) = 0 does not match a scalar for a = " + show(a));
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < v.size(); ++j) {
            const Tfn d = dist(v[i], v[j]);
            if (d != dist(v[j], v[i])) return fail("distance: D(a, b) != D(b, a)");
            if (!order.less_equal(zero, d)) return fail("distance: D(a, b) < 0");
            if ((d == zero) != (v[i] == v[j] && v[i].is_scalar())) return fail("distance: D(a, b) = 0 without a = b scalar");
          }
        }
        return std::nullopt;
      };
    case Axiom::NullOrder:
      return [order](const Case& c) -> std::optional<std::string> {
        const Tfn& a = c.values[0];
        const Tfn& b = c.values[1];
        if (!in_nullifying_set(a, b)) return std::nullopt;
        const bool positive = has_positive_zero_symmetrics(order);
        const int by_support = positive ? cmp(a.hi(), b.hi()) : cmp(b.hi(), a.hi());
        const auto got = order(a, b);
        if ((got < 0) != (by_support < 0) || (got > 0) != (by_support > 0))
          return fail(std::string("nullifying set not ordered by ") + (positive ? "sup" : "inf") + " of support: " + show(a) +
                      " vs " + show(b) + " is " + ordering_word(got));
        if (positive && !order.less_equal(null_min(a), b)) return fail("null_min(a) above member " + show(b));
        if (!positive && !order.less_equal(b, null_max(a))) return fail("null_max(a) below member " + show(b));
        return std::nullopt;
      };
    case Axiom::Interval:
      return [order](const Case& c) -> std::optional<std::string> {
        const Tfn& first = c.values[0];
        const Tfn& second = c.values[1];
        const Tfn& g = c.values[2];
        const bool between = (order.less(first, g) && order.less(g, second)) || (order.less(second, g) && order.less(g, first));
        if (!between) return std::nullopt;
        if (in_nullifying_set(first, second) && !in_nullifying_set(first, g))
          return fail("nullifying set not an interval: " + show(g) + " lies between members but outside");
        if (is_in_I0(first) && is_in_I0(second) && !is_in_I0(g))
          return fail("I0 not an interval: " + show(g) + " lies between members but outside");
        return std::nullopt;
      };
    case Axiom::Ball:
      return [order, claimed](const Case& c) -> std::optional<std::string> {
        const Tfn& beta = c.values[0];
        const Tfn& gamma = c.values[1];
        if (!order.less(Tfn{}, gamma)) return std::nullopt;
        const BallDescription ball = closed_ball_description(order, claimed, beta, gamma);
        for (const Tfn& probe : ball_probe_grid(beta, gamma, ball)) {
          const BallMembership described = description_membership(ball, order, probe, beta, gamma);
          const bool closed = closed_ball_member(order, beta, gamma, probe);
          const bool open = open_ball_member(order, beta, gamma, probe);
          if (described.closed != closed || described.open != open)
            return fail(to_string(ball.kind) + " " + render(ball) + ": probe " + show(probe) + " described (closed " +
                        (described.closed ? "in" : "out") + ", open " + (described.open ? "in" : "out") +
                        ") but direct (closed " + (closed ? "in" : "out") + ", open " + (open ? "in" : "out") + ")");
        }
        return std::nullopt;
      };
    case Axiom::Positives: break;
  }
  throw std::invalid_argument("axiom " + to_string(axiom) + " needs two orders");
}

namespace {

// Differences and negations of a pair: where two orders with distinct
// positives are most likely to show it.
std::array<Tfn, 6> positive_probes(const Tfn& a, const Tfn& b) { return {a, b, b - a, a - b, -a, -b}; }

}  // namespace

CaseCheck positives_case_check(const Comparator& first, const Comparator& second) {
  return [first, second](const Case& c) -> std::optional<std::string> {
    const Tfn& a = c.values[0];
    const Tfn& b = c.values[1];
    if (first(a, b) == second(a, b)) return std::nullopt;
    for (const Tfn& d : positive_probes(a, b)) {
      if (positives_contains(first, d) != positives_contains(second, d)) return std::nullopt;
    }
    return fail("orders disagree on " + show(a) + " vs " + show(b) + " while their positives agree on every sample");
  };
}

std::optional<std::string> replay(const CaseCheck& check, const Case& c) { return check(c); }

Case shrink(const CaseCheck& check, const Case& failing) {
  Case current = failing;
  std::size_t score = complexity(current);
  for (int round = 0; round < 400; ++round) {
    bool improved = false;
    auto attempt = [&](Case candidate) {
      const std::size_t s = complexity(candidate);
      if (s >= score || !check(candidate)) return false;
      current = std::move(candidate);
      score = s;
      return true;
    };
    for (std::size_t i = 0; i < current.values.size() && !improved; ++i) {
      for (int coord = 0; coord < 3 && !improved; ++coord) {
        const Tfn& v = current.values[i];
        const Rational& x = coord == 0 ? v.lo() : coord == 1 ? v.peak() : v.hi();
        for (const Rational& y : simpler(x)) {
          std::optional<Tfn> moved = coord == 0   ? try_make(y, v.peak(), v.hi())
                                     : coord == 1 ? try_make(v.lo(), y, v.hi())
                                                  : try_make(v.lo(), v.peak(), y);
          if (!moved) continue;
          Case candidate = current;
          candidate.values[i] = *moved;
          if ((improved = attempt(std::move(candidate)))) break;
        }
      }
    }
    if (!improved) {
      for (const Rational& y : simpler(current.scalar)) {
        Case candidate = current;
        candidate.scalar = y;
        if ((improved = attempt(std::move(candidate)))) break;
      }
    }
    if (!improved) break;
  }
  return current;
}

// ---------------------------------------------------------------------------
// Checkers

VerificationReport check_total_order_axioms(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::TotalOrder, order.name(), cfg, cfg.count, {}, triple_case, case_check(Axiom::TotalOrder, order));
}

VerificationReport check_arithmetic_compat(const Comparator& order, const SampleConfig& cfg) {
  auto gen = [](Sampler& s, bool structured) { return nonnegative_scalar(triple_case(s, structured)); };
  return run_cases(Axiom::Arithmetic, order.name(), cfg, cfg.count, {}, gen, case_check(Axiom::Arithmetic, order));
}

VerificationReport check_minmax_compat(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::MinMax, order.name(), cfg, cfg.count, {}, ky_pair_case, case_check(Axiom::MinMax, order));
}

VerificationReport check_wlt(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::Wlt, order.name(), cfg, cfg.count, witness_pool(Axiom::Wlt), single_case,
                   case_check(Axiom::Wlt, order));
}

VerificationReport check_projection_compat(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::Projection, order.name(), cfg, cfg.count, witness_pool(Axiom::Projection), pair_case,
                   case_check(Axiom::Projection, order));
}

VerificationReport check_reasonable_method(const Comparator& order, const SampleConfig& cfg) {
  auto gen = [](Sampler& s, bool structured) {
    Case c = nonnegative_scalar(triple_case(s, structured));
    if (structured && s.coin()) c.values[1] = s.disjoint_above(c.values[0]);
    return c;
  };
  return run_cases(Axiom::Reasonable, order.name(), cfg, cfg.count, witness_pool(Axiom::Reasonable), gen,
                   case_check(Axiom::Reasonable, order));
}

VerificationReport check_abs_properties(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::Abs, order.name(), cfg, cfg.count, witness_pool(Axiom::Abs), triple_case,
                   case_check(Axiom::Abs, order));
}

VerificationReport check_null_order_theorem(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::NullOrder, order.name(), cfg, cfg.count, witness_pool(Axiom::NullOrder), null_pair_case,
                   case_check(Axiom::NullOrder, order));
}

VerificationReport check_interval_property(const Comparator& order, const SampleConfig& cfg) {
  return run_cases(Axiom::Interval, order.name(), cfg, cfg.count, {}, interval_case, case_check(Axiom::Interval, order));
}

VerificationReport check_ball_oracle_equivalence(const Comparator& order, const OrderProperties& claimed,
                                                 const SampleConfig& cfg) {
  if (!claimed.arithmetic_compatible || !claimed.wlt || !claimed.positive_zero_symmetrics)
    return not_applicable(Axiom::Ball, order.name(), "ball descriptions need WLT and positive 0-symmetric numbers");
  auto gen = [order](Sampler& s, bool structured) { return ball_case(s, order, structured); };
  VerificationReport report = run_cases(Axiom::Ball, order.name(), cfg, std::min(cfg.count, cfg.ball_pairs),
                                        witness_pool(Axiom::Ball), gen, case_check(Axiom::Ball, order, claimed));
  if (report.verdict == Verdict::Pass && !claimed.minmax_compatible)
    report.note = "margin cases outside the two-solution theorem checked by direct evaluation only";
  return report;
}

VerificationReport check_positives_determine(const Comparator& first, const Comparator& second, const SampleConfig& cfg,
                                             bool expect_distinct) {
  VerificationReport report;
  report.axiom = Axiom::Positives;
  report.order = first.name() + " vs " + second.name();
  const std::vector<Case> pool = witness_pool(Axiom::Positives);
  Sampler sampler(cfg);
  std::optional<Case> disagreement;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Case c = i < pool.size() ? pool[i] : positives_pair_case(sampler, sampler.structured());
    const Tfn& a = c.values[0];
    const Tfn& b = c.values[1];
    if (!disagreement && first(a, b) != second(a, b)) disagreement = c;
    if (!report.witness) {
      for (const Tfn& d : positive_probes(a, b)) {
        if (positives_contains(first, d) != positives_contains(second, d)) {
          report.witness = d;
          break;
        }
      }
    }
  }
  report.samples_checked = cfg.count;
  // A separating positive is itself a disagreement at (0, d), so only one
  // direction of the equivalence can fail on a sample.
  if (disagreement && !report.witness) {
    const CaseCheck check = positives_case_check(first, second);
    report.verdict = Verdict::Fail;
    const Case minimized = shrink(check, *disagreement);
    report.counterexample = Counterexample{*disagreement, minimized, *check(*disagreement), *check(minimized)};
  } else if (expect_distinct && !report.witness) {
    report.verdict = Verdict::Fail;
    report.note = "expected distinct orders but no sample separates their positives";
  } else {
    report.note = report.witness ? "positives differ at " + show(*report.witness) : "orders and positives agree on all samples";
  }
  return report;
}

std::vector<Tfn> ball_probe_grid(const Tfn& beta, const Tfn& gamma, const BallDescription& ball) {
  std::vector<Tfn> probes;
  probes.reserve(2000);
  const Rational reach = abs(gamma.peak()) + max_margin(gamma) + max_margin(beta) + 1;
  for (int i = 0; i <= 10; ++i) {
    const Rational peak = beta.peak() + reach * make_rational(i - 5, 5);
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) {
        probes.push_back(Tfn::make(peak - 2 * reach * make_rational(j, 9), peak, peak + 2 * reach * make_rational(k, 9)));
      }
    }
  }

  Rational h = 0;
  for (const Rational& m : {beta.lower_margin(), beta.upper_margin(), gamma.lower_margin(), gamma.upper_margin()}) {
    if (m > 0 && (h == 0 || m < h)) h = m;
  }
  h = h == 0 ? make_rational(1, 8) : h / 8;

  std::vector<Tfn> anchors{beta, null_min(beta), beta - gamma, beta + gamma, null_min(beta - gamma), null_min(beta + gamma)};
  for (const auto& s : {solve_sub_right(beta, gamma), solve_sub_left(beta, gamma)}) {
    if (s) {
      anchors.push_back(*s);
      anchors.push_back(null_min(*s));
    }
  }
  if (ball.endpoints) {
    anchors.push_back(ball.endpoints->first);
    anchors.push_back(ball.endpoints->second);
  }
  if (ball.excluded_anchor) anchors.push_back(*ball.excluded_anchor);
  for (const Tfn& e : ball.open_exclusions) anchors.push_back(e);

  const std::array<Rational, 6> shifts{-2 * h, -h, -h / 2, h / 2, h, 2 * h};
  for (const Tfn& a : anchors) {
    probes.push_back(a);
    for (const Rational& d : shifts) {
      if (auto p = try_make(a.lo() - d, a.peak(), a.hi() + d)) probes.push_back(*p);
    }
    for (int dl = -1; dl <= 1; ++dl) {
      for (int dp = -1; dp <= 1; ++dp) {
        for (int dh = -1; dh <= 1; ++dh) {
          if (dl == 0 && dp == 0 && dh == 0) continue;
          if (auto p = try_make(a.lo() + dl * h, a.peak() + dp * h, a.hi() + dh * h)) probes.push_back(*p);
        }
      }
    }
  }
  return probes;
}

// ---------------------------------------------------------------------------
// Catalog runner, traceability and mutants

VerificationReport run_check(Axiom axiom, const Comparator& order, const OrderProperties& claimed, const SampleConfig& cfg) {
  switch (axiom) {
    case Axiom::TotalOrder: return check_total_order_axioms(order, cfg);
    case Axiom::Arithmetic: return check_arithmetic_compat(order, cfg);
    case Axiom::MinMax: return check_minmax_compat(order, cfg);
    case Axiom::Wlt: return check_wlt(order, cfg);
    case Axiom::Projection: return check_projection_compat(order, cfg);
    case Axiom::Reasonable: return check_reasonable_method(order, cfg);
    case Axiom::Abs: return check_abs_properties(order, cfg);
    case Axiom::NullOrder: return check_null_order_theorem(order, cfg);
    case Axiom::Interval: return check_interval_property(order, cfg);
    case Axiom::Ball: return check_ball_oracle_equivalence(order, claimed, cfg);
    case Axiom::Positives: {
      VerificationReport combined;
      combined.axiom = Axiom::Positives;
      combined.order = order.name();
      std::size_t partners = 0;
      for (const OrderId& other : all_orders()) {
        if (other.name() == order.name()) continue;
        if (!claimed.wlt && !declared_properties(other).wlt) continue;
        VerificationReport r = check_positives_determine(order, Comparator(other), cfg, true);
        combined.samples_checked += r.samples_checked;
        ++partners;
        if (r.verdict == Verdict::Fail) {
          r.order = order.name();
          r.note = "against " + other.name() + (r.note.empty() ? "" : ": " + r.note);
          r.samples_checked = combined.samples_checked;
          return r;
        }
      }
      combined.note = "separated from " + std::to_string(partners) + " catalog orders by their positives";
      return combined;
    }
  }
  throw std::logic_error("unknown axiom");
}

VerificationReport verify(const OrderId& order, Axiom axiom, const SampleConfig& cfg) {
  const OrderProperties p = declared_properties(order);
  const std::string name = order.name();
  switch (axiom) {
    case Axiom::NullOrder:
    case Axiom::Positives:
      if (!p.arithmetic_compatible) return not_applicable(axiom, name, "order is not arithmetic-compatible");
      break;
    case Axiom::Interval:
      if (!p.arithmetic_compatible || !p.wlt) return not_applicable(axiom, name, "needs arithmetic compatibility and WLT");
      break;
    default: break;
  }
  return run_check(axiom, Comparator(order), p, cfg);
}

std::vector<std::string> flag_mismatches(const OrderId& order, const SampleConfig& cfg) {
  const OrderProperties declared = declared_properties(order);
  const Comparator cmp(order);
  std::vector<std::string> out;
  auto expect = [&](const char* flag, bool claimed, const VerificationReport& r) {
    const bool observed = r.verdict == Verdict::Pass;
    if (claimed != observed)
      out.push_back(order.name() + ": " + flag + " declared " + (claimed ? "true" : "false") + " but check " +
                    to_string(r.verdict));
  };
  expect("arithmetic_compatible", declared.arithmetic_compatible, check_arithmetic_compat(cmp, cfg));
  expect("minmax_compatible", declared.minmax_compatible, check_minmax_compat(cmp, cfg));
  expect("wlt", declared.wlt, check_wlt(cmp, cfg));
  expect("projection_compatible", declared.projection_compatible, check_projection_compat(cmp, cfg));

  Sampler sampler(cfg);
  const bool probe = has_positive_zero_symmetrics(cmp);
  bool consistent = true;
  for (std::size_t i = 0; i < std::min<std::size_t>(cfg.count, 1000); ++i) {
    if (positives_contains(cmp, sampler.zero_symmetric()) != probe) consistent = false;
  }
  if (!consistent || probe != declared.positive_zero_symmetrics)
    out.push_back(order.name() + ": positive_zero_symmetrics declared " +
                  (declared.positive_zero_symmetrics ? "true" : "false") + " but sampled I0 disagrees");
  return out;
}

Mutant designated_mutant(Axiom axiom) {
  const OrderProperties total_sum = declared_properties(OrderId::Kind::TotalSum);
  const OrderProperties upper_sum = declared_properties(OrderId::Kind::UpperSum);
  auto sum = [](const Tfn& a) { return a.total_sum(); };
  auto lo = [](const Tfn& a) { return a.lo(); };
  auto peak = [](const Tfn& a) { return a.peak(); };
  auto hi = [](const Tfn& a) { return a.hi(); };
  switch (axiom) {
    case Axiom::TotalOrder: {
      // a R b when either key prefers a; ties whenever both directions hold.
      auto relation = [](const Tfn& a, const Tfn& b) { return a.total_sum() <= b.total_sum() || a.peak() <= b.peak(); };
      Comparator c("disjunctive-cascade", [relation](const Tfn& a, const Tfn& b) {
        const bool ab = relation(a, b);
        const bool ba = relation(b, a);
        if (ab && ba) return std::strong_ordering::equal;
        return ab ? std::strong_ordering::less : std::strong_ordering::greater;
      });
      return {c, total_sum};
    }
    case Axiom::Arithmetic:
      return {key_order("peak-squared", {[](const Tfn& a) { return Rational(a.peak() * a.peak()); }, peak, lo, hi}),
              total_sum};
    case Axiom::MinMax: return {dual(Comparator(OrderId::Kind::TotalSum)), total_sum};
    case Axiom::Wlt:
    case Axiom::Interval: return {key_order("total-sum-swapped-ties", {sum, hi, peak}), total_sum};
    case Axiom::Projection:
      return {key_order("endpoint-sum-first", {[](const Tfn& a) { return a.endpoint_sum(); }, peak, hi}), upper_sum};
    case Axiom::Reasonable:
      return {key_order("spread-first", {[](const Tfn& a) { return Rational(a.hi() - a.lo()); }, peak, lo}), total_sum};
    case Axiom::Abs: return {dual(Comparator(OrderId::Kind::UpperSum)), upper_sum};
    case Axiom::NullOrder:
      return {key_order("squared-sup-tie", {sum, peak, [](const Tfn& a) { return Rational(a.hi() * a.hi()); }, hi}),
              total_sum};
    case Axiom::Ball: {
      Comparator lower(OrderId::Kind::LowerSum);
      return {Comparator("lower-sum-claiming-upper-sum", [lower](const Tfn& a, const Tfn& b) { return lower(a, b); }),
              upper_sum};
    }
    case Axiom::Positives: {
      Comparator upper(OrderId::Kind::UpperSum);
      return {Comparator("reversed-off-zero",
                         [upper](const Tfn& a, const Tfn& b) {
                           if (a == Tfn{} || b == Tfn{}) return upper(a, b);
                           return upper(b, a);
                         }),
              upper_sum};
    }
  }
  throw std::logic_error("unknown axiom");
}

}  // namespace tfn
