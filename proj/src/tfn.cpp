#include "tfn/tfn.hpp"

#include <algorithm>

namespace tfn {

NotOrdered::NotOrdered(const std::string& first_name, Rational first, const std::string& second_name,
                       Rational second)
    : std::invalid_argument("not a triangular fuzzy number: " + first_name + " = " + tfn::to_string(first) + " > " +
                            second_name + " = " + tfn::to_string(second)),
      first_(std::move(first)),
      second_(std::move(second)) {}

Tfn Tfn::make(Rational lo, Rational peak, Rational hi) {
  lo.canonicalize();
  peak.canonicalize();
  hi.canonicalize();
  if (lo > peak) throw NotOrdered("lo", std::move(lo), "peak", std::move(peak));
  if (peak > hi) throw NotOrdered("peak", std::move(peak), "hi", std::move(hi));
  return Tfn(std::move(lo), std::move(peak), std::move(hi));
}

Tfn Tfn::zero_symmetric(const Rational& t) {
  const Rational r = abs(t);
  return Tfn(Rational(-r), Rational(0), r);
}

Tfn operator+(const Tfn& a, const Tfn& b) {
  return Tfn(Rational(a.lo_ + b.lo_), Rational(a.peak_ + b.peak_), Rational(a.hi_ + b.hi_));
}

Tfn operator-(const Tfn& a) { return Tfn(Rational(-a.hi_), Rational(-a.peak_), Rational(-a.lo_)); }

Tfn operator*(const Rational& t, const Tfn& a) {
  if (t >= 0) return Tfn(Rational(t * a.lo_), Rational(t * a.peak_), Rational(t * a.hi_));
  return Tfn(Rational(t * a.hi_), Rational(t * a.peak_), Rational(t * a.lo_));
}

Rational membership(const Tfn& a, const Rational& t) {
  if (t == a.peak()) return 1;
  if (a.lo() < a.peak() && a.lo() <= t && t < a.peak()) return (t - a.lo()) / (a.peak() - a.lo());
  if (a.peak() < a.hi() && a.peak() < t && t <= a.hi()) return (a.hi() - t) / (a.hi() - a.peak());
  return 0;
}

bool is_in_I0(const Tfn& a) { return a.peak() == 0 && a.lo() == -a.hi() && a.hi() > 0; }

bool in_nullifying_set(const Tfn& a, const Tfn& b) {
  return a.peak() == b.peak() && a.endpoint_sum() == b.endpoint_sum();
}

bool in_zero_symmetric_shift(const Tfn& a, const Tfn& b) { return in_nullifying_set(a, b) && b.hi() > a.hi(); }

Tfn null_min(const Tfn& a) {
  const Rational sum = a.endpoint_sum();
  const Rational other = sum - a.peak();
  if (sum <= 2 * a.peak()) return Tfn::make(other, a.peak(), a.peak());
  return Tfn::make(a.peak(), a.peak(), other);
}

bool ky_less_equal(const Tfn& a, const Tfn& b) {
  return a.lo() <= b.lo() && a.peak() <= b.peak() && a.hi() <= b.hi();
}

MinMaxOutcome min_max_classify(const Tfn& a, const Tfn& b) {
  using Tag = MinMaxOutcome::Tag;
  if (ky_less_equal(a, b)) return {Tag::ComparableKY, a, b};
  if (ky_less_equal(b, a)) return {Tag::ComparableKY, b, a};
  if (a.peak() == b.peak()) {
    // Crossing supports around a shared peak: the legs combine pointwise.
    return {Tag::NestedSamePeak, Tfn::make(std::min(a.lo(), b.lo()), a.peak(), std::min(a.hi(), b.hi())),
            Tfn::make(std::max(a.lo(), b.lo()), a.peak(), std::max(a.hi(), b.hi()))};
  }
  return {Tag::NotTriangular, std::nullopt, std::nullopt};
}

std::string to_string(const Tfn& a) {
  return "(" + to_string(a.lo()) + ", " + to_string(a.peak()) + ", " + to_string(a.hi()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Tfn& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, MinMaxOutcome::Tag tag) {
  switch (tag) {
    case MinMaxOutcome::Tag::ComparableKY: return os << "ComparableKY";
    case MinMaxOutcome::Tag::NestedSamePeak: return os << "NestedSamePeak";
    case MinMaxOutcome::Tag::NotTriangular: return os << "NotTriangular";
  }
  return os;
}

}  // namespace tfn
