#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tfn/rational.hpp"

namespace tfn {

/// Raised by Tfn::make when lo <= peak <= hi fails.
class NotOrdered : public std::invalid_argument {
 public:
  NotOrdered(const std::string& first_name, Rational first, const std::string& second_name, Rational second);

  const Rational& first() const noexcept { return first_; }
  const Rational& second() const noexcept { return second_; }

 private:
  Rational first_;
  Rational second_;
};

/// Triangular fuzzy number (lo, peak, hi) with lo <= peak <= hi.
///
/// lo and hi are the infimum and supremum of the support, peak is the modal
/// value. Scalars are embedded as (t, t, t). Values are immutable once built.
class Tfn {
 public:
  /// The scalar 0.
  Tfn() = default;

  static Tfn make(Rational lo, Rational peak, Rational hi);
  static Tfn scalar(const Rational& t) { return Tfn(t, t, t); }
  /// (-t, 0, t); an element of I0 when t > 0.
  static Tfn zero_symmetric(const Rational& t);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& peak() const noexcept { return peak_; }
  const Rational& hi() const noexcept { return hi_; }

  Rational lower_margin() const { return peak_ - lo_; }
  Rational upper_margin() const { return hi_ - peak_; }
  Rational endpoint_sum() const { return lo_ + hi_; }
  Rational total_sum() const { return lo_ + peak_ + hi_; }

  bool is_scalar() const { return lo_ == hi_; }

  friend bool operator==(const Tfn& a, const Tfn& b) {
    return a.lo_ == b.lo_ && a.peak_ == b.peak_ && a.hi_ == b.hi_;
  }

 private:
  Tfn(Rational lo, Rational peak, Rational hi) : lo_(std::move(lo)), peak_(std::move(peak)), hi_(std::move(hi)) {}

  friend Tfn operator+(const Tfn& a, const Tfn& b);
  friend Tfn operator-(const Tfn& a);
  friend Tfn operator*(const Rational& t, const Tfn& a);

  Rational lo_{0};
  Rational peak_{0};
  Rational hi_{0};
};

Tfn operator+(const Tfn& a, const Tfn& b);
/// Negation, (-1)·a = (-hi, -peak, -lo).
Tfn operator-(const Tfn& a);
inline Tfn operator-(const Tfn& a, const Tfn& b) { return a + (-b); }
/// Scalar multiplication; negative scalars swap the support endpoints.
Tfn operator*(const Rational& t, const Tfn& a);

inline Tfn scalar_mul(const Rational& t, const Tfn& a) { return t * a; }

/// Piecewise-linear membership degree of t. A degenerate leg contributes
/// nothing beyond the value-1 point at the peak.
Rational membership(const Tfn& a, const Rational& t);

/// Natural projection onto the modal value.
inline const Rational& projection(const Tfn& a) { return a.peak(); }

/// True iff a = -a and a != 0.
bool is_in_I0(const Tfn& a);

/// Identifies the nullifying set: same peak and same endpoint sum.
struct NullKey {
  Rational peak;
  Rational endpoint_sum;

  friend bool operator==(const NullKey& a, const NullKey& b) {
    return a.peak == b.peak && a.endpoint_sum == b.endpoint_sum;
  }
};

inline NullKey null_key(const Tfn& a) { return {a.peak(), a.endpoint_sum()}; }

/// b ∈ Null(a), i.e. a - b ∈ I0 ∪ {0}.
bool in_nullifying_set(const Tfn& a, const Tfn& b);

/// b ∈ a + I0: same nullifying set and strictly larger supremum.
bool in_zero_symmetric_shift(const Tfn& a, const Tfn& b);

/// Member of Null(a) with the narrowest support. It is the minimum of Null(a)
/// under arithmetic-compatible orders with positive 0-symmetric numbers.
Tfn null_min(const Tfn& a);

/// The same narrowest member: it is the maximum of Null(a) under
/// arithmetic-compatible orders without positive 0-symmetric numbers.
inline Tfn null_max(const Tfn& a) { return null_min(a); }

struct MinMaxOutcome {
  enum class Tag { ComparableKY, NestedSamePeak, NotTriangular };

  Tag tag;
  std::optional<Tfn> min;
  std::optional<Tfn> max;
};

/// Klir-Yuan order: componentwise comparison of (lo, peak, hi).
bool ky_less_equal(const Tfn& a, const Tfn& b);

/// Classifies the extension-principle MIN/MAX of two TFNs.
MinMaxOutcome min_max_classify(const Tfn& a, const Tfn& b);

std::string to_string(const Tfn& a);
std::ostream& operator<<(std::ostream& os, const Tfn& a);
std::ostream& operator<<(std::ostream& os, MinMaxOutcome::Tag tag);

}  // namespace tfn
