#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfn/tfn.hpp"

namespace tfn {

/// A total order from the catalog. Lexicographic orders carry a permutation
/// of the component indices {1 = lo, 2 = peak, 3 = hi}.
class OrderId {
 public:
  enum class Kind { TotalSum, UpperSum, LowerSum, Pessimistic, Optimistic, TPrime, Lex };

  constexpr OrderId(Kind kind) : kind_(kind) {}  // NOLINT: implicit by design of the catalog enum
  static OrderId lex(int i, int j, int k);

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr const std::array<int, 3>& permutation() const noexcept { return perm_; }

  /// CLI/JSON identifier, e.g. "upper-sum" or "lex-231".
  std::string name() const;

  friend constexpr bool operator==(const OrderId&, const OrderId&) = default;

 private:
  constexpr OrderId(Kind kind, std::array<int, 3> perm) : kind_(kind), perm_(perm) {}

  Kind kind_;
  std::array<int, 3> perm_{1, 2, 3};
};

enum class PreorderId { Pi, PessimisticPre, OptimisticPre, TotalSumPre, MolinariW, MolinariPartialW, KlirYuan };

/// Declared compatibility flags of a catalog order. The verify module checks
/// each flag against sampled behaviour.
struct OrderProperties {
  bool arithmetic_compatible = false;
  bool minmax_compatible = false;
  bool wlt = false;
  bool positive_zero_symmetrics = false;
  bool projection_compatible = false;

  bool regular() const { return arithmetic_compatible && minmax_compatible; }
  friend bool operator==(const OrderProperties&, const OrderProperties&) = default;
};

/// All twelve catalog orders: six named cascades followed by the six
/// lexicographic orders in index order (123, 132, 213, 231, 312, 321).
const std::vector<OrderId>& all_orders();
const std::vector<PreorderId>& all_preorders();

OrderProperties declared_properties(const OrderId& order);

std::strong_ordering compare(const OrderId& order, const Tfn& a, const Tfn& b);
std::partial_ordering preorder_compare(PreorderId pre, const Tfn& a, const Tfn& b);

/// Type-erased three-way comparator. Catalog orders, their duals and the
/// verification mutants all share this shape.
class Comparator {
 public:
  using Fn = std::function<std::strong_ordering(const Tfn&, const Tfn&)>;

  Comparator(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  Comparator(const OrderId& order);  // NOLINT: every catalog order is a comparator

  std::strong_ordering operator()(const Tfn& a, const Tfn& b) const { return fn_(a, b); }
  const std::string& name() const noexcept { return name_; }

  bool less(const Tfn& a, const Tfn& b) const { return fn_(a, b) < 0; }
  bool less_equal(const Tfn& a, const Tfn& b) const { return fn_(a, b) <= 0; }

 private:
  std::string name_;
  Fn fn_;
};

/// α ∈ P, the set of positives: 0 ≺ α.
bool positives_contains(const Comparator& order, const Tfn& a);

/// Probes (-1, 0, 1). For arithmetic-compatible orders the answer decides
/// I0 ⊆ P versus I0 ∩ P = ∅.
bool has_positive_zero_symmetrics(const Comparator& order);

/// Comparator with Less and Greater swapped.
Comparator dual(const Comparator& order);

enum class FiberBranch { WithPositiveI0, WithoutPositiveI0 };

/// Reference ordering on the fiber over t for regular orders with the weak law
/// of trichotomy: endpoint sum first, then hi (positive I0) or lo (otherwise).
/// Each pair is (lo, hi) of a TFN with peak t.
std::strong_ordering fiber_compare_oracle(FiberBranch branch, const Rational& t, const std::pair<Rational, Rational>& first,
                                          const std::pair<Rational, Rational>& second);

std::string name(PreorderId pre);
std::optional<OrderId> parse_order(std::string_view name);
std::optional<PreorderId> parse_preorder(std::string_view name);
/// Every accepted order and preorder identifier, comma separated.
std::string catalog_listing();

std::string to_string(std::strong_ordering ord);
std::string to_string(std::partial_ordering ord);

}  // namespace tfn
