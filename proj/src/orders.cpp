#include "tfn/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfn {

namespace {

using Row = std::array<int, 3>;
using KeyMatrix = std::array<Row, 3>;

const Rational& component(const Tfn& a, int index) {
  switch (index) {
    case 0: return a.lo();
    case 1: return a.peak();
    default: return a.hi();
  }
}

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Sign of row·a - row·b.
int row_sign(const Row& row, const Tfn& a, const Tfn& b) {
  int nonzero = 0;
  int last = 0;
  for (int i = 0; i < 3; ++i) {
    if (row[i] != 0) {
      ++nonzero;
      last = i;
    }
  }
  if (nonzero == 1 && row[last] == 1) return cmp(component(a, last), component(b, last));
  Rational diff = 0;
  for (int i = 0; i < 3; ++i) {
    if (row[i] != 0) diff += row[i] * (component(a, i) - component(b, i));
  }
  return sgn(diff);
}

std::strong_ordering cascade(const KeyMatrix& rows, const Tfn& a, const Tfn& b) {
  for (const Row& row : rows) {
    if (const int s = row_sign(row, a, b); s != 0) return from_sign(s);
  }
  return std::strong_ordering::equal;
}

Row unit(int index_one_based) {
  Row r{0, 0, 0};
  r[static_cast<std::size_t>(index_one_based - 1)] = 1;
  return r;
}

KeyMatrix key_matrix(const OrderId& order) {
  using K = OrderId::Kind;
  switch (order.kind()) {
    case K::TotalSum: return {{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}};
    case K::UpperSum: return {{{0, 1, 0}, {1, 0, 1}, {0, 0, 1}}};
    case K::LowerSum: return {{{0, 1, 0}, {1, 0, 1}, {1, 0, 0}}};
    case K::Pessimistic: return {{{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}};
    case K::Optimistic: return {{{0, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
    case K::TPrime: return {{{1, 1, 1}, {0, 0, 1}, {0, 1, 0}}};
    case K::Lex: {
      const auto& p = order.permutation();
      return {unit(p[0]), unit(p[1]), unit(p[2])};
    }
  }
  throw std::logic_error("unknown order kind");
}

std::partial_ordering from_relations(bool le_ab, bool le_ba) {
  if (le_ab && le_ba) return std::partial_ordering::equivalent;
  if (le_ab) return std::partial_ordering::less;
  if (le_ba) return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

std::partial_ordering weak(int s) {
  if (s < 0) return std::partial_ordering::less;
  if (s > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Rational molinari_weight(const Tfn& a) { return a.lo() + 2 * a.peak() + a.hi(); }

}  // namespace

OrderId OrderId::lex(int i, int j, int k) {
  std::array<int, 3> perm{i, j, k};
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("lex order needs a permutation of 1, 2, 3");
  return OrderId(Kind::Lex, perm);
}

std::string OrderId::name() const {
  switch (kind_) {
    case Kind::TotalSum: return "total-sum";
    case Kind::UpperSum: return "upper-sum";
    case Kind::LowerSum: return "lower-sum";
    case Kind::Pessimistic: return "pessimistic";
    case Kind::Optimistic: return "optimistic";
    case Kind::TPrime: return "t-prime";
    case Kind::Lex:
      return "lex-" + std::to_string(perm_[0]) + std::to_string(perm_[1]) + std::to_string(perm_[2]);
  }
  return "?";
}

const std::vector<OrderId>& all_orders() {
  using K = OrderId::Kind;
  static const std::vector<OrderId> orders{
      K::TotalSum,          K::UpperSum,          K::LowerSum,          K::Pessimistic,
      K::Optimistic,        K::TPrime,            OrderId::lex(1, 2, 3), OrderId::lex(1, 3, 2),
      OrderId::lex(2, 1, 3), OrderId::lex(2, 3, 1), OrderId::lex(3, 1, 2), OrderId::lex(3, 2, 1)};
  return orders;
}

const std::vector<PreorderId>& all_preorders() {
  using P = PreorderId;
  static const std::vector<PreorderId> pres{P::Pi,        P::PessimisticPre,   P::OptimisticPre, P::TotalSumPre,
                                            P::MolinariW, P::MolinariPartialW, P::KlirYuan};
  return pres;
}

OrderProperties declared_properties(const OrderId& order) {
  using K = OrderId::Kind;
  // Every catalog order is a lexicographic cascade of linear keys with
  // nonnegative coefficients, hence regular.
  OrderProperties p{.arithmetic_compatible = true, .minmax_compatible = true};
  switch (order.kind()) {
    case K::TotalSum:
      p.wlt = true;
      p.positive_zero_symmetrics = true;
      break;
    case K::UpperSum:
      p.wlt = true;
      p.positive_zero_symmetrics = true;
      p.projection_compatible = true;
      break;
    case K::LowerSum:
      p.wlt = true;
      p.projection_compatible = true;
      break;
    case K::Pessimistic: break;
    case K::Optimistic:
    case K::TPrime: p.positive_zero_symmetrics = true; break;
    case K::Lex: {
      const auto& perm = order.permutation();
      p.projection_compatible = perm[0] == 2;
      p.positive_zero_symmetrics = perm[0] == 3 || (perm[0] == 2 && perm[1] == 3);
      break;
    }
  }
  return p;
}

std::strong_ordering compare(const OrderId& order, const Tfn& a, const Tfn& b) {
  return cascade(key_matrix(order), a, b);
}

std::partial_ordering preorder_compare(PreorderId pre, const Tfn& a, const Tfn& b) {
  switch (pre) {
    case PreorderId::Pi: return weak(cmp(a.peak(), b.peak()));
    case PreorderId::PessimisticPre: return weak(cmp(a.lo() + a.peak(), b.lo() + b.peak()));
    case PreorderId::OptimisticPre: return weak(cmp(a.peak() + a.hi(), b.peak() + b.hi()));
    case PreorderId::TotalSumPre: return weak(cmp(a.total_sum(), b.total_sum()));
    case PreorderId::MolinariW: {
      if (const int s = cmp(a.peak(), b.peak()); s != 0) return weak(s);
      return weak(cmp(a.endpoint_sum(), b.endpoint_sum()));
    }
    case PreorderId::MolinariPartialW: {
      const Rational wa = molinari_weight(a);
      const Rational wb = molinari_weight(b);
      return from_relations(a.peak() <= b.peak() && wa <= wb, b.peak() <= a.peak() && wb <= wa);
    }
    case PreorderId::KlirYuan: return from_relations(ky_less_equal(a, b), ky_less_equal(b, a));
  }
  throw std::logic_error("unknown preorder");
}

Comparator::Comparator(const OrderId& order)
    : name_(order.name()), fn_([rows = key_matrix(order)](const Tfn& a, const Tfn& b) { return cascade(rows, a, b); }) {}

bool positives_contains(const Comparator& order, const Tfn& a) { return order.less(Tfn{}, a); }

bool has_positive_zero_symmetrics(const Comparator& order) {
  return positives_contains(order, Tfn::zero_symmetric(1));
}

Comparator dual(const Comparator& order) {
  return Comparator(order.name() + "*", [order](const Tfn& a, const Tfn& b) { return order(b, a); });
}

std::strong_ordering fiber_compare_oracle(FiberBranch branch, const Rational& /*t*/,
                                          const std::pair<Rational, Rational>& first,
                                          const std::pair<Rational, Rational>& second) {
  const auto& [x1, y1] = first;
  const auto& [x2, y2] = second;
  if (const int s = cmp(x1 + y1, x2 + y2); s != 0) return from_sign(s);
  if (branch == FiberBranch::WithPositiveI0) return from_sign(cmp(y1, y2));
  return from_sign(cmp(x1, x2));
}

std::string name(PreorderId pre) {
  switch (pre) {
    case PreorderId::Pi: return "pi";
    case PreorderId::PessimisticPre: return "pessimistic-pre";
    case PreorderId::OptimisticPre: return "optimistic-pre";
    case PreorderId::TotalSumPre: return "total-sum-pre";
    case PreorderId::MolinariW: return "molinari-w";
    case PreorderId::MolinariPartialW: return "molinari-partial";
    case PreorderId::KlirYuan: return "klir-yuan";
  }
  return "?";
}

std::optional<OrderId> parse_order(std::string_view text) {
  for (const OrderId& order : all_orders()) {
    if (order.name() == text) return order;
  }
  return std::nullopt;
}

std::optional<PreorderId> parse_preorder(std::string_view text) {
  for (PreorderId pre : all_preorders()) {
    if (name(pre) == text) return pre;
  }
  return std::nullopt;
}

std::string catalog_listing() {
  std::string out;
  for (const OrderId& order : all_orders()) out += (out.empty() ? "" : ", ") + order.name();
  for (PreorderId pre : all_preorders()) out += ", " + name(pre);
  return out;
}

std::string to_string(std::strong_ordering ord) {
  if (ord < 0) return "Less";
  if (ord > 0) return "Greater";
  return "Equal";
}

std::string to_string(std::partial_ordering ord) {
  if (ord < 0) return "Less";
  if (ord > 0) return "Greater";
  if (ord == 0) return "Equivalent";
  return "Incomparable";
}

}  // namespace tfn
