// tfnorder: rank, compare and measure triangular fuzzy numbers under the
// catalog of total orders, and run the property checks against them.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <set>
#include <variant>

#include "tfn/io.hpp"
#include "tfn/metric.hpp"
#include "tfn/orders.hpp"
#include "tfn/verify.hpp"

namespace {

using namespace tfn;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OrderId order_or_throw(const std::string& text) {
  if (auto order = parse_order(text)) return *order;
  throw UsageError("unknown order '" + text + "'; known: " + catalog_listing());
}

using AnyOrder = std::variant<OrderId, PreorderId>;

AnyOrder any_order_or_throw(const std::string& text) {
  if (auto order = parse_order(text)) return *order;
  if (auto pre = parse_preorder(text)) return *pre;
  throw UsageError("unknown order '" + text + "'; known: " + catalog_listing());
}

Tfn tfn_arg(const std::string& text, const char* what) {
  try {
    return parse_tfn(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + " '" + text + "': " + e.what() + " at column " + std::to_string(e.column()));
  }
}

std::string pad(const std::string& s, std::size_t width) {
  // Byte-based width is fine here: labels and verdicts are ASCII.
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

const char* symbol(std::strong_ordering o) { return o < 0 ? "<" : o > 0 ? ">" : "="; }

struct Options {
  std::string order;
  std::vector<std::string> orders;
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  std::string probe;
  std::vector<std::string> values;
};

int cmd_rank(const Options& opt) {
  const OrderId order = order_or_throw(opt.order);
  const Dataset data = load_dataset(opt.input);
  const RankResult result = rank(data, order);
  if (opt.json) {
    json j = to_json(result);
    json values = json::object();
    for (const auto& e : data.entries) values[e.label] = to_json(e.value);
    j["values"] = values;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::size_t width = 6;
  for (const auto& e : data.entries) width = std::max(width, e.label.size() + 2);
  std::cout << "order: " << order.name() << "\n";
  std::size_t position = 0;
  for (const std::string& label : result.ranking) {
    const auto it = std::find_if(data.entries.begin(), data.entries.end(), [&](const auto& e) { return e.label == label; });
    std::cout << pad(std::to_string(++position), 4) << pad(label, width) << format_tfn(it->value) << "\n";
  }
  std::cout << "\nmatrix (row vs column):\n" << pad("", width);
  for (const auto& e : data.entries) std::cout << pad(e.label, width);
  std::cout << "\n";
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    std::cout << pad(data.entries[i].label, width);
    for (std::size_t j = 0; j < data.entries.size(); ++j) std::cout << pad(symbol(result.matrix[i][j]), width);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_compare(const Options& opt) {
  if (opt.values.size() != 2) throw UsageError("compare needs exactly two fuzzy numbers");
  const Tfn a = tfn_arg(opt.values[0], "first value");
  const Tfn b = tfn_arg(opt.values[1], "second value");
  std::vector<std::string> names = opt.orders;
  if (names.empty()) {
    for (const OrderId& o : all_orders()) names.push_back(o.name());
    for (PreorderId p : all_preorders()) names.push_back(name(p));
  }
  json rows = json::array();
  std::set<std::string> verdicts;
  for (const std::string& n : names) {
    const AnyOrder any = any_order_or_throw(n);
    const std::string verdict = std::holds_alternative<OrderId>(any)
                                    ? to_string(compare(std::get<OrderId>(any), a, b))
                                    : to_string(preorder_compare(std::get<PreorderId>(any), a, b));
    verdicts.insert(verdict);
    rows.push_back({{"order", n}, {"verdict", verdict}});
  }
  const bool same_null = in_nullifying_set(a, b);
  if (opt.json) {
    std::cout << json{{"a", to_json(a)},
                      {"b", to_json(b)},
                      {"rows", rows},
                      {"disagreement", verdicts.size() > 1},
                      {"same_nullifying_set", same_null}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "a = " << format_tfn(a) << "\nb = " << format_tfn(b) << "\n";
  for (const auto& row : rows) {
    std::cout << pad(row["order"].get<std::string>(), 20) << row["verdict"].get<std::string>() << "\n";
  }
  std::cout << (verdicts.size() > 1 ? "disagreement: orders differ on this pair\n" : "agreement: all orders agree\n");
  if (same_null) std::cout << "note: a and b share a nullifying set; only the tie-break separates them\n";
  return kOk;
}

int cmd_ball(const Options& opt) {
  if (opt.values.size() != 2) throw UsageError("ball needs a centre and a radius");
  const OrderId order = order_or_throw(opt.order);
  const Tfn beta = tfn_arg(opt.values[0], "centre");
  const Tfn gamma = tfn_arg(opt.values[1], "radius");
  BallDescription ball;
  try {
    ball = closed_ball_description(order, beta, gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Comparator cmp(order);
  json out = to_json(ball);
  bool agree = true;
  if (!opt.probe.empty()) {
    const Tfn probe = tfn_arg(opt.probe, "probe");
    const BallMembership described = description_membership(ball, cmp, probe, beta, gamma);
    const bool closed = closed_ball_member(cmp, beta, gamma, probe);
    const bool open = open_ball_member(cmp, beta, gamma, probe);
    agree = described.closed == closed && described.open == open;
    out["probe"] = {{"value", to_json(probe)},
                    {"distance", to_json(fuzzy_distance(cmp, probe, beta))},
                    {"closed_member", closed},
                    {"open_member", open},
                    {"description_closed_member", described.closed},
                    {"description_open_member", described.open},
                    {"agreement", agree}};
  }
  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "case: " << to_string(ball.kind) << "\nclosed ball: " << render(ball) << "\n";
    if (!ball.open_exclusions.empty()) {
      std::cout << "open ball removes:";
      for (const Tfn& e : ball.open_exclusions) std::cout << " " << format_tfn(e);
      std::cout << "\n";
    }
    if (out.contains("probe")) {
      const json& p = out["probe"];
      std::cout << "probe " << opt.probe << ": member=" << std::boolalpha << p["closed_member"].get<bool>()
                << " open-member=" << p["open_member"].get<bool>() << " agreement=" << agree << "\n";
    }
  }
  return agree ? kOk : kViolation;
}

int cmd_abs(const Options& opt) {
  if (opt.values.size() != 1) throw UsageError("abs needs one fuzzy number");
  const OrderId order = order_or_throw(opt.order);
  const Tfn a = tfn_arg(opt.values[0], "value");
  const Tfn r = fuzzy_abs(order, a);
  if (opt.json) {
    std::cout << json{{"order", order.name()}, {"value", to_json(a)}, {"abs", to_json(r)}}.dump(2) << "\n";
  } else {
    std::cout << "|" << format_tfn(a) << "| = " << format_tfn(r) << "\n";
  }
  return kOk;
}

int cmd_dist(const Options& opt) {
  if (opt.values.size() != 2) throw UsageError("dist needs two fuzzy numbers");
  const OrderId order = order_or_throw(opt.order);
  const Tfn a = tfn_arg(opt.values[0], "first value");
  const Tfn b = tfn_arg(opt.values[1], "second value");
  const Tfn d = fuzzy_distance(order, a, b);
  if (opt.json) {
    std::cout << json{{"order", order.name()}, {"a", to_json(a)}, {"b", to_json(b)}, {"distance", to_json(d)}}.dump(2)
              << "\n";
  } else {
    std::cout << "D(a, b) = " << format_tfn(d) << "\n";
  }
  return kOk;
}

std::string describe(const Case& c) {
  std::string out;
  for (const Tfn& v : c.values) out += (out.empty() ? "" : " ") + to_string(v);
  if (c.scalar != 0) out += " t=" + to_string(c.scalar);
  return out;
}

int cmd_verify(const Options& opt) {
  if (opt.count == 0) throw UsageError("--count must be positive");
  std::vector<OrderId> orders;
  std::vector<Axiom> axioms;
  std::vector<std::string> tokens = opt.values;
  tokens.insert(tokens.end(), opt.orders.begin(), opt.orders.end());
  if (!opt.order.empty()) tokens.push_back(opt.order);
  for (const std::string& t : tokens) {
    if (t == "all") continue;
    if (auto o = parse_order(t)) {
      orders.push_back(*o);
    } else if (auto a = parse_axiom(t)) {
      axioms.push_back(*a);
    } else {
      std::string known;
      for (Axiom a2 : all_axioms()) known += ", " + to_string(a2);
      throw UsageError("unknown order or axiom '" + t + "'; orders: " + catalog_listing() + "; axioms: all" + known);
    }
  }
  if (orders.empty()) orders = all_orders();
  if (axioms.empty()) axioms = all_axioms();

  SampleConfig cfg;
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  int status = kOk;
  for (const OrderId& order : orders) {
    for (Axiom axiom : axioms) {
      const VerificationReport r = verify(order, axiom, cfg);
      if (r.verdict == Verdict::Fail) status = kViolation;
      if (opt.json) {
        std::cout << to_json(r).dump() << "\n";
        continue;
      }
      std::cout << pad(order.name(), 14) << pad(to_string(axiom), 12) << pad(to_string(r.verdict), 14)
                << "samples=" << r.samples_checked;
      if (r.counterexample) {
        std::cout << "\n    counterexample: " << describe(r.counterexample->original)
                  << "\n    clause: " << r.counterexample->clause
                  << "\n    minimized: " << describe(r.counterexample->minimized) << " ("
                  << r.counterexample->minimized_clause << ")";
      }
      if (!r.note.empty()) std::cout << "\n    note: " << r.note;
      std::cout << "\n";
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, compare and verify triangular fuzzy numbers under total orders"};
  app.require_subcommand(1);
  Options opt;

  auto add_order = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--order", opt.order, "Order name, e.g. upper-sum or lex-231");
    if (required) o->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };

  auto* rank_cmd = app.add_subcommand("rank", "Sort a dataset under one order");
  add_order(rank_cmd, true);
  rank_cmd->add_option("--input", opt.input, "CSV (label,lo,peak,hi) or JSON array; '-' for stdin")->required();
  add_json(rank_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Compare two values under several orders");
  compare_cmd->add_option("values", opt.values, "Two fuzzy numbers, e.g. \"(0.2, 0.5, 0.8)\"");
  compare_cmd->add_option("--orders", opt.orders, "Orders and preorders (default: all)")->delimiter(',');
  add_json(compare_cmd);

  auto* ball_cmd = app.add_subcommand("ball", "Describe a closed ball");
  add_order(ball_cmd, true);
  ball_cmd->add_option("values", opt.values, "Centre and radius");
  ball_cmd->add_option("--probe", opt.probe, "Point to test for membership");
  add_json(ball_cmd);

  auto* abs_cmd = app.add_subcommand("abs", "Fuzzy absolute value");
  add_order(abs_cmd, true);
  abs_cmd->add_option("values", opt.values, "One fuzzy number");
  add_json(abs_cmd);

  auto* dist_cmd = app.add_subcommand("dist", "Fuzzy distance");
  add_order(dist_cmd, true);
  dist_cmd->add_option("values", opt.values, "Two fuzzy numbers");
  add_json(dist_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run property checks");
  verify_cmd->add_option("targets", opt.values, "Order names, axiom names or 'all'");
  verify_cmd->add_option("--orders", opt.orders, "Orders to check")->delimiter(',');
  add_order(verify_cmd, false);
  verify_cmd->add_option("--seed", opt.seed, "Sampler seed");
  verify_cmd->add_option("--count", opt.count, "Samples per axiom");
  add_json(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(opt);
    if (compare_cmd->parsed()) return cmd_compare(opt);
    if (ball_cmd->parsed()) return cmd_ball(opt);
    if (abs_cmd->parsed()) return cmd_abs(opt);
    if (dist_cmd->parsed()) return cmd_dist(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DatasetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at column " << e.column() << "\n";
    return kUsage;
  }
  return kUsage;
}
