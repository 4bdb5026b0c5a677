#include "tfn/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace tfn {

using nlohmann::json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based column of the first character
};

// Splits on commas and trims each field, remembering where it started.
std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    std::size_t a = start;
    std::size_t b = end;
    while (a < b && is_space(line[a])) ++a;
    while (b > a && is_space(line[b - 1])) --b;
    out.push_back({line.substr(a, b - a), a + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_field(const Field& f) {
  try {
    return parse_rational(f.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), f.column + e.column() - 1);
  }
}

Tfn make_checked(const Rational& lo, const Rational& peak, const Rational& hi, std::size_t column) {
  try {
    return Tfn::make(lo, peak, hi);
  } catch (const NotOrdered& e) {
    throw ParseError(e.what(), column);
  }
}

void add_entry(Dataset& data, std::set<std::string>& seen, std::string label, Tfn value, std::size_t row) {
  if (label.empty()) throw DatasetError(data.source, row, 1, "empty label");
  if (!seen.insert(label).second) throw DatasetError(data.source, row, 1, "duplicate label '" + label + "'");
  data.entries.push_back({std::move(label), std::move(value)});
}

Rational json_coordinate(const json& j, const char* key, const std::string& source, std::size_t row) {
  if (!j.contains(key)) throw DatasetError(source, row, 0, std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw DatasetError(source, row, e.column(), std::string("field '") + key + "': " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
  throw DatasetError(source, row, 0,
                     std::string("field '") + key + "' must be a string or an integer; write decimals as strings");
}

json case_values(const Case& c) {
  json values = json::array();
  for (const Tfn& v : c.values) values.push_back(to_json(v));
  return {{"values", values}, {"scalar", to_string(c.scalar)}};
}

}  // namespace

Tfn parse_tfn(std::string_view text) {
  std::size_t a = 0;
  std::size_t b = text.size();
  while (a < b && is_space(text[a])) ++a;
  while (b > a && is_space(text[b - 1])) --b;
  if (a == b) throw ParseError("empty fuzzy number", a + 1);
  std::size_t offset = a;
  std::string_view body = text.substr(a, b - a);
  if (body.front() == '(') {
    if (body.back() != ')') throw ParseError("missing ')'", b + 1);
    body = body.substr(1, body.size() - 2);
    ++offset;
  }
  std::vector<Field> fields = split_fields(body);
  for (Field& f : fields) f.column += offset;
  if (fields.size() == 1) return Tfn::scalar(parse_field(fields[0]));
  if (fields.size() != 3) throw ParseError("expected 1 or 3 components, got " + std::to_string(fields.size()), offset + 1);
  return make_checked(parse_field(fields[0]), parse_field(fields[1]), parse_field(fields[2]), fields[0].column);
}

DatasetError::DatasetError(const std::string& source, std::size_t row, std::size_t column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(row) + (column > 0 ? ":" + std::to_string(column) : "") + ": " +
                         what),
      row_(row),
      column_(column) {}

Dataset parse_csv(std::string_view text, const std::string& source) {
  Dataset data{{}, source};
  std::set<std::string> seen;
  std::size_t row = 0;
  bool first = true;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (fields.size() == 1 && fields[0].text.empty()) continue;
    if (!fields[0].text.empty() && fields[0].text.front() == '#') continue;
    if (first) {
      first = false;
      std::string head(fields[0].text);
      std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
      if (head == "label") continue;
    }
    if (fields.size() != 4)
      throw DatasetError(source, row, 1, "expected 4 columns (label,lo,peak,hi), got " + std::to_string(fields.size()));
    try {
      const Rational lo = parse_field(fields[1]);
      const Rational peak = parse_field(fields[2]);
      const Rational hi = parse_field(fields[3]);
      add_entry(data, seen, std::string(fields[0].text), make_checked(lo, peak, hi, fields[1].column), row);
    } catch (const ParseError& e) {
      throw DatasetError(source, row, e.column(), e.what());
    }
  }
  return data;
}

Dataset parse_json_dataset(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DatasetError(source, 1, e.byte, "invalid JSON");
  }
  if (!doc.is_array()) throw DatasetError(source, 1, 1, "expected a JSON array of entries");
  Dataset data{{}, source};
  std::set<std::string> seen;
  std::size_t row = 0;
  for (const json& item : doc) {
    ++row;
    if (!item.is_object() || !item.contains("label") || !item.at("label").is_string())
      throw DatasetError(source, row, 0, "entry needs a string 'label'");
    const Rational lo = json_coordinate(item, "lo", source, row);
    const Rational peak = json_coordinate(item, "peak", source, row);
    const Rational hi = json_coordinate(item, "hi", source, row);
    try {
      add_entry(data, seen, item.at("label").get<std::string>(), Tfn::make(lo, peak, hi), row);
    } catch (const NotOrdered& e) {
      throw DatasetError(source, row, 0, e.what());
    }
  }
  return data;
}

Dataset load_dataset(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetError(path, 0, 0, "cannot open file");
    content.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = content.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && content[pos] == '[') return parse_json_dataset(content, path);
  return parse_csv(content, path);
}

RankResult rank(const Dataset& data, const OrderId& order) {
  RankResult result;
  result.order = order.name();
  const std::size_t n = data.entries.size();
  result.matrix.assign(n, std::vector<std::strong_ordering>(n, std::strong_ordering::equal));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) result.matrix[i][j] = compare(order, data.entries[i].value, data.entries[j].value);
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return result.matrix[a][b] < 0; });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (result.matrix[idx[k]][idx[k + 1]] > 0) throw std::logic_error("ranking contradicts the comparison matrix");
  }
  for (std::size_t i : idx) result.ranking.push_back(data.entries[i].label);
  return result;
}

std::string format_number(const Rational& value) {
  if (value.get_den() == 1) return to_string(value);
  return to_string(value) + " (≈" + to_decimal(value) + ")";
}

std::string format_tfn(const Tfn& value) {
  const std::string exact = value.is_scalar() ? to_string(value.lo()) : to_string(value);
  const bool integral = value.lo().get_den() == 1 && value.peak().get_den() == 1 && value.hi().get_den() == 1;
  if (integral) return exact;
  if (value.is_scalar()) return exact + " ≈ " + to_decimal(value.lo());
  return exact + " ≈ (" + to_decimal(value.lo()) + ", " + to_decimal(value.peak()) + ", " + to_decimal(value.hi()) + ")";
}

json to_json(const Tfn& value) {
  return {{"lo", to_string(value.lo())}, {"peak", to_string(value.peak())}, {"hi", to_string(value.hi())}};
}

Tfn tfn_from_json(const json& j) {
  auto coord = [&](const char* key) {
    const json& v = j.at(key);
    return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(mpz_class(v.dump()));
  };
  return Tfn::make(coord("lo"), coord("peak"), coord("hi"));
}

json to_json(const Case& c) { return case_values(c); }

json to_json(const VerificationReport& report) {
  json j{{"axiom", to_string(report.axiom)},
         {"order", report.order},
         {"verdict", to_string(report.verdict)},
         {"samples_checked", report.samples_checked}};
  if (report.counterexample) {
    json ce = case_values(report.counterexample->original);
    ce["clause"] = report.counterexample->clause;
    json minimized = case_values(report.counterexample->minimized);
    minimized["clause"] = report.counterexample->minimized_clause;
    ce["minimized"] = minimized;
    j["counterexample"] = ce;
  }
  if (report.witness) j["witness"] = to_json(*report.witness);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

json to_json(const BallDescription& ball) {
  json j{{"case", to_string(ball.kind)}, {"excluded", to_string(ball.excluded)}, {"rendered", render(ball)}};
  if (ball.endpoints) {
    j["endpoints"] = {to_json(ball.endpoints->first), to_json(ball.endpoints->second)};
    j["lower_closed"] = ball.lower_closed;
    j["upper_closed"] = ball.upper_closed;
  }
  if (ball.excluded_anchor) j["excluded_anchor"] = to_json(*ball.excluded_anchor);
  json open = json::array();
  for (const Tfn& e : ball.open_exclusions) open.push_back(to_json(e));
  j["open_exclusions"] = open;
  return j;
}

json to_json(const RankResult& result) {
  json matrix = json::array();
  for (const auto& row : result.matrix) {
    json r = json::array();
    for (auto o : row) r.push_back(to_string(o));
    matrix.push_back(r);
  }
  return {{"order", result.order}, {"ranking", result.ranking}, {"matrix", matrix}};
}

}  // namespace tfn
