#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tfn/metric.hpp"
#include "tfn/orders.hpp"
#include "tfn/tfn.hpp"
#include "tfn/verify.hpp"

namespace tfn {

/// Parses "(a1, a, a2)", "a1, a, a2" or a single scalar. Column numbers in
/// the thrown ParseError refer to `text`.
Tfn parse_tfn(std::string_view text);

/// Dataset problem located by 1-based row and column.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(const std::string& source, std::size_t row, std::size_t column, const std::string& what);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

struct DatasetEntry {
  std::string label;
  Tfn value;
};

struct Dataset {
  std::vector<DatasetEntry> entries;
  std::string source;
};

/// CSV with columns label,lo,peak,hi. A header row starting with "label" is
/// skipped, as are blank lines and lines starting with '#'.
Dataset parse_csv(std::string_view text, const std::string& source = "<inline>");

/// JSON array of {"label", "lo", "peak", "hi"}. Coordinates are strings or
/// integers; JSON floats are rejected because they are not exact.
Dataset parse_json_dataset(std::string_view text, const std::string& source = "<inline>");

/// Reads a file ("-" for stdin) and picks the format from the first
/// non-blank character.
Dataset load_dataset(const std::string& path);

struct RankResult {
  std::string order;
  /// Labels in ascending order.
  std::vector<std::string> ranking;
  /// matrix[i][j] compares entries i and j in dataset order.
  std::vector<std::vector<std::strong_ordering>> matrix;
};

/// Stable ascending sort under the order plus the full comparison matrix.
/// Throws std::logic_error if the ranking contradicts the matrix.
RankResult rank(const Dataset& data, const OrderId& order);

/// "p/q" followed by a marked decimal approximation when not an integer.
std::string format_number(const Rational& value);
std::string format_tfn(const Tfn& value);

nlohmann::json to_json(const Tfn& value);
Tfn tfn_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Case& c);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const BallDescription& ball);
nlohmann::json to_json(const RankResult& result);

}  // namespace tfn
