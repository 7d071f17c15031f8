#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace monobound {

/// Serializes a value with 12 significant digits. Values with |v| >= 1e6 or
/// 0 < |v| < 1e-4 use lowercase scientific notation; zero prints as "0".
inline std::string format_numeric(double value) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[48];
  const double magnitude = std::abs(value);
  if (magnitude >= 1e6 || magnitude < 1e-4) {
    std::snprintf(buf, sizeof(buf), "%.11e", value);
  } else {
    const int exponent = static_cast<int>(std::floor(std::log10(magnitude)));
    const int decimals = 11 - exponent;
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    // Rounding can carry into the next decade (0.99999... -> 1.000...);
    // drop one decimal so exactly 12 significant digits remain.
    if (std::abs(std::strtod(buf, nullptr)) >= std::pow(10.0, exponent + 1) && decimals > 0)
      std::snprintf(buf, sizeof(buf), "%.*f", decimals - 1, value);
  }
  return buf;
}

inline std::string format_optional(const std::optional<double>& value) {
  return value ? format_numeric(*value) : std::string{};
}

/// A CSV table: header plus string cells. Missing values are empty fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma-separated, LF line endings, header row first.
  std::string to_csv() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    append_row(header);
    for (const auto& row : rows) append_row(row);
    return out;
  }
};

}  // namespace monobound
