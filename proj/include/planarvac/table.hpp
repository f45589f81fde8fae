#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace planarvac {

// One output table: ordered metadata, a column row, typed cells.
// CSV: '# key=value' header lines, column-name row, data rows.
// JSON: {"meta": {...}, "columns": [...], "rows": [{col: value}, ...]}.
// All doubles print as %.17g so reruns are byte-identical.
struct Table {
  using Cell = std::variant<double, std::int64_t, std::string>;

  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  void add_meta(const std::string& key, std::int64_t value);

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

// %.17g rendering shared by both writers.
std::string format_double(double v);

}  // namespace planarvac
