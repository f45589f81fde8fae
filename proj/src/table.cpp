#include "planarvac/table.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace planarvac {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_int(std::int64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%" PRId64, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Table::Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell))
    return format_int(*i);
  return std::get<std::string>(cell);
}

void json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

void json_cell(std::ostream& os, const Table::Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isfinite(*d))
      os << format_double(*d);
    else
      os << "null";
    return;
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    os << format_int(*i);
    return;
  }
  json_string(os, std::get<std::string>(cell));
}

}  // namespace

void Table::add_meta(const std::string& key, const std::string& value) {
  meta.emplace_back(key, value);
}

void Table::add_meta(const std::string& key, double value) {
  meta.emplace_back(key, format_double(value));
}

void Table::add_meta(const std::string& key, std::int64_t value) {
  meta.emplace_back(key, format_int(value));
}

void Table::write_csv(std::ostream& os) const {
  for (const auto& [key, value] : meta)
    os << "# " << key << "=" << value << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << (c ? "," : "") << csv_field(columns[c]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << csv_field(cell_text(row[c]));
    os << "\n";
  }
}

void Table::write_json(std::ostream& os) const {
  os << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    json_string(os, meta[i].first);
    os << ": ";
    json_string(os, meta[i].second);
  }
  os << "\n  },\n  \"columns\": [";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) os << ", ";
    json_string(os, columns[c]);
  }
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? ",\n    " : "\n    ") << "{";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ", ";
      json_string(os, columns[c]);
      os << ": ";
      json_cell(os, rows[r][c]);
    }
    os << "}";
  }
  os << "\n  ]\n}\n";
}

}  // namespace planarvac
