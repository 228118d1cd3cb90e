#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "framekit/common.hpp"

namespace framekit {
namespace csv {

// Minimal RFC-4180 style CSV. All toolkit outputs are UTF-8, comma
// separated, one header row, LF line endings.

inline std::string escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  return out;
}

class Writer {
public:
  explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw Error("csv", "cannot open for writing: " + path);
  }

  void row(const std::vector<std::string>& fields) { out_ << join_row(fields) << '\n'; }

private:
  std::ofstream out_;
};

inline std::vector<std::string> parse_row(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

// Reads a whole CSV file including the header row.
inline std::vector<std::vector<std::string>> read_file(const std::string& path,
                                                       const std::string& module) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : read_lines(path, module)) {
    if (line.empty()) continue;
    rows.push_back(parse_row(line));
  }
  return rows;
}

}  // namespace csv
}  // namespace framekit
