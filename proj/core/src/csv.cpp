#include "csv.hpp"

#include "util.hpp"

namespace fairgauge::csv {

Table parse(const std::string& text) {
  Table table;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool record_started = false;

  auto end_field = [&] {
    record.push_back(field);
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = record;
    } else {
      table.rows.push_back(record);
    }
    record.clear();
    record_started = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        record_started = true;
        break;
      case ',':
        end_field();
        record_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (record_started || !field.empty() || !record.empty()) end_record();
        break;
      default:
        field += c;
        record_started = true;
        break;
    }
  }
  if (record_started || !field.empty() || !record.empty()) end_record();
  return table;
}

Table read_file(const std::string& path) { return parse(util::read_file(path)); }

}  // namespace fairgauge::csv
