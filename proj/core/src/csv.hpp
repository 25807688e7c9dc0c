#pragma once

#include <string>
#include <vector>

namespace fairgauge::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180-ish reader: quoted fields, embedded commas/quotes/newlines,
// CRLF or LF line endings. First record is the header.
Table parse(const std::string& text);
Table read_file(const std::string& path);

}  // namespace fairgauge::csv
