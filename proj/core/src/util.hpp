#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairgauge::util {

std::string lowercase(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool iequals(std::string_view a, std::string_view b);

// Strips scheme, leading "www.", and trailing '/'/'#' so IRIs written with
// http vs https or with/without a trailing slash compare equal.
std::string normalize_iri(std::string_view iri);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t value);

// ISO-8601 UTC timestamp. Honors SOURCE_DATE_EPOCH for reproducible output.
std::string iso8601_now();

std::string read_file(const std::string& path);  // throws TargetUnreadable
bool looks_like_url(std::string_view s);

std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

// Shortest decimal text that round-trips the value (what a JSON writer emits).
std::string decimal_text(double value);

}  // namespace fairgauge::util
