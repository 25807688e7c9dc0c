#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fairgauge::harvest {

enum class TargetKind { LiveUrl, FixtureDir, ManifestFile };

struct Checksum {
  std::string algorithm;
  std::string hex;
};

struct DataFile {
  std::string locator;
  std::optional<std::uint64_t> declared_size;
  std::optional<std::string> media_type;
  std::optional<Checksum> checksum;
  std::optional<std::string> format_label;
};

struct AssessmentTarget {
  std::string identifier;
  TargetKind kind = TargetKind::FixtureDir;
  std::vector<DataFile> data_files;
  std::optional<std::string> publisher_hint;
  // Directory holding the channel files for fixture targets.
  std::filesystem::path root;
};

// Extraction channel, in harvest priority order.
enum class Channel {
  EmbeddedStructuredBlock,
  HtmlMetaTag,
  SidecarRecord,
  RegistryRecord,
};

struct MetadataStatement {
  std::string key;  // canonical key (see keys::) or a full property IRI
  std::string value;
  Channel channel;
};

// Canonical metadata keys the evaluators reason about.
namespace keys {
inline constexpr std::string_view title = "title";
inline constexpr std::string_view creator = "creator";
inline constexpr std::string_view publisher = "publisher";
inline constexpr std::string_view publication_date = "publication_date";
inline constexpr std::string_view description = "description";
inline constexpr std::string_view keywords = "keywords";
inline constexpr std::string_view identifier = "identifier";
inline constexpr std::string_view resource_type = "resource_type";
inline constexpr std::string_view license = "license";
inline constexpr std::string_view access_level = "access_level";
inline constexpr std::string_view related = "related";
inline constexpr std::string_view preservation_policy = "preservation_policy";
inline constexpr std::string_view schema_id = "schema_id";
inline constexpr std::string_view file_locator = "file.locator";
inline constexpr std::string_view file_size = "file.size";
inline constexpr std::string_view file_media_type = "file.media_type";
inline constexpr std::string_view file_pid = "file.pid";
}  // namespace keys

struct MetadataGraph {
  std::vector<MetadataStatement> statements;
  std::set<std::string> namespaces;  // IRI prefixes observed in blocks
  std::set<std::string> formats;     // html, json-ld, turtle, rdf-xml, dc-xml, ...
  std::set<std::string> schema_ids;  // recognized metadata-schema identifiers
  std::vector<std::string> warnings; // per-channel parse warnings, never fatal

  bool has_key(std::string_view key) const;
  std::optional<std::string> first_value(std::string_view key) const;
  std::vector<std::string> values(std::string_view key) const;
  size_t count_key(std::string_view key) const;
  bool has_key_prefix(std::string_view prefix) const;
};

// Fetch boundary so live harvesting can be disabled or faked in tests.
class Fetcher {
 public:
  virtual ~Fetcher() = default;
  // Returns the response body; throws FetchFailed on any transport error.
  virtual std::string get(const std::string& url) = 0;
};

std::unique_ptr<Fetcher> make_http_fetcher();
// Refuses every fetch with FetchFailed; used under --no-network.
std::unique_ptr<Fetcher> make_offline_fetcher();

enum class TargetMode { Auto, LiveUrl, FixtureDir, ManifestFile };

AssessmentTarget load_target(const std::string& spec, TargetMode mode = TargetMode::Auto);

// Extracts metadata statements from the channels available for the target,
// in priority order. Channel failures surface as graph.warnings.
MetadataGraph harvest(const AssessmentTarget& target, Fetcher* fetcher = nullptr);

// Data files described by the metadata itself (file.locator plus any
// file.size / file.media_type statements that follow it). This is the file
// list for live targets, which have no manifest.
std::vector<DataFile> data_files_from_metadata(const MetadataGraph& graph);

enum class IdScheme { Doi, Handle, Ark, Purl, Urn, W3id, Uuid, Url, Unknown };

struct IdClass {
  IdScheme scheme = IdScheme::Unknown;
  bool persistent = false;
  bool globally_unique = false;
};

// Extra URL prefixes per scheme name, merged with the built-in table.
using PidPrefixes = std::map<std::string, std::vector<std::string>>;

IdClass classify_identifier(std::string_view id);
IdClass classify_identifier(std::string_view id, const PidPrefixes& extra);
const char* scheme_name(IdScheme scheme);
const char* channel_name(Channel channel);

}  // namespace fairgauge::harvest
