#include "fairgauge/harvest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "fairgauge/errors.hpp"
#include "util.hpp"

#include <httplib.h>

namespace fairgauge::harvest {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------------------
// canonical key mapping
// ---------------------------------------------------------------------------

// Maps a source-schema local name onto the canonical vocabulary. Returns an
// empty view when the local name carries no metadata role we track.
std::string_view canonical_for_local(std::string_view local) {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"title", "title"},
      {"name", "title"},
      {"creator", "creator"},
      {"author", "creator"},
      {"contributor", "creator"},
      {"publisher", "publisher"},
      {"date", "publication_date"},
      {"issued", "publication_date"},
      {"datepublished", "publication_date"},
      {"publicationyear", "publication_date"},
      {"publication_date", "publication_date"},
      {"description", "description"},
      {"abstract", "description"},
      {"subject", "keywords"},
      {"keywords", "keywords"},
      {"identifier", "identifier"},
      {"doi", "identifier"},
      {"type", "resource_type"},
      {"resourcetype", "resource_type"},
      {"resource_type", "resource_type"},
      {"rights", "license"},
      {"license", "license"},
      {"accessrights", "access_level"},
      {"access_right", "access_level"},
      {"accesslevel", "access_level"},
      {"conditionsofaccess", "access_level"},
      {"relation", "related"},
      {"citation", "related"},
      {"ispartof", "related"},
      {"sameas", "related"},
      {"references", "related"},
      {"isreferencedby", "related"},
      {"relatedidentifier", "related"},
      {"conformsto", "schema_id"},
      {"preservationpolicy", "preservation_policy"},
      {"preservation_policy", "preservation_policy"},
      {"publishingprinciples", "preservation_policy"},
  };
  auto it = table.find(util::lowercase(local));
  return it == table.end() ? std::string_view{} : std::string_view(it->second);
}

bool is_provenance_namespace(std::string_view ns) {
  std::string n = util::normalize_iri(ns);
  return n == "w3.org/ns/prov" || n == "purl.org/pav";
}

// Splits a full IRI into (namespace, local) at the last '#' or '/'.
std::pair<std::string, std::string> split_iri(std::string_view iri) {
  size_t pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos || pos + 1 >= iri.size()) return {std::string(iri), ""};
  return {std::string(iri.substr(0, pos + 1)), std::string(iri.substr(pos + 1))};
}

// Schema recognition tokens for graph.schema_ids.
std::string recognize_schema(std::string_view iri_or_token) {
  std::string n = util::normalize_iri(iri_or_token);
  if (n == "schema.org" || n.starts_with("schema.org/")) return "schema.org";
  if (n.starts_with("purl.org/dc/")) return "dublin-core";
  if (n.find("datacite.org") != std::string::npos) return "datacite";
  if (n.find("hpc-fair/hpc-ontology") != std::string::npos || n.find("hpc-ontology") != std::string::npos)
    return "hpc-ontology";
  if (n.find("ddialliance.org") != std::string::npos) return "ddi";
  if (n.find("cfconventions.org") != std::string::npos) return "cf-conventions";
  return "";
}

void add_namespace(MetadataGraph& graph, std::string_view iri) {
  if (iri.empty()) return;
  graph.namespaces.insert(std::string(iri));
  std::string token = recognize_schema(iri);
  if (!token.empty()) graph.schema_ids.insert(token);
}

void add_statement(MetadataGraph& graph, std::string_view key, std::string_view value, Channel channel) {
  std::string v = util::trim(value);
  if (key.empty() || v.empty()) return;
  graph.statements.push_back({std::string(key), v, channel});
  if (key == keys::schema_id) {
    std::string token = recognize_schema(v);
    graph.schema_ids.insert(token.empty() ? util::normalize_iri(v) : token);
  }
}

// ---------------------------------------------------------------------------
// JSON-LD channel
// ---------------------------------------------------------------------------

void collect_context(const json& ctx, MetadataGraph& graph) {
  if (ctx.is_string()) {
    add_namespace(graph, ctx.get<std::string>());
  } else if (ctx.is_object()) {
    for (const auto& [term, def] : ctx.items()) {
      if (def.is_string()) add_namespace(graph, def.get<std::string>());
    }
  } else if (ctx.is_array()) {
    for (const auto& part : ctx) collect_context(part, graph);
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_object()) {
    if (v.contains("name") && v["name"].is_string()) return v["name"].get<std::string>();
    if (v.contains("@value") && v["@value"].is_string()) return v["@value"].get<std::string>();
    if (v.contains("@id") && v["@id"].is_string()) return v["@id"].get<std::string>();
  }
  return "";
}

void emit_distribution(const json& dist, Channel channel, MetadataGraph& graph) {
  auto one = [&](const json& d) {
    if (!d.is_object()) {
      add_statement(graph, keys::file_locator, scalar_text(d), channel);
      return;
    }
    if (d.contains("contentUrl")) add_statement(graph, keys::file_locator, scalar_text(d["contentUrl"]), channel);
    if (d.contains("contentSize")) add_statement(graph, keys::file_size, scalar_text(d["contentSize"]), channel);
    if (d.contains("encodingFormat"))
      add_statement(graph, keys::file_media_type, scalar_text(d["encodingFormat"]), channel);
  };
  if (dist.is_array()) {
    for (const auto& d : dist) one(d);
  } else {
    one(dist);
  }
}

// Maps one JSON-LD node's keys onto canonical statements. Unrecognized full
// IRIs are kept verbatim so nothing harvested is dropped.
void emit_jsonld_node(const json& node, Channel channel, MetadataGraph& graph) {
  if (!node.is_object()) return;
  for (const auto& [raw_key, value] : node.items()) {
    if (raw_key == "@context") {
      collect_context(value, graph);
      continue;
    }
    if (raw_key == "@graph") continue;
    if (raw_key == "@id") {
      add_statement(graph, keys::identifier, scalar_text(value), channel);
      continue;
    }
    if (raw_key == "@type") {
      if (value.is_array()) {
        for (const auto& t : value) add_statement(graph, keys::resource_type, scalar_text(t), channel);
      } else {
        add_statement(graph, keys::resource_type, scalar_text(value), channel);
      }
      continue;
    }

    std::string local = raw_key;
    std::string ns;
    if (raw_key.find("://") != std::string::npos) {
      std::tie(ns, local) = split_iri(raw_key);
      add_namespace(graph, ns);
    } else if (size_t colon = raw_key.find(':'); colon != std::string::npos) {
      local = raw_key.substr(colon + 1);
      // prefix form: namespace only known via the context, already collected
      std::string prefix = raw_key.substr(0, colon);
      if (prefix == "prov" || prefix == "pav") ns = prefix;
    }

    if (util::lowercase(local) == "distribution") {
      emit_distribution(value, channel, graph);
      continue;
    }

    std::string key;
    if (!ns.empty() && (is_provenance_namespace(ns) || ns == "prov" || ns == "pav")) {
      key = "provenance." + local;
    } else {
      std::string_view canon = canonical_for_local(local);
      key = canon.empty() ? raw_key : std::string(canon);
    }

    if (value.is_array()) {
      for (const auto& item : value) add_statement(graph, key, scalar_text(item), channel);
    } else {
      add_statement(graph, key, scalar_text(value), channel);
    }
  }
}

void parse_jsonld_text(const std::string& text, Channel channel, MetadataGraph& graph) {
  json doc = json::parse(text);
  graph.formats.insert("json-ld");
  if (doc.is_array()) {
    for (const auto& node : doc) emit_jsonld_node(node, channel, graph);
    return;
  }
  if (doc.is_object()) {
    emit_jsonld_node(doc, channel, graph);
    if (doc.contains("@graph") && doc["@graph"].is_array()) {
      for (const auto& node : doc["@graph"]) emit_jsonld_node(node, channel, graph);
    }
  }
}

// ---------------------------------------------------------------------------
// HTML channels: embedded ld+json blocks, then DC/DataCite/citation meta tags
// ---------------------------------------------------------------------------

std::string extract_attr(std::string_view tag, std::string_view attr) {
  std::string lower = util::lowercase(tag);
  std::string needle = std::string(attr) + "=";
  size_t pos = 0;
  while ((pos = lower.find(needle, pos)) != std::string::npos) {
    // attribute name must start a word
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(lower[pos - 1])) || lower[pos - 1] == '-')) {
      pos += needle.size();
      continue;
    }
    size_t vstart = pos + needle.size();
    if (vstart >= tag.size()) return "";
    char quote = tag[vstart];
    if (quote == '"' || quote == '\'') {
      size_t vend = tag.find(quote, vstart + 1);
      if (vend == std::string_view::npos) return "";
      return std::string(tag.substr(vstart + 1, vend - vstart - 1));
    }
    size_t vend = tag.find_first_of(" \t\r\n>", vstart);
    return std::string(tag.substr(vstart, vend - vstart));
  }
  return "";
}

void parse_html_meta(const std::string& html, MetadataGraph& graph) {
  std::string lower = util::lowercase(html);
  size_t pos = 0;
  while ((pos = lower.find("<meta", pos)) != std::string::npos) {
    size_t end = lower.find('>', pos);
    if (end == std::string::npos) break;
    std::string_view tag(html.data() + pos, end - pos + 1);
    std::string name = extract_attr(tag, "name");
    if (name.empty()) name = extract_attr(tag, "property");
    std::string content = extract_attr(tag, "content");
    pos = end + 1;
    if (name.empty() || content.empty()) continue;

    std::string lname = util::lowercase(name);
    std::string local;
    if (lname.starts_with("dc.") || lname.starts_with("dcterms.")) {
      local = lname.substr(lname.find('.') + 1);
      graph.schema_ids.insert("dublin-core");
    } else if (lname.starts_with("datacite.")) {
      local = lname.substr(9);
      graph.schema_ids.insert("datacite");
    } else if (lname.starts_with("citation_")) {
      local = lname.substr(9);
      if (local.starts_with("publication_")) local = local.substr(12);
      graph.schema_ids.insert("citation-meta");
    } else {
      continue;
    }
    std::string_view canon = canonical_for_local(local);
    if (!canon.empty()) add_statement(graph, canon, content, Channel::HtmlMetaTag);
  }
}

void parse_html(const std::string& html, MetadataGraph& graph) {
  graph.formats.insert("html");

  // channel 1: <script type="application/ld+json"> blocks, document order
  std::string lower = util::lowercase(html);
  size_t pos = 0;
  while ((pos = lower.find("<script", pos)) != std::string::npos) {
    size_t tag_end = lower.find('>', pos);
    if (tag_end == std::string::npos) break;
    std::string_view tag(html.data() + pos, tag_end - pos + 1);
    std::string type = extract_attr(tag, "type");
    size_t close = lower.find("</script", tag_end);
    if (close == std::string::npos) break;
    if (util::lowercase(type) == "application/ld+json") {
      std::string body = html.substr(tag_end + 1, close - tag_end - 1);
      try {
        parse_jsonld_text(body, Channel::EmbeddedStructuredBlock, graph);
      } catch (const std::exception& e) {
        graph.warnings.push_back(std::string("embedded-structured-block: ") + e.what());
      }
    }
    pos = close + 1;
  }

  // channel 2: meta tags
  parse_html_meta(html, graph);
}

// ---------------------------------------------------------------------------
// Turtle sidecar (subset: prefixes + simple triples with ';' continuation)
// ---------------------------------------------------------------------------

struct TurtleToken {
  enum Kind { Iri, Prefixed, Literal, Punct, A } kind;
  std::string text;
};

std::vector<TurtleToken> turtle_tokens(const std::string& text) {
  std::vector<TurtleToken> tokens;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '<') {
      size_t end = text.find('>', i);
      if (end == std::string::npos) fail(Errc::TargetUnreadable, "unterminated IRI in turtle record");
      tokens.push_back({TurtleToken::Iri, text.substr(i + 1, end - i - 1)});
      i = end + 1;
      continue;
    }
    if (c == '"') {
      size_t end = i + 1;
      std::string lit;
      while (end < text.size() && text[end] != '"') {
        if (text[end] == '\\' && end + 1 < text.size()) ++end;
        lit += text[end];
        ++end;
      }
      if (end >= text.size()) fail(Errc::TargetUnreadable, "unterminated literal in turtle record");
      i = end + 1;
      // skip optional ^^type or @lang
      if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '^') {
        i += 2;
        if (i < text.size() && text[i] == '<') {
          size_t gt = text.find('>', i);
          if (gt == std::string::npos) fail(Errc::TargetUnreadable, "unterminated datatype IRI in turtle record");
          i = gt + 1;
        } else {
          while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';' &&
                 text[i] != '.')
            ++i;
        }
      } else if (i < text.size() && text[i] == '@') {
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      }
      tokens.push_back({TurtleToken::Literal, lit});
      continue;
    }
    if (c == ';' || c == '.' || c == ',') {
      tokens.push_back({TurtleToken::Punct, std::string(1, c)});
      ++i;
      continue;
    }
    size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ';' &&
           text[end] != ',' && text[end] != '.')
      ++end;
    // a trailing '.' glued to a token belongs to the statement terminator
    std::string word = text.substr(i, end - i);
    if (word == "a") {
      tokens.push_back({TurtleToken::A, word});
    } else {
      tokens.push_back({TurtleToken::Prefixed, word});
    }
    i = end;
  }
  return tokens;
}

void parse_turtle(const std::string& text, MetadataGraph& graph) {
  graph.formats.insert("turtle");
  std::map<std::string, std::string> prefixes;

  auto tokens = turtle_tokens(text);
  size_t i = 0;

  auto expand = [&](const TurtleToken& t) -> std::pair<std::string, std::string> {
    // returns (namespace, local) for predicates
    if (t.kind == TurtleToken::Iri) return split_iri(t.text);
    size_t colon = t.text.find(':');
    if (colon == std::string::npos) return {"", t.text};
    std::string prefix = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    auto it = prefixes.find(prefix);
    return {it == prefixes.end() ? prefix : it->second, local};
  };

  while (i < tokens.size()) {
    const TurtleToken& t = tokens[i];
    if (t.kind == TurtleToken::Prefixed && (t.text == "@prefix" || util::iequals(t.text, "prefix"))) {
      if (i + 2 < tokens.size()) {
        std::string prefix = tokens[i + 1].text;
        if (!prefix.empty() && prefix.back() == ':') prefix.pop_back();
        prefixes[prefix] = tokens[i + 2].text;
        add_namespace(graph, tokens[i + 2].text);
        i += 3;
        while (i < tokens.size() && tokens[i].kind == TurtleToken::Punct) ++i;
        continue;
      }
      break;
    }
    // subject
    ++i;
    // predicate-object list until '.'
    while (i + 1 < tokens.size()) {
      const TurtleToken& pred = tokens[i];
      const TurtleToken& obj = tokens[i + 1];
      i += 2;
      std::string key;
      if (pred.kind == TurtleToken::A) {
        key = std::string(keys::resource_type);
      } else {
        auto [ns, local] = expand(pred);
        if (is_provenance_namespace(ns)) {
          key = "provenance." + local;
        } else {
          std::string_view canon = canonical_for_local(local);
          key = canon.empty() ? (ns + local) : std::string(canon);
        }
      }
      std::string value = obj.text;
      if (obj.kind == TurtleToken::Prefixed) {
        auto [ns, local] = expand(obj);
        value = ns + local;
      }
      add_statement(graph, key, value, Channel::SidecarRecord);
      // object lists
      while (i < tokens.size() && tokens[i].kind == TurtleToken::Punct && tokens[i].text == ",") {
        ++i;
        if (i < tokens.size()) {
          add_statement(graph, key, tokens[i].text, Channel::SidecarRecord);
          ++i;
        }
      }
      if (i < tokens.size() && tokens[i].kind == TurtleToken::Punct) {
        std::string p = tokens[i].text;
        ++i;
        if (p == ".") break;
        continue;  // ';'
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Dublin Core XML sidecar
// ---------------------------------------------------------------------------

void parse_dc_xml(const std::string& text, MetadataGraph& graph) {
  graph.formats.insert("dc-xml");
  graph.schema_ids.insert("dublin-core");

  // xmlns declarations
  size_t pos = 0;
  std::string lower = util::lowercase(text);
  while ((pos = lower.find("xmlns:", pos)) != std::string::npos) {
    size_t eq = text.find('=', pos);
    if (eq == std::string::npos) break;
    size_t q1 = text.find_first_of("\"'", eq);
    if (q1 == std::string::npos) break;
    size_t q2 = text.find(text[q1], q1 + 1);
    if (q2 == std::string::npos) break;
    add_namespace(graph, text.substr(q1 + 1, q2 - q1 - 1));
    pos = q2 + 1;
  }

  // <dc:local>value</dc:local>
  pos = 0;
  while ((pos = lower.find("<dc:", pos)) != std::string::npos) {
    size_t name_end = lower.find_first_of(" >", pos);
    if (name_end == std::string::npos) break;
    std::string local = lower.substr(pos + 4, name_end - pos - 4);
    size_t open_end = lower.find('>', pos);
    size_t close = lower.find("</dc:" + local, open_end);
    if (open_end == std::string::npos || close == std::string::npos) break;
    std::string value = text.substr(open_end + 1, close - open_end - 1);
    std::string_view canon = canonical_for_local(local);
    if (!canon.empty()) add_statement(graph, canon, value, Channel::SidecarRecord);
    pos = close + 1;
  }
}

// ---------------------------------------------------------------------------
// registry-record channel: flat JSON of canonical keys
// ---------------------------------------------------------------------------

void parse_registry_record(const std::string& text, MetadataGraph& graph) {
  json doc = json::parse(text);
  graph.formats.insert("json");
  if (!doc.is_object()) fail(Errc::TargetUnreadable, "registry record must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array()) {
      for (const auto& item : value) add_statement(graph, key, scalar_text(item), Channel::RegistryRecord);
    } else {
      add_statement(graph, key, scalar_text(value), Channel::RegistryRecord);
    }
  }
}

// ---------------------------------------------------------------------------
// files.manifest
// ---------------------------------------------------------------------------

std::string format_label_for(const DataFile& file) {
  static const std::map<std::string, std::string, std::less<>> media = {
      {"text/csv", "csv"},
      {"application/json", "json"},
      {"application/ld+json", "json-ld"},
      {"text/turtle", "turtle"},
      {"application/n-triples", "n-triples"},
      {"text/plain", "plain text"},
      {"application/x-hdf5", "hdf5"},
      {"application/x-netcdf", "netcdf"},
  };
  if (file.media_type) {
    auto it = media.find(util::lowercase(*file.media_type));
    if (it != media.end()) return it->second;
  }
  static const std::map<std::string, std::string, std::less<>> ext = {
      {"csv", "csv"},   {"json", "json"},    {"jsonld", "json-ld"}, {"ttl", "turtle"},
      {"nt", "n-triples"}, {"txt", "plain text"}, {"h5", "hdf5"},    {"hdf5", "hdf5"},
      {"nc", "netcdf"}, {"tsv", "csv"},
  };
  std::string loc = file.locator;
  size_t q = loc.find_first_of("?#");
  if (q != std::string::npos) loc.resize(q);
  size_t dot = loc.find_last_of('.');
  if (dot != std::string::npos) {
    auto it = ext.find(util::lowercase(loc.substr(dot + 1)));
    if (it != ext.end()) return it->second;
  }
  return "";
}

bool is_hex(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c); });
}

struct Manifest {
  std::optional<std::string> identifier;
  std::vector<DataFile> files;
};

Manifest parse_manifest(const std::string& text, const std::string& origin) {
  Manifest manifest;
  int line_no = 0;
  for (const std::string& raw : util::split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (util::trim(line).empty() || util::trim(line).starts_with("#")) continue;
    std::string where = origin + ":" + std::to_string(line_no);

    if (line.starts_with("identifier=")) {
      manifest.identifier = util::trim(line.substr(11));
      continue;
    }

    std::vector<std::string> fields = util::split(line, '\t');
    DataFile file;
    file.locator = util::trim(fields[0]);
    if (file.locator.empty()) fail(Errc::TargetUnreadable, "empty locator at " + where);
    auto field = [&](size_t idx) -> std::string {
      if (idx >= fields.size()) return "";
      std::string v = util::trim(fields[idx]);
      return v == "-" ? "" : v;
    };
    if (std::string size = field(1); !size.empty()) {
      auto parsed = util::parse_int(size);
      if (!parsed || *parsed < 0) fail(Errc::TargetUnreadable, "bad size '" + size + "' at " + where);
      file.declared_size = static_cast<std::uint64_t>(*parsed);
    }
    if (std::string media = field(2); !media.empty()) file.media_type = media;
    if (std::string sum = field(3); !sum.empty()) {
      size_t colon = sum.find(':');
      if (colon == std::string::npos) fail(Errc::TargetUnreadable, "checksum must be algo:hex at " + where);
      Checksum checksum{sum.substr(0, colon), sum.substr(colon + 1)};
      if (!is_hex(checksum.hex)) fail(Errc::TargetUnreadable, "checksum digest is not hex at " + where);
      file.checksum = checksum;
    }
    std::string label = format_label_for(file);
    if (!label.empty()) file.format_label = label;
    manifest.files.push_back(std::move(file));
  }
  return manifest;
}

// ---------------------------------------------------------------------------
// fetchers
// ---------------------------------------------------------------------------

class OfflineFetcher final : public Fetcher {
 public:
  std::string get(const std::string& url) override {
    fail(Errc::FetchFailed, "network access disabled, cannot fetch " + url);
  }
};

class HttpFetcher final : public Fetcher {
 public:
  std::string get(const std::string& url) override {
    size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) fail(Errc::FetchFailed, "not a fetchable URL: " + url);
    std::string scheme = url.substr(0, scheme_end);
    size_t path_pos = url.find('/', scheme_end + 3);
    std::string origin = path_pos == std::string::npos ? url : url.substr(0, path_pos);
    std::string path = path_pos == std::string::npos ? "/" : url.substr(path_pos);
#ifndef FAIRGAUGE_HAVE_OPENSSL
    if (scheme == "https") fail(Errc::FetchFailed, "built without TLS support: " + url);
#endif
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(20);
    auto res = client.Get(path);
    if (!res || res->status < 200 || res->status >= 300) {
      fail(Errc::FetchFailed, "GET " + url + " failed" +
                                  (res ? " with status " + std::to_string(res->status) : ""));
    }
    return res->body;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// MetadataGraph accessors
// ---------------------------------------------------------------------------

bool MetadataGraph::has_key(std::string_view key) const {
  return std::any_of(statements.begin(), statements.end(),
                     [&](const MetadataStatement& s) { return s.key == key; });
}

std::optional<std::string> MetadataGraph::first_value(std::string_view key) const {
  for (const MetadataStatement& s : statements) {
    if (s.key == key) return s.value;
  }
  return std::nullopt;
}

std::vector<std::string> MetadataGraph::values(std::string_view key) const {
  std::vector<std::string> out;
  for (const MetadataStatement& s : statements) {
    if (s.key == key) out.push_back(s.value);
  }
  return out;
}

size_t MetadataGraph::count_key(std::string_view key) const {
  return static_cast<size_t>(std::count_if(statements.begin(), statements.end(),
                                           [&](const MetadataStatement& s) { return s.key == key; }));
}

bool MetadataGraph::has_key_prefix(std::string_view prefix) const {
  return std::any_of(statements.begin(), statements.end(),
                     [&](const MetadataStatement& s) { return std::string_view(s.key).starts_with(prefix); });
}

// ---------------------------------------------------------------------------
// load_target / harvest
// ---------------------------------------------------------------------------

std::unique_ptr<Fetcher> make_http_fetcher() { return std::make_unique<HttpFetcher>(); }
std::unique_ptr<Fetcher> make_offline_fetcher() { return std::make_unique<OfflineFetcher>(); }

AssessmentTarget load_target(const std::string& spec, TargetMode mode) {
  std::string trimmed = util::trim(spec);
  if (trimmed.empty()) fail(Errc::TargetUnreadable, "empty target spec");

  if (mode == TargetMode::Auto) {
    if (util::looks_like_url(trimmed)) {
      mode = TargetMode::LiveUrl;
    } else if (fs::is_directory(trimmed)) {
      mode = TargetMode::FixtureDir;
    } else if (fs::is_regular_file(trimmed)) {
      mode = TargetMode::ManifestFile;
    } else {
      fail(Errc::TargetUnreadable, "no such file or directory: " + trimmed);
    }
  }

  AssessmentTarget target;
  switch (mode) {
    case TargetMode::LiveUrl: {
      target.kind = TargetKind::LiveUrl;
      target.identifier = trimmed;
      break;
    }
    case TargetMode::FixtureDir: {
      if (!fs::is_directory(trimmed)) fail(Errc::TargetUnreadable, "not a directory: " + trimmed);
      target.kind = TargetKind::FixtureDir;
      target.root = trimmed;
      target.identifier = trimmed;
      fs::path manifest_path = target.root / "files.manifest";
      if (fs::exists(manifest_path)) {
        Manifest manifest = parse_manifest(util::read_file(manifest_path.string()), manifest_path.string());
        if (manifest.identifier) target.identifier = *manifest.identifier;
        target.data_files = std::move(manifest.files);
      }
      fs::path publisher_path = target.root / "publisher.txt";
      if (fs::exists(publisher_path)) {
        std::string first = util::split(util::read_file(publisher_path.string()), '\n')[0];
        if (!util::trim(first).empty()) target.publisher_hint = util::trim(first);
      }
      break;
    }
    case TargetMode::ManifestFile: {
      if (!fs::is_regular_file(trimmed)) fail(Errc::TargetUnreadable, "not a file: " + trimmed);
      target.kind = TargetKind::ManifestFile;
      target.root = fs::path(trimmed).parent_path();
      Manifest manifest = parse_manifest(util::read_file(trimmed), trimmed);
      if (!manifest.identifier)
        fail(Errc::TargetUnreadable, "manifest file requires an identifier= header line: " + trimmed);
      target.identifier = *manifest.identifier;
      target.data_files = std::move(manifest.files);
      break;
    }
    case TargetMode::Auto:
      break;
  }
  return target;
}

MetadataGraph harvest(const AssessmentTarget& target, Fetcher* fetcher) {
  MetadataGraph graph;

  auto try_channel = [&](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() == Errc::FetchFailed) throw;  // unreachable live target is fatal
      graph.warnings.push_back(std::string(what) + ": " + e.what());
    } catch (const std::exception& e) {
      graph.warnings.push_back(std::string(what) + ": " + e.what());
    }
  };

  if (target.kind == TargetKind::LiveUrl) {
    std::unique_ptr<Fetcher> offline;
    if (!fetcher) {
      offline = make_offline_fetcher();
      fetcher = offline.get();
    }
    std::string body = fetcher->get(target.identifier);
    try_channel("landing-page", [&] { parse_html(body, graph); });
    return graph;
  }

  if (target.kind == TargetKind::ManifestFile) {
    graph.warnings.push_back("manifest target carries no metadata channels");
    return graph;
  }

  // fixture-dir: fixed channel priority, sidecars in fixed filename order
  fs::path landing = target.root / "landing.html";
  if (fs::exists(landing)) {
    try_channel("landing-page", [&] { parse_html(util::read_file(landing.string()), graph); });
  }
  struct Sidecar {
    const char* file;
    void (*parse)(const std::string&, MetadataGraph&);
  };
  static const std::array<Sidecar, 3> sidecars = {{
      {"record.jsonld", [](const std::string& t, MetadataGraph& g) { parse_jsonld_text(t, Channel::SidecarRecord, g); }},
      {"record.ttl", parse_turtle},
      {"record.dc.xml", parse_dc_xml},
  }};
  for (const Sidecar& sidecar : sidecars) {
    fs::path path = target.root / sidecar.file;
    if (fs::exists(path)) {
      try_channel(sidecar.file, [&] { sidecar.parse(util::read_file(path.string()), graph); });
    }
  }
  fs::path registry_record = target.root / "registry-record.json";
  if (fs::exists(registry_record)) {
    try_channel("registry-record.json",
                [&] { parse_registry_record(util::read_file(registry_record.string()), graph); });
  }
  return graph;
}

std::vector<DataFile> data_files_from_metadata(const MetadataGraph& graph) {
  std::vector<DataFile> files;
  for (const MetadataStatement& s : graph.statements) {
    if (s.key == keys::file_locator) {
      DataFile file;
      file.locator = s.value;
      files.push_back(std::move(file));
      continue;
    }
    if (files.empty()) continue;
    DataFile& last = files.back();
    if (s.key == keys::file_size && !last.declared_size) {
      if (auto size = util::parse_int(s.value); size && *size >= 0) {
        last.declared_size = static_cast<std::uint64_t>(*size);
      }
    } else if (s.key == keys::file_media_type && !last.media_type) {
      last.media_type = s.value;
    }
  }
  for (DataFile& file : files) {
    std::string label = format_label_for(file);
    if (!label.empty()) file.format_label = label;
  }
  return files;
}

// ---------------------------------------------------------------------------
// identifier classification
// ---------------------------------------------------------------------------

namespace {

std::string url_host(std::string_view url) {
  size_t scheme = url.find("://");
  if (scheme == std::string_view::npos) return "";
  size_t start = scheme + 3;
  size_t end = url.find('/', start);
  std::string host = util::lowercase(url.substr(start, end - start));
  if (host.starts_with("www.")) host.erase(0, 4);
  return host;
}

bool is_bare_doi(std::string_view s) {
  if (!s.starts_with("10.")) return false;
  size_t slash = s.find('/');
  if (slash == std::string_view::npos || slash < 7) return false;  // 10.NNNN/...
  for (size_t i = 3; i < slash; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '.') return false;
  }
  return slash + 1 < s.size();
}

bool is_uuid(std::string_view s) {
  if (s.size() != 36) return false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i == 8 || i == 13 || i == 18 || i == 23) {
      if (s[i] != '-') return false;
    } else if (!std::isxdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

const char* scheme_name(IdScheme scheme) {
  switch (scheme) {
    case IdScheme::Doi: return "doi";
    case IdScheme::Handle: return "handle";
    case IdScheme::Ark: return "ark";
    case IdScheme::Purl: return "purl";
    case IdScheme::Urn: return "urn";
    case IdScheme::W3id: return "w3id";
    case IdScheme::Uuid: return "uuid";
    case IdScheme::Url: return "url";
    case IdScheme::Unknown: return "unknown";
  }
  return "unknown";
}

const char* channel_name(Channel channel) {
  switch (channel) {
    case Channel::EmbeddedStructuredBlock: return "embedded-structured-block";
    case Channel::HtmlMetaTag: return "html-meta-tag";
    case Channel::SidecarRecord: return "sidecar-record";
    case Channel::RegistryRecord: return "registry-record";
  }
  return "embedded-structured-block";
}

IdClass classify_identifier(std::string_view id) { return classify_identifier(id, PidPrefixes{}); }

IdClass classify_identifier(std::string_view id, const PidPrefixes& extra) {
  std::string s = util::trim(id);
  std::string lower = util::lowercase(s);

  auto result = [](IdScheme scheme) {
    bool persistent = scheme == IdScheme::Doi || scheme == IdScheme::Handle || scheme == IdScheme::Ark ||
                      scheme == IdScheme::Purl || scheme == IdScheme::Urn || scheme == IdScheme::W3id;
    return IdClass{scheme, persistent, scheme != IdScheme::Unknown};
  };

  if (lower.empty()) return result(IdScheme::Unknown);

  std::string host = url_host(lower);

  if (lower.starts_with("doi:") || is_bare_doi(lower) || host == "doi.org" || host == "dx.doi.org")
    return result(IdScheme::Doi);
  if (lower.starts_with("hdl:") || host == "hdl.handle.net") return result(IdScheme::Handle);
  if (lower.starts_with("ark:") || lower.find("/ark:") != std::string::npos) return result(IdScheme::Ark);
  if (host == "purl.org" || host == "purl.oclc.org") return result(IdScheme::Purl);
  if (host == "w3id.org") return result(IdScheme::W3id);
  if (lower.starts_with("urn:")) return result(IdScheme::Urn);

  // config-extended URL prefixes, e.g. an institutional resolver
  static const std::map<std::string, IdScheme, std::less<>> scheme_names = {
      {"doi", IdScheme::Doi}, {"handle", IdScheme::Handle}, {"ark", IdScheme::Ark},
      {"purl", IdScheme::Purl}, {"urn", IdScheme::Urn},     {"w3id", IdScheme::W3id},
      {"uuid", IdScheme::Uuid}, {"url", IdScheme::Url},
  };
  for (const auto& [name, prefixes] : extra) {
    auto it = scheme_names.find(util::lowercase(name));
    if (it == scheme_names.end()) continue;
    for (const std::string& prefix : prefixes) {
      if (lower.starts_with(util::lowercase(prefix))) return result(it->second);
    }
  }

  if (is_uuid(lower)) return result(IdScheme::Uuid);
  if (util::looks_like_url(lower)) return result(IdScheme::Url);
  return result(IdScheme::Unknown);
}

}  // namespace fairgauge::harvest
