#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "framelens/corpus.hpp"

namespace framelens {

// A non-fatal problem with one input record.
struct Diagnostic {
  std::string source;
  std::size_t line = 0;
  std::string message;

  std::string to_string() const;
};

// Calls `fn(line_no, record)` for each non-blank line of a JSON-lines file.
// Lines that are not JSON objects are reported through `on_error` with the
// raw text. Throws LoadError if the file cannot be opened.
void read_jsonl(const std::filesystem::path& path,
                const std::function<void(std::size_t, const nlohmann::json&)>& fn,
                const std::function<void(std::size_t, const std::string&, const std::string&)>& on_error);

// Optional string field; missing or null yields "". Throws on a non-string.
std::string string_field(const nlohmann::json& record, const char* key);

struct RejectedRecord {
  std::size_t line = 0;
  nlohmann::json record;  // original fields (or {"raw": text} when unparseable)
  std::string reason;
};

struct CorpusLoad {
  std::vector<Article> articles;  // input order
  std::vector<RejectedRecord> rejected;
};

RawArticle raw_article_from_json(const nlohmann::json& record);

// Reads one article per line; invalid or duplicate-id records are rejected
// with a reason, never dropped silently. Records without an id fall back to
// their url.
CorpusLoad load_corpus(const std::filesystem::path& path);

// Same fields as the input plus `reason`.
void write_rejected(std::ostream& out, const std::vector<RejectedRecord>& rejected);

nlohmann::json article_to_json(const Article& a);

}  // namespace framelens
