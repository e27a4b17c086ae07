#include "framelens/io.hpp"

#include <fstream>
#include <unordered_set>

#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {

std::string Diagnostic::to_string() const {
  std::string s = source;
  if (line > 0) s += ":" + std::to_string(line);
  return s + ": " + message;
}

void read_jsonl(const std::filesystem::path& path,
                const std::function<void(std::size_t, const nlohmann::json&)>& fn,
                const std::function<void(std::size_t, const std::string&, const std::string&)>& on_error) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::is_whitespace_only(line)) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      on_error(line_no, line, std::string("invalid JSON: ") + e.what());
      continue;
    }
    if (!record.is_object()) {
      on_error(line_no, line, "record is not a JSON object");
      continue;
    }
    fn(line_no, record);
  }
}

std::string string_field(const nlohmann::json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return {};
  if (!it->is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

RawArticle raw_article_from_json(const nlohmann::json& record) {
  RawArticle r;
  r.id = string_field(record, "id");
  r.url = string_field(record, "url");
  r.title = string_field(record, "title");
  r.subheadline = string_field(record, "subheadline");
  r.body = string_field(record, "body");
  r.publish_date = string_field(record, "publish_date");
  r.source = string_field(record, "source");
  return r;
}

CorpusLoad load_corpus(const std::filesystem::path& path) {
  CorpusLoad out;
  std::unordered_set<std::string> ids;
  read_jsonl(
      path,
      [&](std::size_t line_no, const nlohmann::json& record) {
        try {
          RawArticle raw = raw_article_from_json(record);
          if (raw.id.empty()) raw.id = raw.url;
          if (raw.id.empty()) throw ValidationError("missing id and url");
          Article a = clean_article(raw);
          if (!ids.insert(a.id).second) throw ValidationError("duplicate id '" + a.id + "'");
          out.articles.push_back(std::move(a));
        } catch (const ValidationError& e) {
          out.rejected.push_back({line_no, record, e.what()});
        }
      },
      [&](std::size_t line_no, const std::string& raw, const std::string& why) {
        out.rejected.push_back({line_no, nlohmann::json{{"raw", raw}}, why});
      });
  return out;
}

void write_rejected(std::ostream& out, const std::vector<RejectedRecord>& rejected) {
  for (const auto& r : rejected) {
    nlohmann::json j = r.record;
    j["reason"] = r.reason;
    j["line"] = r.line;
    out << j.dump() << '\n';
  }
}

nlohmann::json article_to_json(const Article& a) {
  return {{"id", a.id},
          {"url", a.url},
          {"title", a.title},
          {"subheadline", a.subheadline},
          {"body", a.body},
          {"publish_date", format_iso_date(a.publish_date)},
          {"source", a.source}};
}

}  // namespace framelens
