#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace framelens {

using Date = std::chrono::year_month_day;

// Parses a strict YYYY-MM-DD date. Returns nullopt for malformed or
// impossible dates.
std::optional<Date> parse_iso_date(std::string_view s);
std::string format_iso_date(const Date& d);

// An article record as it arrives from the extraction stage.
struct RawArticle {
  std::string id;
  std::string url;
  std::string title;
  std::string subheadline;
  std::string body;
  std::string publish_date;
  std::string source;
};

struct Article {
  std::string id;
  std::string url;
  std::string title;
  std::string subheadline;
  std::string body;  // after subheadline de-duplication
  std::string full_text;
  Date publish_date;
  std::string source;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  // Byte offsets [begin, end) into the segmented text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Chunk {
  std::string article_id;
  std::size_t index = 0;
  // Word offsets [word_begin, word_end).
  std::size_t word_begin = 0;
  std::size_t word_end = 0;
  std::string text;

  std::size_t size() const { return word_end - word_begin; }
};

struct ChunkConfig {
  std::size_t size = 450;
  std::size_t overlap = 50;
  std::size_t min_chunk = 20;
};

struct CorpusStats {
  std::size_t article_count = 0;
  std::size_t sentence_count = 0;
  double mean_words = 0.0;
  double median_words = 0.0;
  double std_words = 0.0;  // population (divisor N)
  std::size_t min_words = 0;
  std::size_t max_words = 0;
};

struct RelevanceResponse {
  bool relevant = false;
  std::vector<std::string> locations;
};

// Set of lowercase abbreviations (without the trailing period) whose period
// never ends a sentence.
class AbbreviationSet {
 public:
  AbbreviationSet() = default;
  explicit AbbreviationSet(std::unordered_set<std::string> entries)
      : entries_(std::move(entries)) {}

  // One entry per line; blank lines and '#' comments ignored.
  static AbbreviationSet parse(std::string_view contents);
  static AbbreviationSet load(const std::filesystem::path& path);
  static const AbbreviationSet& bundled();

  bool contains(std::string_view lower_word) const {
    return entries_.count(std::string(lower_word)) > 0;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Validates a raw record and builds the de-duplicated full text. Throws
// ValidationError when the title is empty or the date does not parse.
Article clean_article(const RawArticle& raw);

// Rule-based sentence splitter. Line breaks are hard boundaries; inside a line
// a boundary follows '.', '?' or '!' (plus any closing quotes or brackets)
// when whitespace and then an uppercase letter, opening quote or digit
// follows. A period after an abbreviation or a single-letter initial is not
// a boundary.
std::vector<Sentence> segment_sentences(std::string_view text,
                                        const AbbreviationSet& abbreviations);
std::vector<Sentence> segment_sentences(std::string_view text);

// Overlapping word windows. Throws ConfigError when size <= overlap or
// min_chunk == 0. Empty text yields no chunks.
std::vector<Chunk> chunk_words(std::string_view text, const ChunkConfig& config = {},
                               std::string_view article_id = {});

// Throws ValidationError on an empty corpus.
CorpusStats corpus_stats(const std::vector<Article>& articles,
                         const AbbreviationSet& abbreviations = AbbreviationSet::bundled());

// Parses the "Relevance: ..." / "Location: ..." reply of the relevance
// filter. Throws ParseError when no Relevance line is present.
RelevanceResponse parse_relevance_response(std::string_view response);

}  // namespace framelens
