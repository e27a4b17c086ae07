#include "framelens/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "framelens/bundled.hpp"
#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {
namespace {

bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || ascii_upper(c); }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }
char ascii_lower(char c) { return ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

bool is_terminal(char c) { return c == '.' || c == '?' || c == '!'; }

// Length of a closing quote/bracket at s[i], or 0.
std::size_t closer_length(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+2019 and U+201D
  if (s.substr(i, 3) == "\xE2\x80\x99" || s.substr(i, 3) == "\xE2\x80\x9D") return 3;
  return 0;
}

bool starts_sentence(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (ascii_upper(c) || ascii_digit(c)) return true;
  if (c == '"' || c == '\'' || c == '(' || c == '[') return true;
  // U+2018 and U+201C
  return s.substr(i, 3) == "\xE2\x80\x98" || s.substr(i, 3) == "\xE2\x80\x9C";
}

// The word that ends with the period at `dot`, lowercased, with leading
// opening punctuation removed.
std::string word_before(std::string_view line, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && text::whitespace_length(line, b - 1) == 0) --b;
  std::string_view w = line.substr(b, dot - b);
  while (!w.empty() && (w.front() == '(' || w.front() == '"' || w.front() == '\'' ||
                        w.front() == '[')) {
    w.remove_prefix(1);
  }
  return text::to_lower(w);
}

bool suppresses_boundary(std::string_view line, std::size_t dot,
                         const AbbreviationSet& abbreviations) {
  const std::string w = word_before(line, dot);
  if (w.empty()) return false;
  if (w.size() == 1 && ascii_alpha(w[0])) return true;  // initial
  return abbreviations.contains(w);
}

// Emits the trimmed segment [b, e) of `text` as a sentence.
void emit(std::string_view text, std::size_t b, std::size_t e, std::vector<Sentence>& out) {
  std::string_view seg = text.substr(b, e - b);
  std::string_view trimmed = text::trim(seg);
  if (trimmed.empty()) return;
  const std::size_t begin = b + static_cast<std::size_t>(trimmed.data() - seg.data());
  out.push_back({out.size(), std::string(trimmed), begin, begin + trimmed.size()});
}

void segment_line(std::string_view text, std::size_t line_begin, std::size_t line_end,
                  const AbbreviationSet& abbreviations, std::vector<Sentence>& out) {
  std::string_view line = text.substr(line_begin, line_end - line_begin);
  std::size_t seg_begin = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    if (!is_terminal(line[i])) {
      ++i;
      continue;
    }
    const std::size_t first_terminal = i;
    std::size_t j = i;
    while (j < line.size() && is_terminal(line[j])) ++j;
    while (j < line.size()) {
      const std::size_t c = closer_length(line, j);
      if (c == 0) break;
      j += c;
    }
    std::size_t k = j;
    while (k < line.size()) {
      const std::size_t ws = text::whitespace_length(line, k);
      if (ws == 0) break;
      k += ws;
    }
    const bool boundary = k > j && k < line.size() && starts_sentence(line, k) &&
                          !(line[first_terminal] == '.' && j == first_terminal + 1 &&
                            suppresses_boundary(line, first_terminal, abbreviations));
    if (boundary) {
      emit(text, line_begin + seg_begin, line_begin + j, out);
      seg_begin = j;
    }
    i = j > i ? j : i + 1;
  }
  emit(text, line_begin + seg_begin, line_end, out);
}

}  // namespace

std::optional<Date> parse_iso_date(std::string_view s) {
  s = text::trim(s);
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!ascii_digit(s[i])) return std::nullopt;
  }
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (s[i] - '0');
    return v;
  };
  const Date d{std::chrono::year{num(0, 4)},
               std::chrono::month{static_cast<unsigned>(num(5, 2))},
               std::chrono::day{static_cast<unsigned>(num(8, 2))}};
  if (!d.ok()) return std::nullopt;
  return d;
}

std::string format_iso_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

AbbreviationSet AbbreviationSet::parse(std::string_view contents) {
  std::unordered_set<std::string> entries;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.back() == '.') t.remove_suffix(1);
    entries.insert(text::to_lower(t));
  }
  return AbbreviationSet(std::move(entries));
}

AbbreviationSet AbbreviationSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open abbreviation file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const AbbreviationSet& AbbreviationSet::bundled() {
  static const AbbreviationSet set = parse(bundled::abbreviations_txt());
  return set;
}

Article clean_article(const RawArticle& raw) {
  const std::string_view title = text::trim(raw.title);
  if (title.empty()) throw ValidationError("empty title");
  const auto date = parse_iso_date(raw.publish_date);
  if (!date) {
    throw ValidationError(raw.publish_date.empty()
                              ? "missing publish_date"
                              : "unparseable publish_date '" + raw.publish_date + "'");
  }

  const std::string_view sub = text::trim(raw.subheadline);
  std::string_view body = text::trim(raw.body);

  // Drop a leading copy of the subheadline from the body. Whitespace runs
  // compare equal regardless of length and letters compare case-insensitively;
  // the match must end on a word boundary.
  if (!sub.empty()) {
    std::size_t si = 0;
    std::size_t bi = 0;
    bool matched = true;
    while (si < sub.size()) {
      const std::size_t sws = text::whitespace_length(sub, si);
      if (sws > 0) {
        while (si < sub.size() && text::whitespace_length(sub, si) > 0)
          si += text::whitespace_length(sub, si);
        std::size_t consumed = 0;
        while (bi < body.size() && text::whitespace_length(body, bi) > 0) {
          const std::size_t w = text::whitespace_length(body, bi);
          bi += w;
          consumed += w;
        }
        if (consumed == 0) {
          matched = false;
          break;
        }
        continue;
      }
      if (bi >= body.size() || ascii_lower(sub[si]) != ascii_lower(body[bi])) {
        matched = false;
        break;
      }
      ++si;
      ++bi;
    }
    const bool at_boundary =
        bi == body.size() ||
        !(ascii_alpha(body[bi]) || ascii_digit(body[bi]) ||
          static_cast<unsigned char>(body[bi]) >= 0x80);
    if (matched && at_boundary) {
      body.remove_prefix(bi);
      while (!body.empty()) {
        const char c = body.front();
        const std::size_t ws = text::whitespace_length(body, 0);
        if (ws > 0) {
          body.remove_prefix(ws);
        } else if (c == '.' || c == '!' || c == '?' || c == ':' || c == ';' || c == ',' ||
                   c == '-') {
          body.remove_prefix(1);
        } else {
          break;
        }
      }
    }
  }

  Article a;
  a.id = raw.id;
  a.url = raw.url;
  a.title = std::string(title);
  a.subheadline = std::string(sub);
  a.body = std::string(body);
  a.publish_date = *date;
  a.source = raw.source;
  a.full_text = a.title;
  if (!a.subheadline.empty()) a.full_text += "\n" + a.subheadline;
  if (!a.body.empty()) a.full_text += "\n" + a.body;
  return a;
}

std::vector<Sentence> segment_sentences(std::string_view text,
                                        const AbbreviationSet& abbreviations) {
  std::vector<Sentence> out;
  std::size_t line_begin = 0;
  while (line_begin <= text.size()) {
    std::size_t line_end = text.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = text.size();
    segment_line(text, line_begin, line_end, abbreviations, out);
    line_begin = line_end + 1;
  }
  return out;
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  return segment_sentences(text, AbbreviationSet::bundled());
}

std::vector<Chunk> chunk_words(std::string_view text, const ChunkConfig& config,
                               std::string_view article_id) {
  if (config.size <= config.overlap) {
    throw ConfigError("chunk size must exceed overlap (size=" + std::to_string(config.size) +
                      ", overlap=" + std::to_string(config.overlap) + ")");
  }
  if (config.min_chunk == 0) throw ConfigError("min_chunk must be at least 1");

  const auto tokens = text::split_whitespace(text);
  const std::size_t n = tokens.size();
  std::vector<Chunk> chunks;
  if (n == 0) return chunks;

  const std::size_t stride = config.size - config.overlap;
  for (std::size_t start = 0;; start += stride) {
    const std::size_t end = std::min(start + config.size, n);
    chunks.push_back({std::string(article_id), chunks.size(), start, end, {}});
    if (end == n) break;
  }
  if (chunks.size() > 1 && chunks.back().size() < config.min_chunk) {
    chunks.pop_back();
    chunks.back().word_end = n;
  }
  for (auto& c : chunks) {
    for (std::size_t w = c.word_begin; w < c.word_end; ++w) {
      if (w > c.word_begin) c.text.push_back(' ');
      c.text.append(tokens[w].text);
    }
  }
  return chunks;
}

CorpusStats corpus_stats(const std::vector<Article>& articles,
                         const AbbreviationSet& abbreviations) {
  if (articles.empty()) throw ValidationError("corpus_stats: empty corpus");
  std::vector<std::size_t> counts;
  counts.reserve(articles.size());
  CorpusStats s;
  s.article_count = articles.size();
  for (const auto& a : articles) {
    counts.push_back(text::word_count(a.full_text));
    s.sentence_count += segment_sentences(a.full_text, abbreviations).size();
  }
  const double n = static_cast<double>(counts.size());
  const double sum = std::accumulate(counts.begin(), counts.end(), 0.0);
  s.mean_words = sum / n;
  double ss = 0.0;
  for (auto c : counts) ss += (static_cast<double>(c) - s.mean_words) * (static_cast<double>(c) - s.mean_words);
  s.std_words = std::sqrt(ss / n);

  std::vector<std::size_t> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  s.median_words = m % 2 == 1 ? static_cast<double>(sorted[m / 2])
                              : (static_cast<double>(sorted[m / 2 - 1]) +
                                 static_cast<double>(sorted[m / 2])) / 2.0;
  s.min_words = sorted.front();
  s.max_words = sorted.back();
  return s;
}

RelevanceResponse parse_relevance_response(std::string_view response) {
  std::optional<bool> relevant;
  RelevanceResponse out;
  std::istringstream in{std::string(response)};
  std::string raw_line;
  auto value_after = [](std::string_view line, std::string_view key) -> std::optional<std::string_view> {
    if (line.size() < key.size() + 1) return std::nullopt;
    if (text::to_lower(line.substr(0, key.size())) != key) return std::nullopt;
    std::string_view rest = text::trim(line.substr(key.size()));
    if (rest.empty() || rest.front() != ':') return std::nullopt;
    return text::trim(rest.substr(1));
  };
  while (std::getline(in, raw_line)) {
    std::string_view line = text::trim(raw_line);
    // Tolerate markdown emphasis around keys, e.g. "**Relevance:** Relevant".
    std::string cleaned;
    for (char c : line) {
      if (c != '*') cleaned.push_back(c);
    }
    line = text::trim(cleaned);
    if (auto v = value_after(line, "relevance"); v && !relevant) {
      const std::string lv = text::normalize_whitespace(text::to_lower(*v));
      if (lv == "relevant") {
        relevant = true;
      } else if (lv == "not relevant") {
        relevant = false;
      } else {
        throw ParseError("unrecognized relevance value '" + std::string(*v) + "'",
                         std::string(response));
      }
    } else if (auto loc = value_after(line, "location"); loc) {
      if (text::to_lower(*loc) == "location not specified") continue;
      std::string_view rest = *loc;
      while (!rest.empty()) {
        const std::size_t semi = rest.find(';');
        std::string_view part = text::trim(rest.substr(0, semi));
        if (!part.empty()) out.locations.emplace_back(part);
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
      }
    }
  }
  if (!relevant) throw ParseError("response has no 'Relevance:' line", std::string(response));
  out.relevant = *relevant;
  return out;
}

}  // namespace framelens
