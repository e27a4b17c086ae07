#include "framelens/trends.hpp"

#include <algorithm>
#include <map>

#include "framelens/error.hpp"

namespace framelens {

std::vector<double> trailing_mean(const std::vector<double>& series, std::size_t window) {
  if (window == 0) throw ConfigError("smoothing window must be at least 1");
  std::vector<double> out(series.size(), 0.0);
  for (std::size_t t = 0; t < series.size(); ++t) {
    const std::size_t first = t + 1 >= window ? t + 1 - window : 0;
    double sum = 0.0;
    for (std::size_t i = first; i <= t; ++i) sum += series[i];
    out[t] = sum / static_cast<double>(t - first + 1);
  }
  return out;
}

std::vector<MonthlyTrend> monthly_trends(const std::vector<DatedLabel>& articles, std::size_t window) {
  if (articles.empty()) throw ValidationError("monthly_trends: empty corpus");
  if (window == 0) throw ConfigError("smoothing window must be at least 1");
  std::map<YearMonth, std::pair<std::size_t, std::size_t>> buckets;
  for (const auto& a : articles) {
    auto& b = buckets[{static_cast<int>(a.date.year()), static_cast<unsigned>(a.date.month())}];
    ++b.first;
    if (a.label == SentimentLabel::kNegative) ++b.second;
  }
  std::vector<MonthlyTrend> rows;
  const YearMonth last = buckets.rbegin()->first;
  for (YearMonth ym = buckets.begin()->first; ym <= last; ym = ym.next()) {
    MonthlyTrend row;
    row.month = ym;
    if (auto it = buckets.find(ym); it != buckets.end()) {
      row.article_count = it->second.first;
      row.negative_count = it->second.second;
      row.negativity_rate = static_cast<double>(row.negative_count) / static_cast<double>(row.article_count);
    }
    rows.push_back(row);
  }
  std::vector<double> counts, rates;
  for (const auto& r : rows) {
    counts.push_back(static_cast<double>(r.article_count));
    rates.push_back(r.negativity_rate);
  }
  const auto sc = trailing_mean(counts, window);
  const auto sr = trailing_mean(rates, window);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].smoothed_count = sc[i];
    rows[i].smoothed_rate = sr[i];
  }
  return rows;
}

VictimNeplCrosstab victim_nepl_crosstab(const std::vector<ArticleFlags>& flags) {
  VictimNeplCrosstab t;
  for (const auto& f : flags) {
    const bool nepl = f.nepl_count >= 1;
    const std::size_t cell = f.victim ? (nepl ? 0 : 1) : (nepl ? 2 : 3);
    ++t.counts[cell];
  }
  const std::size_t n = t.total();
  for (std::size_t i = 0; i < 4; ++i) {
    t.percentages[i] = n > 0 ? 100.0 * static_cast<double>(t.counts[i]) / static_cast<double>(n) : 0.0;
  }
  return t;
}

VictimNeplCrosstab victim_nepl_crosstab(const std::vector<Article>& articles, const Lexicon& lexicon) {
  std::vector<ArticleFlags> flags;
  flags.reserve(articles.size());
  for (const auto& a : articles) {
    const auto sentences = segment_sentences(a.full_text);
    flags.push_back({detect_victims(sentences).victim_flag, match_lexicon(sentences, lexicon).size()});
  }
  return victim_nepl_crosstab(flags);
}

}  // namespace framelens
