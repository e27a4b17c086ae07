#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "framelens/corpus.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/sentiment.hpp"

namespace framelens {

struct YearMonth {
  int year = 0;
  unsigned month = 1;

  auto operator<=>(const YearMonth&) const = default;
  YearMonth next() const { return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1}; }
};

struct MonthlyTrend {
  YearMonth month;
  std::size_t article_count = 0;
  std::size_t negative_count = 0;
  double negativity_rate = 0.0;
  double smoothed_count = 0.0;
  double smoothed_rate = 0.0;
};

struct DatedLabel {
  Date date;
  SentimentLabel label = SentimentLabel::kNeutral;
};

// Trailing rolling mean; the first window - 1 points average over the
// history available so far. Throws ConfigError for window == 0.
std::vector<double> trailing_mean(const std::vector<double>& series, std::size_t window);

// One row per calendar month from the earliest to the latest date, with
// empty months zero-filled. Throws ValidationError on empty input.
std::vector<MonthlyTrend> monthly_trends(const std::vector<DatedLabel>& articles,
                                         std::size_t window = 3);

struct VictimNeplCrosstab {
  // Cell order: victim & NEPL, victim & no NEPL, no victim & NEPL, neither.
  std::array<std::size_t, 4> counts{};
  std::array<double, 4> percentages{};

  std::size_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

inline constexpr std::array<const char*, 4> kCrosstabCells = {
    "victim_and_nepl", "victim_no_nepl", "no_victim_nepl", "no_victim_no_nepl"};

struct ArticleFlags {
  bool victim = false;
  std::size_t nepl_count = 0;
};

VictimNeplCrosstab victim_nepl_crosstab(const std::vector<ArticleFlags>& flags);
VictimNeplCrosstab victim_nepl_crosstab(const std::vector<Article>& articles,
                                        const Lexicon& lexicon = bundled_lexicon());

}  // namespace framelens
