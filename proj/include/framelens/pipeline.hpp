#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "framelens/corpus.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/sentiment.hpp"

namespace framelens {

inline constexpr std::size_t kMaxRationaleSentences = 5;

struct ArticleAnalysis {
  std::string article_id;
  HybridResult hybrid;
  std::vector<Sentence> sentences;
  std::vector<LexiconMatch> matches;
  CategoryPresence presence;
  VictimReport victims;
  // Sentences with at least one NEPL match: the five with most matches (ties
  // by position), emitted in document order.
  std::vector<std::size_t> rationale_indices;
};

std::vector<std::size_t> select_rationales(const std::vector<LexiconMatch>& matches,
                                           std::size_t limit = kMaxRationaleSentences);

ArticleAnalysis analyze_article(const Article& article, const HybridResources& resources,
                                const HybridThresholds& thresholds = {});

// Runs analyze_article over the corpus on up to `jobs` threads. Results are
// in input order regardless of scheduling.
std::vector<ArticleAnalysis> analyze_corpus(const std::vector<Article>& articles,
                                            const HybridResources& resources,
                                            const HybridThresholds& thresholds, std::size_t jobs = 1);

}  // namespace framelens
