#include "framelens/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace framelens {

std::vector<std::size_t> select_rationales(const std::vector<LexiconMatch>& matches,
                                           std::size_t limit) {
  std::map<std::size_t, std::size_t> per_sentence;
  for (const auto& m : matches) ++per_sentence[m.sentence_index];
  std::vector<std::pair<std::size_t, std::size_t>> ranked(per_sentence.begin(), per_sentence.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > limit) ranked.resize(limit);
  std::vector<std::size_t> out;
  for (const auto& [idx, count] : ranked) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

ArticleAnalysis analyze_article(const Article& article, const HybridResources& r,
                                const HybridThresholds& thresholds) {
  thresholds.validate();
  ArticleAnalysis a;
  a.article_id = article.id;
  a.sentences = segment_sentences(article.full_text, *r.abbreviations);
  a.matches = match_lexicon(a.sentences, *r.nepl);
  a.presence = category_presence(a.matches, *r.nepl);
  a.victims = detect_victims(a.sentences, *r.victim_terms, *r.negators);
  a.rationale_indices = select_rationales(a.matches);

  a.hybrid.compound = compound_score(article.full_text, *r.valence);
  a.hybrid.fear_count = a.presence.nepl_count;
  a.hybrid.victim_flag = a.victims.victim_flag;
  std::tie(a.hybrid.label, a.hybrid.stage) =
      hybrid_decision(a.hybrid.compound, a.hybrid.fear_count, thresholds);
  return a;
}

std::vector<ArticleAnalysis> analyze_corpus(const std::vector<Article>& articles,
                                            const HybridResources& resources,
                                            const HybridThresholds& thresholds, std::size_t jobs) {
  std::vector<ArticleAnalysis> out(articles.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, articles.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < articles.size(); ++i) out[i] = analyze_article(articles[i], resources, thresholds);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < articles.size(); i = next++) {
        try {
          out[i] = analyze_article(articles[i], resources, thresholds);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace framelens
