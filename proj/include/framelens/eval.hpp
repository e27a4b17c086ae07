#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "framelens/ensemble.hpp"
#include "framelens/io.hpp"
#include "framelens/sentiment.hpp"

namespace framelens {

inline constexpr const char* kFinalAnnotator = "final";

struct GoldAnnotation {
  std::string article_id;
  SentimentLabel label = SentimentLabel::kNeutral;
  int intensity = 1;
  std::vector<std::string> nepl_terms;
  std::vector<std::string> justification_sentences;
  bool deaths_mentioned = false;
  int human_deaths = 0;
  int elephant_deaths = 0;
  std::string annotator_id;
};

// Throws ValidationError when intensity is outside [1, 10], a count is
// negative, or counts are nonzero without deaths_mentioned.
void validate(const GoldAnnotation& g);
GoldAnnotation gold_from_json(const nlohmann::json& record);

// Loads the records of one annotator (default: the adjudicated "final"
// labels). Malformed records and duplicate (article, annotator) pairs throw
// LoadError naming the line.
std::vector<GoldAnnotation> load_annotations(const std::filesystem::path& path,
                                             const std::string& annotator = kFinalAnnotator);

// Rows are gold labels, columns predictions, class order (-1, 0, +1).
using ConfusionMatrix = std::array<std::array<std::size_t, 3>, 3>;

constexpr std::size_t label_index(SentimentLabel l) { return static_cast<std::size_t>(to_int(l) + 1); }

// `predictions` must hold exactly one prediction per gold article (other
// articles are ignored). Throws ValidationError on empty gold or duplicates
// and CoverageError listing articles without a prediction.
ConfusionMatrix confusion_matrix(const std::vector<GoldAnnotation>& gold,
                                 const std::vector<ModelPrediction>& predictions);

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct ClassMetrics {
  std::array<ClassScores, 3> per_class;  // (-1, 0, +1)
  double accuracy = 0.0;

  const ClassScores& operator[](SentimentLabel l) const { return per_class[label_index(l)]; }
};

// Zero denominators give 0. Throws ValidationError on an all-zero matrix.
ClassMetrics class_metrics(const ConfusionMatrix& m);

// Sentence-level BLEU with clipped n-gram precisions for n = 1..4 (only the
// orders the candidate can reach), uniform geometric mean and brevity
// penalty. A zero precision at n >= 2 is replaced by 1 / (2 * candidate
// n-gram count); a zero unigram precision gives 0.
double bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// ROUGE-L F1 (beta = 1) from the longest common subsequence.
double rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

// Orders sentences by their position in `full_text`; sentences that cannot be
// located keep their relative order after the located ones.
std::vector<std::string> in_document_order(const std::vector<std::string>& sentences,
                                           std::string_view full_text);

struct ArticleOverlap {
  std::string article_id;
  double bleu = 0.0;
  double rouge_l = 0.0;
};

struct OverlapScores {
  double bleu = 0.0;
  double rouge_l = 0.0;
  std::vector<ArticleOverlap> per_article;  // sorted by article id
  std::vector<Diagnostic> diagnostics;       // excluded articles
};

// Macro-averaged overlap between model rationales (candidate) and expert
// justifications (reference). Articles with no justification are excluded
// and reported. Throws CoverageError when a gold article has no prediction.
OverlapScores rationale_overlap(const std::vector<GoldAnnotation>& gold,
                                const std::vector<ModelPrediction>& predictions,
                                const ArticleTexts& articles);

}  // namespace framelens
