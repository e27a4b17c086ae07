#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "framelens/corpus.hpp"
#include "framelens/io.hpp"
#include "framelens/sentiment.hpp"

namespace framelens {

struct ModelPrediction {
  std::string model_id;
  std::string article_id;
  SentimentLabel label = SentimentLabel::kNeutral;
  std::optional<double> confidence;
  std::vector<std::string> rationale_sentences;
  std::optional<std::string> reasoning;
  std::string raw;
};

// article id -> full text; used to resolve ids and check rationales.
using ArticleTexts = std::unordered_map<std::string, std::string>;
ArticleTexts article_texts(const std::vector<Article>& articles);

// Harmonizes one record's label. Accepts, in order of preference, an integer
// `label`, a five-class `label_5class` string, or a `probabilities` array
// [negative, neutral, positive]. Returns nullopt when none is present.
// Throws ValidationError on malformed values.
std::optional<SentimentLabel> harmonize_record_label(const nlohmann::json& record);

// True when `sentence` occurs in `full_text` after whitespace normalization.
bool appears_verbatim(std::string_view sentence, std::string_view full_text);

struct PredictionLoad {
  std::vector<ModelPrediction> predictions;  // file order
  std::vector<Diagnostic> diagnostics;
};

// Reads prediction records. Unknown articles and label-less records are
// skipped with a diagnostic; rationale sentences not found in the article are
// dropped with a diagnostic; a duplicate (model, article) pair throws
// ValidationError naming both lines.
PredictionLoad ingest_predictions(const std::vector<std::filesystem::path>& paths,
                                  const ArticleTexts& articles);
PredictionLoad ingest_predictions(const std::filesystem::path& path, const ArticleTexts& articles);

nlohmann::json prediction_to_json(const ModelPrediction& p);

struct AgreementSummary {
  std::vector<std::string> models;
  std::size_t article_count = 0;
  // Index b: number of articles with exactly b negative votes (0..M).
  std::vector<std::size_t> vote_histogram;
  // Index k: fraction of articles with at least k negative votes (0..M).
  std::vector<double> fraction_at_least;
  // M x M exact-label agreement rates.
  std::vector<std::vector<double>> pairwise_agreement;
  // Per model: fractions of (-1, 0, +1).
  std::vector<std::array<double, 3>> label_distribution;
};

// Throws CoverageError listing every missing (model, article) pair and
// ValidationError on duplicate pairs or an empty model/article list.
AgreementSummary agreement(const std::vector<ModelPrediction>& predictions,
                           const std::vector<std::string>& models,
                           const std::vector<std::string>& article_ids);

// Distinct model ids in order of first appearance.
std::vector<std::string> model_ids(const std::vector<ModelPrediction>& predictions);

}  // namespace framelens
