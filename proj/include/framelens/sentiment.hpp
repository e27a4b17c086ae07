#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framelens/corpus.hpp"
#include "framelens/lexicon.hpp"

namespace framelens {

enum class SentimentLabel : int { kNegative = -1, kNeutral = 0, kPositive = 1 };

constexpr int to_int(SentimentLabel l) { return static_cast<int>(l); }
// Throws ValidationError for anything outside {-1, 0, 1}.
SentimentLabel label_from_int(long long v);
std::string_view label_name(SentimentLabel l);  // "negative" / "neutral" / "positive"

inline constexpr SentimentLabel kAllLabels[] = {SentimentLabel::kNegative,
                                                SentimentLabel::kNeutral,
                                                SentimentLabel::kPositive};

enum class FiveClassLabel { kVeryNegative, kNegative, kNeutral, kPositive, kVeryPositive };

// Accepts "very negative", "very_negative", "Very Negative", ...
std::optional<FiveClassLabel> parse_five_class(std::string_view s);
SentimentLabel map_five_to_three(FiveClassLabel label);

// Argmax over (negative, neutral, positive). Exact ties go to neutral when it
// is tied, otherwise to negative. Throws ValidationError for negative or
// non-finite inputs, or a sum outside 1 +/- 1e-6.
SentimentLabel map_probabilities(double p_neg, double p_neu, double p_pos);

// token -> valence in [-4, 4].
class ValenceLexicon {
 public:
  // One `token<TAB>valence` per line; extra tab-separated columns are ignored.
  static ValenceLexicon parse(std::string_view tsv, std::string_view source);
  // Throws ConfigError if the file does not exist.
  static ValenceLexicon load(const std::filesystem::path& path);
  static const ValenceLexicon& bundled();

  std::optional<double> find(const std::string& lower_token) const {
    auto it = valence_.find(lower_token);
    if (it == valence_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const std::string& lower_token) const { return valence_.count(lower_token) > 0; }
  std::size_t size() const { return valence_.size(); }
  bool empty() const { return valence_.empty(); }

 private:
  std::unordered_map<std::string, double> valence_;
};

// Lexicon-and-rules polarity in [-1, 1]: valence sum with booster, negation,
// contrastive "but", capitalization and punctuation adjustments, normalized
// by x / sqrt(x^2 + 15). Empty text scores 0. Throws ConfigError when the
// lexicon is empty.
double compound_score(std::string_view text, const ValenceLexicon& lexicon = ValenceLexicon::bundled());

// x / sqrt(x^2 + alpha), clamped to [-1, 1].
double normalize_valence(double raw, double alpha = 15.0);

struct HybridThresholds {
  double positive = 0.20;
  double negative = -0.20;
  std::size_t nepl_min = 3;

  // Throws ConfigError unless positive > negative and nepl_min >= 1.
  void validate() const;
};

enum class HybridStage { kCompound, kRegex };
std::string_view stage_name(HybridStage s);

struct HybridResult {
  SentimentLabel label = SentimentLabel::kNeutral;
  double compound = 0.0;
  std::size_t fear_count = 0;
  bool victim_flag = false;
  HybridStage stage = HybridStage::kCompound;
};

// The two-stage decision alone: strict compound thresholds, then the NEPL
// occurrence count inside the ambiguous band.
std::pair<SentimentLabel, HybridStage> hybrid_decision(double compound, std::size_t nepl_count,
                                                       const HybridThresholds& t = {});

struct HybridResources {
  const Lexicon* nepl = &bundled_lexicon();
  const ValenceLexicon* valence = &ValenceLexicon::bundled();
  const Lexicon* victim_terms = &bundled_victim_terms();
  const Lexicon* negators = &bundled_negators();
  const AbbreviationSet* abbreviations = &AbbreviationSet::bundled();
};

HybridResult classify_hybrid(const Article& article, const Lexicon& lexicon,
                             const HybridThresholds& thresholds = {});
HybridResult classify_hybrid(const Article& article, const HybridResources& resources,
                             const HybridThresholds& thresholds = {});

}  // namespace framelens
