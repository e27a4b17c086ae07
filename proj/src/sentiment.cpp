#include "framelens/sentiment.hpp"

#include <cmath>

#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {

SentimentLabel label_from_int(long long v) {
  switch (v) {
    case -1: return SentimentLabel::kNegative;
    case 0: return SentimentLabel::kNeutral;
    case 1: return SentimentLabel::kPositive;
    default: throw ValidationError("sentiment label must be -1, 0 or 1, got " + std::to_string(v));
  }
}

std::string_view label_name(SentimentLabel l) {
  switch (l) {
    case SentimentLabel::kNegative: return "negative";
    case SentimentLabel::kNeutral: return "neutral";
    case SentimentLabel::kPositive: return "positive";
  }
  return "neutral";
}

std::optional<FiveClassLabel> parse_five_class(std::string_view s) {
  std::string key = text::to_lower(text::trim(s));
  for (char& c : key) {
    if (c == '_' || c == '-') c = ' ';
  }
  key = text::normalize_whitespace(key);
  if (key == "very negative") return FiveClassLabel::kVeryNegative;
  if (key == "negative") return FiveClassLabel::kNegative;
  if (key == "neutral") return FiveClassLabel::kNeutral;
  if (key == "positive") return FiveClassLabel::kPositive;
  if (key == "very positive") return FiveClassLabel::kVeryPositive;
  return std::nullopt;
}

SentimentLabel map_five_to_three(FiveClassLabel label) {
  switch (label) {
    case FiveClassLabel::kVeryNegative:
    case FiveClassLabel::kNegative:
      return SentimentLabel::kNegative;
    case FiveClassLabel::kNeutral:
      return SentimentLabel::kNeutral;
    case FiveClassLabel::kPositive:
    case FiveClassLabel::kVeryPositive:
      return SentimentLabel::kPositive;
  }
  return SentimentLabel::kNeutral;
}

SentimentLabel map_probabilities(double p_neg, double p_neu, double p_pos) {
  for (double p : {p_neg, p_neu, p_pos}) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("probabilities must be finite and non-negative");
    }
  }
  const double sum = p_neg + p_neu + p_pos;
  if (std::fabs(sum - 1.0) > 1e-6) {
    throw ValidationError("probabilities must sum to 1 (got " + std::to_string(sum) + ")");
  }
  const double best = std::max({p_neg, p_neu, p_pos});
  if (p_neu == best) return SentimentLabel::kNeutral;
  if (p_neg == best) return SentimentLabel::kNegative;
  return SentimentLabel::kPositive;
}

void HybridThresholds::validate() const {
  if (!(positive > negative)) {
    throw ConfigError("positive threshold must exceed negative threshold");
  }
  if (nepl_min < 1) throw ConfigError("nepl_min must be at least 1");
}

std::string_view stage_name(HybridStage s) {
  return s == HybridStage::kCompound ? "compound" : "regex";
}

std::pair<SentimentLabel, HybridStage> hybrid_decision(double compound, std::size_t nepl_count,
                                                       const HybridThresholds& t) {
  if (compound > t.positive) return {SentimentLabel::kPositive, HybridStage::kCompound};
  if (compound < t.negative) return {SentimentLabel::kNegative, HybridStage::kCompound};
  return {nepl_count >= t.nepl_min ? SentimentLabel::kNegative : SentimentLabel::kNeutral,
          HybridStage::kRegex};
}

HybridResult classify_hybrid(const Article& article, const HybridResources& r,
                             const HybridThresholds& thresholds) {
  thresholds.validate();
  HybridResult out;
  out.compound = compound_score(article.full_text, *r.valence);
  const auto sentences = segment_sentences(article.full_text, *r.abbreviations);
  out.fear_count = match_lexicon(sentences, *r.nepl).size();
  out.victim_flag = detect_victims(sentences, *r.victim_terms, *r.negators).victim_flag;
  std::tie(out.label, out.stage) = hybrid_decision(out.compound, out.fear_count, thresholds);
  return out;
}

HybridResult classify_hybrid(const Article& article, const Lexicon& lexicon,
                             const HybridThresholds& thresholds) {
  HybridResources r;
  r.nepl = &lexicon;
  return classify_hybrid(article, r, thresholds);
}

}  // namespace framelens
