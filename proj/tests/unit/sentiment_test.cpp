#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "framelens/error.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/sentiment.hpp"

using namespace framelens;
using L = SentimentLabel;

TEST(Labels, IntRoundTrip) {
  for (L l : kAllLabels) EXPECT_EQ(label_from_int(to_int(l)), l);
  EXPECT_THROW(label_from_int(2), ValidationError);
  EXPECT_THROW(label_from_int(-2), ValidationError);
  EXPECT_EQ(label_name(L::kNegative), "negative");
}

TEST(FiveClass, ExhaustiveMapping) {
  EXPECT_EQ(map_five_to_three(FiveClassLabel::kVeryNegative), L::kNegative);
  EXPECT_EQ(map_five_to_three(FiveClassLabel::kNegative), L::kNegative);
  EXPECT_EQ(map_five_to_three(FiveClassLabel::kNeutral), L::kNeutral);
  EXPECT_EQ(map_five_to_three(FiveClassLabel::kPositive), L::kPositive);
  EXPECT_EQ(map_five_to_three(FiveClassLabel::kVeryPositive), L::kPositive);
}

TEST(FiveClass, ParseSpellings) {
  EXPECT_EQ(parse_five_class("very_negative"), FiveClassLabel::kVeryNegative);
  EXPECT_EQ(parse_five_class("Very Negative"), FiveClassLabel::kVeryNegative);
  EXPECT_EQ(parse_five_class("very-positive"), FiveClassLabel::kVeryPositive);
  EXPECT_EQ(parse_five_class(" NEUTRAL "), FiveClassLabel::kNeutral);
  EXPECT_FALSE(parse_five_class("mixed"));
  EXPECT_FALSE(parse_five_class(""));
}

// Property: the mapping is surjective and order-preserving.
TEST(FiveClassProperty, MonotoneSurjective) {
  const FiveClassLabel order[] = {FiveClassLabel::kVeryNegative, FiveClassLabel::kNegative,
                                  FiveClassLabel::kNeutral, FiveClassLabel::kPositive,
                                  FiveClassLabel::kVeryPositive};
  std::set<int> seen;
  for (std::size_t i = 0; i < 5; ++i) {
    seen.insert(to_int(map_five_to_three(order[i])));
    if (i > 0) EXPECT_LE(to_int(map_five_to_three(order[i - 1])), to_int(map_five_to_three(order[i])));
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Probabilities, Argmax) {
  EXPECT_EQ(map_probabilities(0.7, 0.2, 0.1), L::kNegative);
  EXPECT_EQ(map_probabilities(0.1, 0.2, 0.7), L::kPositive);
  EXPECT_EQ(map_probabilities(0.1, 0.8, 0.1), L::kNeutral);
}

TEST(Probabilities, Ties) {
  EXPECT_EQ(map_probabilities(1.0 / 3, 1.0 / 3, 1.0 / 3), L::kNeutral);
  EXPECT_EQ(map_probabilities(0.4, 0.4, 0.2), L::kNeutral);
  EXPECT_EQ(map_probabilities(0.2, 0.4, 0.4), L::kNeutral);
  EXPECT_EQ(map_probabilities(0.5, 0.0, 0.5), L::kNegative);
}

TEST(Probabilities, InvalidInputs) {
  EXPECT_THROW(map_probabilities(0.5, 0.5, 0.5), ValidationError);
  EXPECT_THROW(map_probabilities(-0.1, 0.6, 0.5), ValidationError);
  EXPECT_THROW(map_probabilities(std::nan(""), 0.5, 0.5), ValidationError);
}

TEST(ProbabilitiesProperty, StrictMaxWins) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int iter = 0; iter < 5000; ++iter) {
    double p[3] = {u(rng), u(rng), u(rng)};
    const double s = p[0] + p[1] + p[2];
    for (double& x : p) x /= s;
    const std::size_t best = std::max_element(p, p + 3) - p;
    EXPECT_EQ(to_int(map_probabilities(p[0], p[1], p[2])), static_cast<int>(best) - 1);
  }
}

TEST(Hybrid, ThresholdCases) {
  auto r = hybrid_decision(0.50, 7);
  EXPECT_EQ(r.first, L::kPositive);
  EXPECT_EQ(r.second, HybridStage::kCompound);
  r = hybrid_decision(0.00, 3);
  EXPECT_EQ(r.first, L::kNegative);
  EXPECT_EQ(r.second, HybridStage::kRegex);
  r = hybrid_decision(0.10, 2);
  EXPECT_EQ(r.first, L::kNeutral);
  EXPECT_EQ(r.second, HybridStage::kRegex);
  r = hybrid_decision(-0.20, 0);
  EXPECT_EQ(r.first, L::kNeutral);
  EXPECT_EQ(r.second, HybridStage::kRegex);
  r = hybrid_decision(-0.21, 0);
  EXPECT_EQ(r.first, L::kNegative);
  EXPECT_EQ(r.second, HybridStage::kCompound);
  EXPECT_EQ(stage_name(HybridStage::kRegex), "regex");
}

TEST(Hybrid, ThresholdValidation) {
  EXPECT_THROW((HybridThresholds{0.1, 0.2, 3}.validate()), ConfigError);
  EXPECT_THROW((HybridThresholds{0.2, -0.2, 0}.validate()), ConfigError);
  EXPECT_NO_THROW(HybridThresholds{}.validate());
}

// Property: stage and label follow the two-stage contract on random inputs.
TEST(HybridProperty, StageLabelContract) {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double edges[] = {-0.2, 0.2, 0.0, -1.0, 1.0};
  for (int iter = 0; iter < 10000; ++iter) {
    const double c = iter % 10 == 0 ? edges[rng() % 5] : u(rng);
    const std::size_t n = rng() % 8;
    const auto [label, stage] = hybrid_decision(c, n);
    if (stage == HybridStage::kRegex) {
      EXPECT_GE(c, -0.20);
      EXPECT_LE(c, 0.20);
      EXPECT_EQ(label, n >= 3 ? L::kNegative : L::kNeutral);
    } else {
      EXPECT_TRUE(c > 0.20 || c < -0.20);
      EXPECT_EQ(to_int(label), c > 0 ? 1 : -1);
    }
  }
}

TEST(ClassifyHybrid, ComposesStages) {
  RawArticle r;
  r.title = "Panic in village";
  r.body = "A rogue tusker charged at farmers. The herd destroyed crops and damaged huts.";
  r.publish_date = "2023-01-01";
  const Article a = clean_article(r);
  const HybridResult h = classify_hybrid(a, bundled_lexicon());
  EXPECT_EQ(h.compound, compound_score(a.full_text));
  const auto matches = match_lexicon(segment_sentences(a.full_text), bundled_lexicon());
  EXPECT_EQ(h.fear_count, matches.size());
  EXPECT_EQ(h.fear_count, 5u);
  EXPECT_EQ(h.label, hybrid_decision(h.compound, h.fear_count).first);
  EXPECT_FALSE(h.victim_flag);
}

TEST(ClassifyHybrid, RegexStageCatchesNeutralCompound) {
  RawArticle r;
  r.title = "Herd moves through tea estate";
  r.body = "A herd stormed the tea estate, uprooted saplings and flattened a fence on Sunday.";
  r.publish_date = "2023-01-01";
  const HybridResult h = classify_hybrid(clean_article(r), bundled_lexicon());
  EXPECT_EQ(h.compound, 0.0);
  EXPECT_EQ(h.fear_count, 3u);
  EXPECT_EQ(h.stage, HybridStage::kRegex);
  EXPECT_EQ(h.label, L::kNegative);

  HybridThresholds strict;
  strict.nepl_min = 4;
  EXPECT_EQ(classify_hybrid(clean_article(r), bundled_lexicon(), strict).label, L::kNeutral);
}
