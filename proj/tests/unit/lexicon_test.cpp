#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <random>

#include "framelens/bundled.hpp"
#include "framelens/error.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/text.hpp"
#include "oracles/lexicon_fixture.hpp"

using namespace framelens;

namespace {

std::vector<Sentence> sents(std::string_view t) { return segment_sentences(t); }

std::string load_error_message(std::string_view yaml) {
  try {
    Lexicon::parse(yaml, "test.yaml",
                   std::vector<std::string>(kNeplCategories.begin(), kNeplCategories.end()));
  } catch (const LoadError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(LoadLexicon, BundledHasSixCategories) {
  const Lexicon& lex = bundled_lexicon();
  ASSERT_EQ(lex.categories().size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(lex.categories()[i].name, kNeplCategories[i]);
  EXPECT_TRUE(lex.contains("Metaphorical/Anthropomorphic Labels", "rogue tusker"));
  EXPECT_TRUE(lex.contains("Aggression and Violence", "charged"));
}

TEST(LoadLexicon, FromDataDirMatchesBundled) {
  const Lexicon lex = load_lexicon(std::string(FL_DATA_DIR) + "/nepl.yaml");
  EXPECT_EQ(lex.entry_count(), bundled_lexicon().entry_count());
}

TEST(LoadLexicon, Errors) {
  EXPECT_NE(load_error_message(""), "");
  EXPECT_NE(load_error_message("# only a comment\n"), "");
  const std::string dup = load_error_message("Fear and Panic:\n  - menace\n  - panic\n  - Menace\n");
  EXPECT_NE(dup.find("test.yaml:4"), std::string::npos) << dup;
  EXPECT_NE(dup.find("duplicate"), std::string::npos);
  const std::string unknown = load_error_message("Fear and Panic:\n  - panic\nJoy:\n  - glee\n");
  EXPECT_NE(unknown.find("test.yaml:3"), std::string::npos) << unknown;
  EXPECT_NE(load_error_message("Fear and Panic:\n  - \"  \"\n"), "");
  EXPECT_THROW(load_lexicon("/nonexistent/nepl.yaml"), LoadError);
}

TEST(LoadLexicon, EntriesAreLowercasedAndTokenized) {
  const Lexicon lex = Lexicon::parse("Fear and Panic:\n  - Narrow   ESCAPE\n", "t");
  ASSERT_EQ(lex.categories()[0].entries.size(), 1u);
  EXPECT_EQ(lex.categories()[0].entries[0].canonical, "narrow escape");
  EXPECT_EQ(lex.categories()[0].entries[0].tokens, (std::vector<std::string>{"narrow", "escape"}));
}

TEST(MatchLexicon, RogueTuskerCharged) {
  const auto m = match_lexicon(sents("A rogue tusker charged."), bundled_lexicon());
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].term, "rogue tusker");
  EXPECT_EQ(m[0].category, "Metaphorical/Anthropomorphic Labels");
  EXPECT_EQ(m[0].token_begin, 1u);
  EXPECT_EQ(m[0].token_end, 3u);
  EXPECT_EQ(m[1].term, "charged");
  EXPECT_EQ(m[1].category, "Aggression and Violence");
}

TEST(MatchLexicon, NoTerms) {
  EXPECT_TRUE(match_lexicon(sents("The elephant walked calmly."), bundled_lexicon()).empty());
}

TEST(MatchLexicon, LongestMatchSuppressesShorter) {
  const auto m = match_lexicon(sents("A rampaging herd arrived."), bundled_lexicon());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].term, "rampaging herd");
  EXPECT_EQ(m[0].category, "Conflict and Hostility");
}

TEST(MatchLexicon, CrossCategoryTermIsOneMatch) {
  const auto m = match_lexicon(sents("The menace returned."), bundled_lexicon());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].category, "Fear and Panic");
  EXPECT_EQ(m[0].also_categories, (std::vector<std::string>{"Metaphorical/Anthropomorphic Labels"}));
  const auto p = category_presence(m);
  EXPECT_EQ(p.nepl_count, 1u);
  EXPECT_TRUE(p.has("Fear and Panic"));
  EXPECT_TRUE(p.has("Metaphorical/Anthropomorphic Labels"));
}

TEST(MatchLexicon, TwelveSentenceFixture) {
  const auto ss = sents(oracle::lexicon_fixture_text());
  ASSERT_EQ(ss.size(), 12u);
  const auto m = match_lexicon(ss, bundled_lexicon());
  const auto& want = oracle::lexicon_fixture_matches();
  ASSERT_EQ(m.size(), want.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m[i].sentence_index, want[i].sentence);
    EXPECT_EQ(m[i].term, want[i].term);
    EXPECT_EQ(m[i].category, want[i].category);
  }
  const auto p = category_presence(m);
  EXPECT_EQ(p.categories_present(), 6u);
  EXPECT_EQ(p.nepl_count, want.size());
}

TEST(CategoryPresence, Examples) {
  const auto empty = category_presence({});
  EXPECT_EQ(empty.nepl_count, 0u);
  EXPECT_EQ(empty.categories_present(), 0u);
  ASSERT_EQ(empty.present.size(), 6u);

  const auto twice = category_presence(match_lexicon(sents("It charged. It charged again."), bundled_lexicon()));
  EXPECT_EQ(twice.nepl_count, 2u);
  EXPECT_TRUE(twice.has("Aggression and Violence"));
  EXPECT_EQ(twice.categories_present(), 1u);

  const auto three = category_presence(
      match_lexicon(sents("The beast charged and destroyed huts."), bundled_lexicon()));
  EXPECT_EQ(three.categories_present(), 3u);
}

namespace {

const std::vector<std::string> kFillers = {"the", "herd", "village", "farmers", "near", "forest", "road",
                                           "officials", "said", "at", "night", "elephant", "water"};

std::vector<std::string> all_terms() {
  std::vector<std::string> out;
  for (const auto& c : bundled_lexicon().categories()) {
    for (const auto& e : c.entries) out.push_back(e.canonical);
  }
  return out;
}

std::string random_sentence(std::mt19937& rng, const std::vector<std::string>& terms) {
  std::string s;
  const int n = 1 + static_cast<int>(rng() % 14);
  for (int i = 0; i < n; ++i) {
    const std::string& w = rng() % 3 == 0 ? terms[rng() % terms.size()] : kFillers[rng() % kFillers.size()];
    s += (i ? " " : "") + w;
    if (rng() % 7 == 0) s += ",";
  }
  return s;
}

std::string random_case(std::mt19937& rng, std::string s) {
  for (char& c : s) {
    if (rng() % 2) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

TEST(MatchLexiconProperty, CaseInvariant) {
  std::mt19937 rng(21);
  const auto terms = all_terms();
  for (int iter = 0; iter < 500; ++iter) {
    const std::string s = random_sentence(rng, terms);
    const std::vector<Sentence> a = {{0, s, 0, s.size()}};
    const std::string up = random_case(rng, s);
    const std::vector<Sentence> b = {{0, up, 0, up.size()}};
    const auto ma = match_lexicon(a, bundled_lexicon());
    const auto mb = match_lexicon(b, bundled_lexicon());
    ASSERT_EQ(ma.size(), mb.size()) << s << " | " << up;
    for (std::size_t i = 0; i < ma.size(); ++i) {
      EXPECT_EQ(ma[i].term, mb[i].term);
      EXPECT_EQ(ma[i].category, mb[i].category);
      EXPECT_EQ(ma[i].token_begin, mb[i].token_begin);
    }
  }
}

TEST(MatchLexiconProperty, SpansPairwiseDisjoint) {
  std::mt19937 rng(22);
  const auto terms = all_terms();
  for (int iter = 0; iter < 500; ++iter) {
    const std::string s = random_sentence(rng, terms);
    const auto m = match_lexicon({{0, s, 0, s.size()}}, bundled_lexicon());
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_LT(m[i].token_begin, m[i].token_end);
      if (i > 0) EXPECT_LE(m[i - 1].token_end, m[i].token_begin) << s;
    }
  }
}

// Property: removing a single-token entry never increases nepl_count.
TEST(MatchLexiconProperty, RemovingSingleTokenEntryNeverIncreasesCount) {
  std::mt19937 rng(23);
  const auto terms = all_terms();
  const Lexicon& full = bundled_lexicon();
  for (int iter = 0; iter < 300; ++iter) {
    const auto& cats = full.categories();
    const auto& cat = cats[rng() % cats.size()];
    const auto& entry = cat.entries[rng() % cat.entries.size()];
    if (entry.tokens.size() != 1) continue;
    const Lexicon smaller = full.without(cat.name, entry.canonical);
    EXPECT_EQ(smaller.entry_count() + 1, full.entry_count());
    std::vector<Sentence> ss;
    for (std::size_t i = 0; i < 4; ++i) {
      std::string s = random_sentence(rng, terms);
      if (rng() % 2) s += " " + entry.canonical;
      ss.push_back({i, s, 0, s.size()});
    }
    EXPECT_LE(category_presence(match_lexicon(ss, smaller), smaller).nepl_count,
              category_presence(match_lexicon(ss, full), full).nepl_count);
  }
}

// Longest-match occurrence counting is not monotone for phrases built from
// other entries: without "killer beast" the text holds two shorter matches.
TEST(MatchLexicon, PhraseRemovalCanExposeTwoMatches) {
  const auto ss = sents("The killer beast returned.");
  const Lexicon& full = bundled_lexicon();
  const Lexicon smaller = full.without("Metaphorical/Anthropomorphic Labels", "killer beast");
  EXPECT_EQ(category_presence(match_lexicon(ss, full), full).nepl_count, 1u);
  EXPECT_EQ(category_presence(match_lexicon(ss, smaller), smaller).nepl_count, 2u);
}

TEST(DetectVictims, Examples) {
  EXPECT_TRUE(detect_victims(sents("Two people were killed.")).victim_flag);
  const auto none = detect_victims(sents("No casualties were reported."));
  EXPECT_FALSE(none.victim_flag);
  ASSERT_EQ(none.negated_terms.size(), 1u);
  EXPECT_EQ(none.negated_terms[0].term, "casualties");
  EXPECT_FALSE(detect_victims(sents("The herd crossed the road.")).victim_flag);
}

TEST(DetectVictims, MultiWordTermsAndNegators) {
  EXPECT_TRUE(detect_victims(sents("A man was trampled to death.")).victim_flag);
  EXPECT_FALSE(detect_victims(sents("None of them lost lives.")).victim_flag);
  // "none of" must lie entirely inside the window.
  EXPECT_TRUE(detect_victims(sents("None of the workers lost lives.")).victim_flag);
  // Negator four tokens back is outside the window.
  EXPECT_TRUE(detect_victims(sents("Not a single reason: people killed.")).victim_flag);
  // Negation does not cross sentence boundaries.
  EXPECT_TRUE(detect_victims(sents("There was no warning. Two killed.")).victim_flag);
}

// Property: prefixing "No " negates the victim term exactly when the term
// starts within the first kNegationWindow - 1 tokens.
TEST(DetectVictimsProperty, NoPrefix) {
  std::mt19937 rng(24);
  std::vector<std::string> victims;
  for (const auto& e : bundled_victim_terms().categories()[0].entries) victims.push_back(e.canonical);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t pos = rng() % 6;
    std::string s;
    for (std::size_t i = 0; i < pos; ++i) s += kFillers[rng() % kFillers.size()] + " ";
    s += victims[rng() % victims.size()] + " reported";
    const auto plain = detect_victims({{0, s, 0, s.size()}});
    const std::string prefixed = "No " + s;
    const auto neg = detect_victims({{0, prefixed, 0, prefixed.size()}});
    ASSERT_TRUE(plain.victim_flag) << s;
    EXPECT_EQ(neg.matched_terms, plain.matched_terms);
    EXPECT_EQ(neg.victim_flag, pos + 1 > kNegationWindow) << prefixed;
  }
}

TEST(Bundled, DataFilesMatchRepository) {
  const auto eq_file = [](const char* name, std::string_view bundled) {
    std::ifstream in(std::string(FL_DATA_DIR) + "/" + name, std::ios::binary);
    std::string s((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(s, bundled) << name;
  };
  eq_file("nepl.yaml", bundled::nepl_yaml());
  eq_file("victim_terms.yaml", bundled::victim_terms_yaml());
  eq_file("negators.yaml", bundled::negators_yaml());
}
