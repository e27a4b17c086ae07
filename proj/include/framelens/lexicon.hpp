#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framelens/corpus.hpp"

namespace framelens {

inline constexpr std::array<std::string_view, 6> kNeplCategories = {
    "Aggression and Violence",
    "Intrusion and Invasion",
    "Destruction and Damage",
    "Fear and Panic",
    "Metaphorical/Anthropomorphic Labels",
    "Conflict and Hostility",
};

struct LexiconEntry {
  std::string canonical;            // lowercase, single-spaced
  std::vector<std::string> tokens;  // canonical split on whitespace
};

struct LexiconCategory {
  std::string name;
  std::vector<LexiconEntry> entries;
};

struct LexiconMatch {
  std::string term;
  // First category (in file order) that lists the term.
  std::string category;
  // Further categories listing the same surface form, e.g. "menace".
  std::vector<std::string> also_categories;
  std::size_t sentence_index = 0;
  // Token offsets [token_begin, token_end) within the sentence's normalized tokens.
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
};

// Immutable categorized phrase inventory with longest-match lookup.
class Lexicon {
 public:
  // Parses the YAML mapping `category: [terms...]`. When `allowed` is given,
  // any other category name is rejected. Errors name `source` and the line.
  static Lexicon parse(std::string_view yaml, std::string_view source,
                       std::optional<std::vector<std::string>> allowed = std::nullopt);
  static Lexicon load(const std::filesystem::path& path,
                      std::optional<std::vector<std::string>> allowed = std::nullopt);

  const std::vector<LexiconCategory>& categories() const { return categories_; }
  std::size_t entry_count() const;
  bool contains(std::string_view category, std::string_view term) const;

  // Longest entry starting at `pos`; returns the number of tokens consumed
  // (0 when nothing matches) and the categories listing that entry.
  std::size_t longest_at(const std::vector<std::string>& tokens, std::size_t pos,
                         std::string* canonical, std::vector<std::size_t>* category_ids) const;

  // Copy without one entry; used by monotonicity checks.
  Lexicon without(std::string_view category, std::string_view term) const;

 private:
  void index();

  struct Candidate {
    std::size_t category;
    std::size_t entry;
  };
  std::vector<LexiconCategory> categories_;
  // First token -> candidates, longest token sequence first.
  std::unordered_map<std::string, std::vector<Candidate>> by_first_;
};

// The six-category NEPL; unknown categories are rejected.
Lexicon load_lexicon(const std::filesystem::path& path);
const Lexicon& bundled_lexicon();

// A single-category term file (victim terms, negation cues).
Lexicon load_term_list(const std::filesystem::path& path, std::string_view category);
const Lexicon& bundled_victim_terms();
const Lexicon& bundled_negators();

// Case-insensitive longest-match search over each sentence's normalized tokens.
std::vector<LexiconMatch> match_lexicon(const std::vector<Sentence>& sentences,
                                        const Lexicon& lexicon);

struct CategoryPresence {
  // One flag per lexicon category, in lexicon order.
  std::vector<std::pair<std::string, bool>> present;
  // Number of match occurrences.
  std::size_t nepl_count = 0;

  bool has(std::string_view category) const;
  std::size_t categories_present() const;
};

CategoryPresence category_presence(const std::vector<LexiconMatch>& matches,
                                   const Lexicon& lexicon = bundled_lexicon());

struct TermHit {
  std::string term;
  std::size_t sentence_index = 0;

  bool operator==(const TermHit&) const = default;
};

struct VictimReport {
  bool victim_flag = false;
  std::vector<TermHit> matched_terms;
  std::vector<TermHit> negated_terms;
};

inline constexpr std::size_t kNegationWindow = 3;

// A victim term is negated when a negation cue lies entirely within the
// kNegationWindow tokens before it in the same sentence.
VictimReport detect_victims(const std::vector<Sentence>& sentences,
                            const Lexicon& victim_terms = bundled_victim_terms(),
                            const Lexicon& negators = bundled_negators());

}  // namespace framelens
