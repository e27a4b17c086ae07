#include "framelens/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "framelens/bundled.hpp"
#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {
namespace {

std::string where(std::string_view source, const YAML::Mark& mark) {
  std::string s(source);
  if (mark.line >= 0) s += ":" + std::to_string(mark.line + 1);
  return s;
}

std::string read_file(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + std::string(what) + ": " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> nepl_names() {
  return {kNeplCategories.begin(), kNeplCategories.end()};
}

}  // namespace

Lexicon Lexicon::parse(std::string_view yaml, std::string_view source,
                       std::optional<std::vector<std::string>> allowed) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw LoadError(where(source, e.mark) + ": " + e.msg);
  }
  if (!root || root.IsNull()) throw LoadError(std::string(source) + ": lexicon file is empty");
  if (!root.IsMap()) throw LoadError(where(source, root.Mark()) + ": expected category mapping");

  Lexicon lex;
  for (const auto& kv : root) {
    const std::string name = kv.first.as<std::string>();
    if (allowed && std::find(allowed->begin(), allowed->end(), name) == allowed->end()) {
      throw LoadError(where(source, kv.first.Mark()) + ": unknown category '" + name + "'");
    }
    for (const auto& existing : lex.categories_) {
      if (existing.name == name) {
        throw LoadError(where(source, kv.first.Mark()) + ": category '" + name +
                        "' listed twice");
      }
    }
    if (!kv.second.IsSequence()) {
      throw LoadError(where(source, kv.second.Mark()) + ": category '" + name +
                      "' must map to a list of terms");
    }
    LexiconCategory cat{name, {}};
    std::set<std::string> seen;
    for (const auto& item : kv.second) {
      if (!item.IsScalar()) {
        throw LoadError(where(source, item.Mark()) + ": term must be a string");
      }
      const std::string raw = item.as<std::string>();
      LexiconEntry entry;
      entry.tokens = text::normalized_tokens(raw);
      entry.canonical = text::join(entry.tokens, " ");
      if (entry.tokens.empty()) {
        throw LoadError(where(source, item.Mark()) + ": empty entry in '" + name + "'");
      }
      if (!seen.insert(entry.canonical).second) {
        throw LoadError(where(source, item.Mark()) + ": duplicate entry '" + entry.canonical +
                        "' in '" + name + "'");
      }
      cat.entries.push_back(std::move(entry));
    }
    lex.categories_.push_back(std::move(cat));
  }
  if (lex.entry_count() == 0) throw LoadError(std::string(source) + ": lexicon has no entries");
  lex.index();
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path,
                      std::optional<std::vector<std::string>> allowed) {
  return parse(read_file(path, "lexicon file"), path.string(), std::move(allowed));
}

void Lexicon::index() {
  by_first_.clear();
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    for (std::size_t e = 0; e < categories_[c].entries.size(); ++e) {
      by_first_[categories_[c].entries[e].tokens.front()].push_back({c, e});
    }
  }
  for (auto& [first, cands] : by_first_) {
    std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
      return categories_[a.category].entries[a.entry].tokens.size() >
             categories_[b.category].entries[b.entry].tokens.size();
    });
  }
}

std::size_t Lexicon::entry_count() const {
  std::size_t n = 0;
  for (const auto& c : categories_) n += c.entries.size();
  return n;
}

bool Lexicon::contains(std::string_view category, std::string_view term) const {
  const std::string canonical = text::join(text::normalized_tokens(term), " ");
  for (const auto& c : categories_) {
    if (c.name != category) continue;
    for (const auto& e : c.entries) {
      if (e.canonical == canonical) return true;
    }
  }
  return false;
}

std::size_t Lexicon::longest_at(const std::vector<std::string>& tokens, std::size_t pos,
                                std::string* canonical,
                                std::vector<std::size_t>* category_ids) const {
  auto it = by_first_.find(tokens[pos]);
  if (it == by_first_.end()) return 0;
  std::size_t best = 0;
  const LexiconEntry* best_entry = nullptr;
  for (const auto& cand : it->second) {
    const auto& entry = categories_[cand.category].entries[cand.entry];
    const std::size_t len = entry.tokens.size();
    if (best_entry != nullptr && len < best) break;
    if (pos + len > tokens.size()) continue;
    if (!std::equal(entry.tokens.begin(), entry.tokens.end(), tokens.begin() + pos)) continue;
    if (best_entry == nullptr) {
      best = len;
      best_entry = &entry;
      if (canonical) *canonical = entry.canonical;
      if (category_ids) category_ids->clear();
    } else if (entry.canonical != best_entry->canonical) {
      continue;
    }
    if (category_ids && std::find(category_ids->begin(), category_ids->end(), cand.category) ==
                            category_ids->end()) {
      category_ids->push_back(cand.category);
    }
  }
  if (category_ids) std::sort(category_ids->begin(), category_ids->end());
  return best;
}

Lexicon Lexicon::without(std::string_view category, std::string_view term) const {
  const std::string canonical = text::join(text::normalized_tokens(term), " ");
  Lexicon copy = *this;
  for (auto& c : copy.categories_) {
    if (c.name != category) continue;
    std::erase_if(c.entries, [&](const LexiconEntry& e) { return e.canonical == canonical; });
  }
  copy.index();
  return copy;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return Lexicon::load(path, nepl_names());
}

const Lexicon& bundled_lexicon() {
  static const Lexicon lex = Lexicon::parse(bundled::nepl_yaml(), "nepl.yaml", nepl_names());
  return lex;
}

Lexicon load_term_list(const std::filesystem::path& path, std::string_view category) {
  return Lexicon::load(path, std::vector<std::string>{std::string(category)});
}

const Lexicon& bundled_victim_terms() {
  static const Lexicon lex = Lexicon::parse(bundled::victim_terms_yaml(), "victim_terms.yaml",
                                            std::vector<std::string>{"Victim"});
  return lex;
}

const Lexicon& bundled_negators() {
  static const Lexicon lex = Lexicon::parse(bundled::negators_yaml(), "negators.yaml",
                                            std::vector<std::string>{"Negation"});
  return lex;
}

std::vector<LexiconMatch> match_lexicon(const std::vector<Sentence>& sentences,
                                        const Lexicon& lexicon) {
  std::vector<LexiconMatch> out;
  std::string canonical;
  std::vector<std::size_t> cats;
  for (const auto& s : sentences) {
    const auto tokens = text::normalized_tokens(s.text);
    std::size_t i = 0;
    while (i < tokens.size()) {
      const std::size_t len = lexicon.longest_at(tokens, i, &canonical, &cats);
      if (len == 0) {
        ++i;
        continue;
      }
      LexiconMatch m;
      m.term = canonical;
      m.category = lexicon.categories()[cats.front()].name;
      for (std::size_t k = 1; k < cats.size(); ++k) {
        m.also_categories.push_back(lexicon.categories()[cats[k]].name);
      }
      m.sentence_index = s.index;
      m.token_begin = i;
      m.token_end = i + len;
      out.push_back(std::move(m));
      i += len;
    }
  }
  return out;
}

bool CategoryPresence::has(std::string_view category) const {
  for (const auto& [name, flag] : present) {
    if (name == category) return flag;
  }
  return false;
}

std::size_t CategoryPresence::categories_present() const {
  return static_cast<std::size_t>(
      std::count_if(present.begin(), present.end(), [](const auto& p) { return p.second; }));
}

CategoryPresence category_presence(const std::vector<LexiconMatch>& matches,
                                   const Lexicon& lexicon) {
  CategoryPresence out;
  for (const auto& c : lexicon.categories()) out.present.emplace_back(c.name, false);
  auto flag = [&](const std::string& name) {
    for (auto& p : out.present) {
      if (p.first == name) p.second = true;
    }
  };
  for (const auto& m : matches) {
    flag(m.category);
    for (const auto& extra : m.also_categories) flag(extra);
  }
  out.nepl_count = matches.size();
  return out;
}

VictimReport detect_victims(const std::vector<Sentence>& sentences, const Lexicon& victim_terms,
                            const Lexicon& negators) {
  VictimReport report;
  for (const auto& s : sentences) {
    const auto tokens = text::normalized_tokens(s.text);
    // Token positions covered by a negation cue, by cue start and end.
    std::vector<std::pair<std::size_t, std::size_t>> cues;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::size_t len = negators.longest_at(tokens, i, nullptr, nullptr);
      if (len > 0) cues.emplace_back(i, i + len);
    }
    std::string canonical;
    std::size_t i = 0;
    while (i < tokens.size()) {
      const std::size_t len = victim_terms.longest_at(tokens, i, &canonical, nullptr);
      if (len == 0) {
        ++i;
        continue;
      }
      const std::size_t window_begin = i >= kNegationWindow ? i - kNegationWindow : 0;
      const bool negated = std::any_of(cues.begin(), cues.end(), [&](const auto& cue) {
        return cue.first >= window_begin && cue.second <= i;
      });
      report.matched_terms.push_back({canonical, s.index});
      if (negated) report.negated_terms.push_back({canonical, s.index});
      else report.victim_flag = true;
      i += len;
    }
  }
  return report;
}

}  // namespace framelens
