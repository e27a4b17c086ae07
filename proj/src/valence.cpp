// Lexicon-and-rules compound polarity scorer. The modifier constants and rule
// order follow the reference VADER scorer so scores agree with it
// token-for-token.
#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "framelens/bundled.hpp"
#include "framelens/error.hpp"
#include "framelens/sentiment.hpp"
#include "framelens/text.hpp"

namespace framelens {
namespace {

constexpr double kBoostIncr = 0.293;
constexpr double kBoostDecr = -0.293;
constexpr double kCapsIncr = 0.733;
constexpr double kNegationScalar = -0.74;
constexpr double kExclamationStep = 0.292;
constexpr int kExclamationCap = 4;
constexpr double kQuestionStep = 0.18;
constexpr double kQuestionCap = 0.96;

const std::unordered_set<std::string>& negate_words() {
  static const std::unordered_set<std::string> words = {
      "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
      "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
      "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
      "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
      "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing", "nowhere",
      "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
      "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
      "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite"};
  return words;
}

const std::unordered_map<std::string, double>& boosters() {
  static const std::unordered_map<std::string, double> b = {
      {"absolutely", kBoostIncr}, {"amazingly", kBoostIncr}, {"awfully", kBoostIncr},
      {"completely", kBoostIncr}, {"considerable", kBoostIncr}, {"considerably", kBoostIncr},
      {"decidedly", kBoostIncr}, {"deeply", kBoostIncr}, {"effing", kBoostIncr},
      {"enormous", kBoostIncr}, {"enormously", kBoostIncr}, {"entirely", kBoostIncr},
      {"especially", kBoostIncr}, {"exceptional", kBoostIncr}, {"exceptionally", kBoostIncr},
      {"extreme", kBoostIncr}, {"extremely", kBoostIncr}, {"fabulously", kBoostIncr},
      {"flipping", kBoostIncr}, {"flippin", kBoostIncr}, {"frackin", kBoostIncr},
      {"fracking", kBoostIncr}, {"fricking", kBoostIncr}, {"frickin", kBoostIncr},
      {"frigging", kBoostIncr}, {"friggin", kBoostIncr}, {"fully", kBoostIncr},
      {"fuckin", kBoostIncr}, {"fucking", kBoostIncr}, {"fuggin", kBoostIncr},
      {"fugging", kBoostIncr}, {"greatly", kBoostIncr}, {"hella", kBoostIncr},
      {"highly", kBoostIncr}, {"hugely", kBoostIncr}, {"incredible", kBoostIncr},
      {"incredibly", kBoostIncr}, {"intensely", kBoostIncr}, {"major", kBoostIncr},
      {"majorly", kBoostIncr}, {"more", kBoostIncr}, {"most", kBoostIncr},
      {"particularly", kBoostIncr}, {"purely", kBoostIncr}, {"quite", kBoostIncr},
      {"really", kBoostIncr}, {"remarkably", kBoostIncr}, {"so", kBoostIncr},
      {"substantially", kBoostIncr}, {"thoroughly", kBoostIncr}, {"total", kBoostIncr},
      {"totally", kBoostIncr}, {"tremendous", kBoostIncr}, {"tremendously", kBoostIncr},
      {"uber", kBoostIncr}, {"unbelievably", kBoostIncr}, {"unusually", kBoostIncr},
      {"utter", kBoostIncr}, {"utterly", kBoostIncr}, {"very", kBoostIncr},
      {"almost", kBoostDecr}, {"barely", kBoostDecr}, {"hardly", kBoostDecr},
      {"just enough", kBoostDecr}, {"kind of", kBoostDecr}, {"kinda", kBoostDecr},
      {"kindof", kBoostDecr}, {"kind-of", kBoostDecr}, {"less", kBoostDecr},
      {"little", kBoostDecr}, {"marginal", kBoostDecr}, {"marginally", kBoostDecr},
      {"occasional", kBoostDecr}, {"occasionally", kBoostDecr}, {"partly", kBoostDecr},
      {"scarce", kBoostDecr}, {"scarcely", kBoostDecr}, {"slight", kBoostDecr},
      {"slightly", kBoostDecr}, {"somewhat", kBoostDecr}, {"sort of", kBoostDecr},
      {"sorta", kBoostDecr}, {"sortof", kBoostDecr}, {"sort-of", kBoostDecr}};
  return b;
}

// Phrase -> replacement valence.
const std::unordered_map<std::string, double>& special_cases() {
  static const std::unordered_map<std::string, double> s = {
      {"the shit", 3.0},      {"the bomb", 3.0},       {"bad ass", 1.5},
      {"badass", 1.5},        {"bus stop", 0.0},       {"yeah right", -2.0},
      {"kiss of death", -1.5}, {"to die for", 3.0},    {"beating heart", 3.5}};
  return s;
}

bool is_ascii_punct(char c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}

std::size_t codepoints(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// Strips ASCII punctuation from both ends unless that leaves two or fewer
// characters (emoticons such as ":)" survive intact).
std::string strip_punct_if_word(std::string_view token) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && is_ascii_punct(token[b])) ++b;
  while (e > b && is_ascii_punct(token[e - 1])) --e;
  std::string_view stripped = token.substr(b, e - b);
  if (codepoints(stripped) <= 2) return std::string(token);
  return std::string(stripped);
}

bool negated(const std::string& lower_word) {
  return negate_words().count(lower_word) > 0 || lower_word.find("n't") != std::string::npos;
}

class Scorer {
 public:
  Scorer(std::string_view text, const ValenceLexicon& lex) : lex_(lex) {
    for (const auto& t : text::split_whitespace(text)) {
      words_.push_back(strip_punct_if_word(t.text));
      lower_.push_back(text::to_lower(words_.back()));
    }
    std::size_t caps = 0;
    for (const auto& w : words_) caps += text::is_upper(w) ? 1 : 0;
    const std::size_t diff = words_.size() - caps;
    cap_diff_ = diff > 0 && diff < words_.size();
  }

  std::vector<double> sentiments() const {
    std::vector<double> s;
    s.reserve(words_.size());
    const auto& boost = boosters();
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (boost.count(lower_[i])) {
        s.push_back(0.0);
        continue;
      }
      if (i + 1 < words_.size() && lower_[i] == "kind" && lower_[i + 1] == "of") {
        s.push_back(0.0);
        continue;
      }
      s.push_back(valence_at(i));
    }
    but_check(s);
    return s;
  }

 private:
  double scalar_inc_dec(std::size_t j, double valence) const {
    double scalar = 0.0;
    auto it = boosters().find(lower_[j]);
    if (it != boosters().end()) {
      scalar = it->second;
      if (valence < 0) scalar *= -1;
      if (text::is_upper(words_[j]) && cap_diff_) {
        if (valence > 0) scalar += kCapsIncr;
        else scalar -= kCapsIncr;
      }
    }
    return scalar;
  }

  double valence_at(std::size_t i) const {
    const auto base = lex_.find(lower_[i]);
    if (!base) return 0.0;
    const std::size_t n = words_.size();
    double valence = *base;
    if (lower_[i] == "no" && i != n - 1 && lex_.contains(lower_[i + 1])) valence = 0.0;
    if ((i > 0 && lower_[i - 1] == "no") || (i > 1 && lower_[i - 2] == "no") ||
        (i > 2 && lower_[i - 3] == "no" && (lower_[i - 1] == "or" || lower_[i - 1] == "nor"))) {
      valence = *base * kNegationScalar;
    }
    if (text::is_upper(words_[i]) && cap_diff_) {
      if (valence > 0) valence += kCapsIncr;
      else valence -= kCapsIncr;
    }
    for (std::size_t start = 0; start < 3; ++start) {
      if (i > start && !lex_.contains(lower_[i - (start + 1)])) {
        double s = scalar_inc_dec(i - (start + 1), valence);
        if (start == 1 && s != 0) s = s * 0.95;
        if (start == 2 && s != 0) s = s * 0.9;
        valence = valence + s;
        valence = negation_check(valence, start, i);
        if (start == 2) valence = special_idioms_check(valence, i);
      }
    }
    return least_check(valence, i);
  }

  double negation_check(double valence, std::size_t start, std::size_t i) const {
    const auto& w = lower_;
    if (start == 0) {
      if (negated(w[i - 1])) valence = valence * kNegationScalar;
    } else if (start == 1) {
      if (w[i - 2] == "never" && (w[i - 1] == "so" || w[i - 1] == "this")) {
        valence = valence * 1.25;
      } else if (w[i - 2] == "without" && w[i - 1] == "doubt") {
        // unchanged
      } else if (negated(w[i - 2])) {
        valence = valence * kNegationScalar;
      }
    } else {
      if ((w[i - 3] == "never" && (w[i - 2] == "so" || w[i - 2] == "this")) ||
          (w[i - 1] == "so" || w[i - 1] == "this")) {
        valence = valence * 1.25;
      } else if (w[i - 3] == "without" && (w[i - 2] == "doubt" || w[i - 1] == "doubt")) {
        // unchanged
      } else if (negated(w[i - 3])) {
        valence = valence * kNegationScalar;
      }
    }
    return valence;
  }

  double special_idioms_check(double valence, std::size_t i) const {
    const auto& w = lower_;
    const auto& special = special_cases();
    const std::array<std::string, 5> sequences = {
        w[i - 1] + " " + w[i], w[i - 2] + " " + w[i - 1] + " " + w[i], w[i - 2] + " " + w[i - 1],
        w[i - 3] + " " + w[i - 2] + " " + w[i - 1], w[i - 3] + " " + w[i - 2]};
    for (const auto& seq : sequences) {
      if (auto it = special.find(seq); it != special.end()) {
        valence = it->second;
        break;
      }
    }
    if (w.size() - 1 > i) {
      if (auto it = special.find(w[i] + " " + w[i + 1]); it != special.end()) valence = it->second;
    }
    if (w.size() - 1 > i + 1) {
      if (auto it = special.find(w[i] + " " + w[i + 1] + " " + w[i + 2]); it != special.end())
        valence = it->second;
    }
    for (const auto& ngram : {sequences[3], sequences[4], sequences[2]}) {
      if (auto it = boosters().find(ngram); it != boosters().end()) valence = valence + it->second;
    }
    return valence;
  }

  double least_check(double valence, std::size_t i) const {
    const auto& w = lower_;
    if (i > 1 && !lex_.contains(w[i - 1]) && w[i - 1] == "least") {
      if (w[i - 2] != "at" && w[i - 2] != "very") valence = valence * kNegationScalar;
    } else if (i > 0 && !lex_.contains(w[i - 1]) && w[i - 1] == "least") {
      valence = valence * kNegationScalar;
    }
    return valence;
  }

  // Down-weights sentiment before the first "but" and up-weights sentiment
  // after it. Each update lands on the first slot holding the visited value,
  // which reproduces the reference scorer on repeated values.
  void but_check(std::vector<double>& s) const {
    auto it = std::find(lower_.begin(), lower_.end(), "but");
    if (it == lower_.end()) return;
    const auto bi = static_cast<std::size_t>(it - lower_.begin());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double v = s[k];
      const auto si = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
      if (si < bi) s[si] = v * 0.5;
      else if (si > bi) s[si] = v * 1.5;
    }
  }

  const ValenceLexicon& lex_;
  std::vector<std::string> words_;
  std::vector<std::string> lower_;
  bool cap_diff_ = false;
};

double punctuation_emphasis(std::string_view text) {
  const auto ep = std::min<long>(std::count(text.begin(), text.end(), '!'), kExclamationCap);
  const auto qm = std::count(text.begin(), text.end(), '?');
  double qm_amp = 0.0;
  if (qm > 1) qm_amp = qm <= 3 ? static_cast<double>(qm) * kQuestionStep : kQuestionCap;
  return static_cast<double>(ep) * kExclamationStep + qm_amp;
}

}  // namespace

double normalize_valence(double raw, double alpha) {
  const double norm = raw / std::sqrt(raw * raw + alpha);
  return std::clamp(norm, -1.0, 1.0);
}

ValenceLexicon ValenceLexicon::parse(std::string_view tsv, std::string_view source) {
  ValenceLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    std::size_t nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    auto fail = [&](const std::string& why) {
      return LoadError(std::string(source) + ":" + std::to_string(line_no) + ": " + why);
    };
    if (tab == std::string_view::npos || tab == 0) throw fail("expected token<TAB>valence");
    const std::string token(line.substr(0, tab));
    std::string_view rest = line.substr(tab + 1);
    rest = rest.substr(0, rest.find('\t'));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw fail("unparseable valence '" + std::string(rest) + "'");
    }
    if (!(v >= -4.0 && v <= 4.0)) throw fail("valence out of [-4, 4]");
    lex.valence_[token] = v;
  }
  return lex;
}

ValenceLexicon ValenceLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("valence lexicon not found: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

const ValenceLexicon& ValenceLexicon::bundled() {
  static const ValenceLexicon lex = parse(bundled::vader_lexicon_tsv(), "vader_lexicon.tsv");
  return lex;
}

double compound_score(std::string_view text, const ValenceLexicon& lexicon) {
  if (lexicon.empty()) throw ConfigError("compound_score: valence lexicon is empty");
  text = text::trim(text);
  const Scorer scorer(text, lexicon);
  const auto sentiments = scorer.sentiments();
  if (sentiments.empty()) return 0.0;
  double sum = 0.0;
  for (double s : sentiments) sum += s;
  const double emphasis = punctuation_emphasis(text);
  if (sum > 0) sum += emphasis;
  else if (sum < 0) sum -= emphasis;
  return normalize_valence(sum);
}

}  // namespace framelens
