#include "framelens/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {

void validate(const GoldAnnotation& g) {
  if (g.intensity < 1 || g.intensity > 10) {
    throw ValidationError("intensity must be in [1, 10], got " + std::to_string(g.intensity));
  }
  if (g.human_deaths < 0 || g.elephant_deaths < 0) {
    throw ValidationError("death counts must be non-negative");
  }
  if (!g.deaths_mentioned && (g.human_deaths != 0 || g.elephant_deaths != 0)) {
    throw ValidationError("death counts given but deaths_mentioned is false");
  }
}

GoldAnnotation gold_from_json(const nlohmann::json& r) {
  GoldAnnotation g;
  g.article_id = string_field(r, "article_id");
  if (g.article_id.empty()) throw ValidationError("missing article_id");
  if (!r.contains("label") || !r["label"].is_number_integer()) {
    throw ValidationError("label must be -1, 0 or 1");
  }
  g.label = label_from_int(r["label"].get<long long>());
  g.intensity = r.value("intensity", 0);
  g.nepl_terms = r.value("nepl_terms", std::vector<std::string>{});
  g.justification_sentences = r.value("justification_sentences", std::vector<std::string>{});
  g.deaths_mentioned = r.value("deaths_mentioned", false);
  g.human_deaths = r.value("human_deaths", 0);
  g.elephant_deaths = r.value("elephant_deaths", 0);
  g.annotator_id = string_field(r, "annotator_id");
  if (g.annotator_id.empty()) g.annotator_id = kFinalAnnotator;
  validate(g);
  return g;
}

std::vector<GoldAnnotation> load_annotations(const std::filesystem::path& path,
                                             const std::string& annotator) {
  std::vector<GoldAnnotation> out;
  std::set<std::pair<std::string, std::string>> seen;
  read_jsonl(
      path,
      [&](std::size_t line_no, const nlohmann::json& record) {
        GoldAnnotation g;
        try {
          g = gold_from_json(record);
        } catch (const std::exception& e) {
          throw LoadError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!seen.emplace(g.article_id, g.annotator_id).second) {
          throw LoadError(path.string() + ":" + std::to_string(line_no) +
                          ": duplicate annotation for article '" + g.article_id +
                          "' by annotator '" + g.annotator_id + "'");
        }
        if (g.annotator_id == annotator) out.push_back(std::move(g));
      },
      [&](std::size_t line_no, const std::string&, const std::string& why) {
        throw LoadError(path.string() + ":" + std::to_string(line_no) + ": " + why);
      });
  return out;
}

namespace {

// article id -> the prediction for it, restricted to gold articles.
std::unordered_map<std::string, const ModelPrediction*> index_for_gold(
    const std::vector<GoldAnnotation>& gold, const std::vector<ModelPrediction>& predictions) {
  std::unordered_map<std::string, const ModelPrediction*> by_article;
  std::set<std::string> wanted;
  for (const auto& g : gold) wanted.insert(g.article_id);
  for (const auto& p : predictions) {
    if (!wanted.count(p.article_id)) continue;
    if (!by_article.emplace(p.article_id, &p).second) {
      throw ValidationError("more than one prediction for article '" + p.article_id + "'");
    }
  }
  std::string missing;
  std::size_t count = 0;
  for (const auto& id : wanted) {
    if (by_article.count(id)) continue;
    ++count;
    missing += (missing.empty() ? "" : ", ") + id;
  }
  if (count > 0) {
    throw CoverageError(std::to_string(count) + " gold article(s) without a prediction: " + missing);
  }
  return by_article;
}

}  // namespace

ConfusionMatrix confusion_matrix(const std::vector<GoldAnnotation>& gold,
                                 const std::vector<ModelPrediction>& predictions) {
  if (gold.empty()) throw ValidationError("confusion_matrix: no gold annotations");
  const auto by_article = index_for_gold(gold, predictions);
  ConfusionMatrix m{};
  for (const auto& g : gold) {
    ++m[label_index(g.label)][label_index(by_article.at(g.article_id)->label)];
  }
  return m;
}

ClassMetrics class_metrics(const ConfusionMatrix& m) {
  std::size_t total = 0;
  std::size_t trace = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    trace += m[r][r];
    for (std::size_t c = 0; c < 3; ++c) total += m[r][c];
  }
  if (total == 0) throw ValidationError("class_metrics: all-zero confusion matrix");
  ClassMetrics out;
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      row += m[k][j];
      col += m[j][k];
    }
    auto& s = out.per_class[k];
    s.support = row;
    s.precision = col > 0 ? static_cast<double>(m[k][k]) / static_cast<double>(col) : 0.0;
    s.recall = row > 0 ? static_cast<double>(m[k][k]) / static_cast<double>(row) : 0.0;
    s.f1 = s.precision + s.recall > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  }
  out.accuracy = static_cast<double>(trace) / static_cast<double>(total);
  return out;
}

double bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const std::size_t c = candidate.size();
  const std::size_t r = reference.size();
  const std::size_t max_n = std::min<std::size_t>(4, c);

  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= r; ++i) {
      ++ref_counts[std::vector<std::string>(reference.begin() + i, reference.begin() + i + n)];
    }
    std::map<std::vector<std::string>, std::size_t> cand_counts;
    for (std::size_t i = 0; i + n <= c; ++i) {
      ++cand_counts[std::vector<std::string>(candidate.begin() + i, candidate.begin() + i + n)];
    }
    std::size_t clipped = 0;
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) clipped += std::min(count, it->second);
    }
    const std::size_t total = c - n + 1;
    double p = static_cast<double>(clipped) / static_cast<double>(total);
    if (clipped == 0) {
      if (n == 1) return 0.0;
      p = 1.0 / (2.0 * static_cast<double>(total));
    }
    log_sum += std::log(p);
  }
  const double bp = c < r ? std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c)) : 1.0;
  return bp * std::exp(log_sum / static_cast<double>(max_n));
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const double l = static_cast<double>(lcs_length(candidate, reference));
  const double p = l / static_cast<double>(candidate.size());
  const double r = l / static_cast<double>(reference.size());
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

std::vector<std::string> in_document_order(const std::vector<std::string>& sentences,
                                           std::string_view full_text) {
  const std::string hay = text::normalize_whitespace(full_text);
  std::vector<std::pair<std::size_t, std::size_t>> keyed;  // (position, original index)
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string needle = text::normalize_whitespace(sentences[i]);
    const std::size_t pos = needle.empty() ? std::string::npos : hay.find(needle);
    keyed.emplace_back(pos, i);
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (const auto& [pos, i] : keyed) out.push_back(sentences[i]);
  return out;
}

OverlapScores rationale_overlap(const std::vector<GoldAnnotation>& gold,
                                const std::vector<ModelPrediction>& predictions,
                                const ArticleTexts& articles) {
  OverlapScores out;
  if (gold.empty()) return out;
  const auto by_article = index_for_gold(gold, predictions);
  auto tokens_of = [](const std::vector<std::string>& sentences) {
    std::vector<std::string> tokens;
    for (const auto& s : sentences) {
      auto t = text::normalized_tokens(s);
      tokens.insert(tokens.end(), t.begin(), t.end());
    }
    return tokens;
  };
  std::vector<const GoldAnnotation*> ordered;
  for (const auto& g : gold) ordered.push_back(&g);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->article_id < b->article_id; });
  for (const auto* g : ordered) {
    if (g->justification_sentences.empty()) {
      out.diagnostics.push_back({"annotations", 0,
                                 "article '" + g->article_id +
                                     "' has no justification sentences; excluded from overlap"});
      continue;
    }
    auto art = articles.find(g->article_id);
    const std::string_view full = art != articles.end() ? std::string_view(art->second) : std::string_view();
    const auto reference = tokens_of(in_document_order(g->justification_sentences, full));
    const auto candidate =
        tokens_of(in_document_order(by_article.at(g->article_id)->rationale_sentences, full));
    out.per_article.push_back({g->article_id, bleu(candidate, reference), rouge_l(candidate, reference)});
  }
  if (!out.per_article.empty()) {
    for (const auto& a : out.per_article) {
      out.bleu += a.bleu;
      out.rouge_l += a.rouge_l;
    }
    out.bleu /= static_cast<double>(out.per_article.size());
    out.rouge_l /= static_cast<double>(out.per_article.size());
  }
  return out;
}

}  // namespace framelens
