#include "framelens/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "framelens/error.hpp"
#include "framelens/text.hpp"

namespace framelens {

ArticleTexts article_texts(const std::vector<Article>& articles) {
  ArticleTexts out;
  for (const auto& a : articles) out.emplace(a.id, a.full_text);
  return out;
}

std::optional<SentimentLabel> harmonize_record_label(const nlohmann::json& record) {
  if (auto it = record.find("label"); it != record.end() && !it->is_null()) {
    if (it->is_number_integer()) return label_from_int(it->get<long long>());
    if (it->is_number_float()) {
      const double v = it->get<double>();
      if (v != std::floor(v)) throw ValidationError("label must be an integer");
      return label_from_int(static_cast<long long>(v));
    }
    if (it->is_string()) {
      const std::string s(text::trim(it->get<std::string>()));
      if (s == "-1" || s == "0" || s == "1" || s == "+1") return label_from_int(std::stoll(s));
      if (auto five = parse_five_class(s)) return map_five_to_three(*five);
      throw ValidationError("unrecognized label '" + s + "'");
    }
    throw ValidationError("label must be -1, 0 or 1");
  }
  if (auto it = record.find("label_5class"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError("label_5class must be a string");
    auto five = parse_five_class(it->get<std::string>());
    if (!five) throw ValidationError("unrecognized five-class label '" + it->get<std::string>() + "'");
    return map_five_to_three(*five);
  }
  if (auto it = record.find("probabilities"); it != record.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 3) {
      throw ValidationError("probabilities must be [negative, neutral, positive]");
    }
    std::array<double, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(*it)[i].is_number()) throw ValidationError("probabilities must be numbers");
      p[i] = (*it)[i].get<double>();
    }
    return map_probabilities(p[0], p[1], p[2]);
  }
  return std::nullopt;
}

bool appears_verbatim(std::string_view sentence, std::string_view full_text) {
  const std::string needle = text::normalize_whitespace(sentence);
  if (needle.empty()) return false;
  return text::normalize_whitespace(full_text).find(needle) != std::string::npos;
}

namespace {

ModelPrediction parse_prediction(const nlohmann::json& record, SentimentLabel label) {
  ModelPrediction p;
  p.model_id = string_field(record, "model_id");
  p.article_id = string_field(record, "article_id");
  p.label = label;
  if (auto it = record.find("confidence"); it != record.end() && !it->is_null()) {
    if (!it->is_number()) throw ValidationError("confidence must be a number");
    const double c = it->get<double>();
    if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("confidence outside [0, 1]");
    p.confidence = c;
  }
  if (auto it = record.find("rationale_sentences"); it != record.end() && !it->is_null()) {
    if (!it->is_array()) throw ValidationError("rationale_sentences must be an array");
    for (const auto& s : *it) {
      if (!s.is_string()) throw ValidationError("rationale sentences must be strings");
      p.rationale_sentences.push_back(s.get<std::string>());
    }
  }
  if (auto it = record.find("reasoning"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError("reasoning must be a string");
    p.reasoning = it->get<std::string>();
  }
  p.raw = string_field(record, "raw");
  return p;
}

}  // namespace

PredictionLoad ingest_predictions(const std::vector<std::filesystem::path>& paths,
                                  const ArticleTexts& articles) {
  PredictionLoad out;
  // (model, article) -> "file:line" of the first occurrence.
  std::map<std::pair<std::string, std::string>, std::string> seen;
  for (const auto& path : paths) {
    const std::string source = path.string();
    read_jsonl(
        path,
        [&](std::size_t line_no, const nlohmann::json& record) {
          auto diag = [&](std::string msg) {
            out.diagnostics.push_back({source, line_no, std::move(msg)});
          };
          ModelPrediction p;
          try {
            const auto label = harmonize_record_label(record);
            if (!label) {
              diag("record has no label; skipped");
              return;
            }
            p = parse_prediction(record, *label);
          } catch (const ValidationError& e) {
            diag(std::string(e.what()) + "; skipped");
            return;
          } catch (const nlohmann::json::exception& e) {
            diag(std::string(e.what()) + "; skipped");
            return;
          }
          if (p.model_id.empty() || p.article_id.empty()) {
            diag("missing model_id or article_id; skipped");
            return;
          }
          auto art = articles.find(p.article_id);
          if (art == articles.end()) {
            diag("unknown article_id '" + p.article_id + "'; skipped");
            return;
          }
          const std::string here = source + ":" + std::to_string(line_no);
          auto [it, inserted] = seen.emplace(std::make_pair(p.model_id, p.article_id), here);
          if (!inserted) {
            throw ValidationError("duplicate prediction for model '" + p.model_id +
                                  "' and article '" + p.article_id + "' at " + it->second +
                                  " and " + here);
          }
          std::vector<std::string> kept;
          for (auto& s : p.rationale_sentences) {
            if (appears_verbatim(s, art->second)) {
              kept.push_back(std::move(s));
            } else {
              diag("rationale sentence not found in article '" + p.article_id + "'; dropped");
            }
          }
          p.rationale_sentences = std::move(kept);
          out.predictions.push_back(std::move(p));
        },
        [&](std::size_t line_no, const std::string&, const std::string& why) {
          out.diagnostics.push_back({source, line_no, why + "; skipped"});
        });
  }
  return out;
}

PredictionLoad ingest_predictions(const std::filesystem::path& path, const ArticleTexts& articles) {
  return ingest_predictions(std::vector<std::filesystem::path>{path}, articles);
}

nlohmann::json prediction_to_json(const ModelPrediction& p) {
  nlohmann::json j{{"model_id", p.model_id}, {"article_id", p.article_id}, {"label", to_int(p.label)}};
  if (p.confidence) j["confidence"] = *p.confidence;
  if (!p.rationale_sentences.empty()) j["rationale_sentences"] = p.rationale_sentences;
  if (p.reasoning) j["reasoning"] = *p.reasoning;
  if (!p.raw.empty()) j["raw"] = p.raw;
  return j;
}

std::vector<std::string> model_ids(const std::vector<ModelPrediction>& predictions) {
  std::vector<std::string> out;
  for (const auto& p : predictions) {
    if (std::find(out.begin(), out.end(), p.model_id) == out.end()) out.push_back(p.model_id);
  }
  return out;
}

AgreementSummary agreement(const std::vector<ModelPrediction>& predictions,
                           const std::vector<std::string>& models,
                           const std::vector<std::string>& article_ids) {
  if (models.empty()) throw ValidationError("agreement: no models");
  if (article_ids.empty()) throw ValidationError("agreement: no articles");
  const std::size_t m = models.size();
  const std::size_t n = article_ids.size();

  std::unordered_map<std::string, std::size_t> model_index, article_index;
  for (std::size_t i = 0; i < m; ++i) model_index.emplace(models[i], i);
  for (std::size_t j = 0; j < n; ++j) article_index.emplace(article_ids[j], j);

  // labels[model][article]
  std::vector<std::vector<std::optional<SentimentLabel>>> labels(
      m, std::vector<std::optional<SentimentLabel>>(n));
  for (const auto& p : predictions) {
    auto mi = model_index.find(p.model_id);
    auto ai = article_index.find(p.article_id);
    if (mi == model_index.end() || ai == article_index.end()) continue;
    auto& slot = labels[mi->second][ai->second];
    if (slot) {
      throw ValidationError("duplicate prediction for model '" + p.model_id + "' and article '" +
                            p.article_id + "'");
    }
    slot = p.label;
  }

  std::string gaps;
  std::size_t gap_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i][j]) continue;
      if (gap_count++ < 50) gaps += "\n  " + models[i] + " / " + article_ids[j];
    }
  }
  if (gap_count > 0) {
    throw CoverageError("missing " + std::to_string(gap_count) + " prediction(s):" + gaps +
                        (gap_count > 50 ? "\n  ..." : ""));
  }

  AgreementSummary s;
  s.models = models;
  s.article_count = n;
  s.vote_histogram.assign(m + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t votes = 0;
    for (std::size_t i = 0; i < m; ++i) votes += *labels[i][j] == SentimentLabel::kNegative ? 1 : 0;
    ++s.vote_histogram[votes];
  }
  s.fraction_at_least.assign(m + 1, 0.0);
  std::size_t tail = 0;
  for (std::size_t k = m + 1; k-- > 0;) {
    tail += s.vote_histogram[k];
    s.fraction_at_least[k] = static_cast<double>(tail) / static_cast<double>(n);
  }
  s.pairwise_agreement.assign(m, std::vector<double>(m, 1.0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      std::size_t same = 0;
      for (std::size_t j = 0; j < n; ++j) same += *labels[a][j] == *labels[b][j] ? 1 : 0;
      const double rate = static_cast<double>(same) / static_cast<double>(n);
      s.pairwise_agreement[a][b] = rate;
      s.pairwise_agreement[b][a] = rate;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::array<std::size_t, 3> counts{};
    for (std::size_t j = 0; j < n; ++j) ++counts[static_cast<std::size_t>(to_int(*labels[i][j]) + 1)];
    std::array<double, 3> dist{};
    for (std::size_t c = 0; c < 3; ++c) dist[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
    s.label_distribution.push_back(dist);
  }
  return s;
}

}  // namespace framelens
