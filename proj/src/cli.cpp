#include "framelens/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "framelens/ensemble.hpp"
#include "framelens/error.hpp"
#include "framelens/eval.hpp"
#include "framelens/io.hpp"
#include "framelens/kmeans1d.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/pipeline.hpp"
#include "framelens/report.hpp"
#include "framelens/trends.hpp"

namespace framelens::cli {
namespace {

using report::csv_row;
using report::fixed;

// Loaded lexica and word lists; bundled defaults unless a path is given.
struct Resources {
  std::optional<Lexicon> nepl;
  std::optional<ValenceLexicon> valence;
  std::optional<Lexicon> victims;
  std::optional<Lexicon> negators;
  std::optional<AbbreviationSet> abbreviations;

  HybridResources view() const {
    HybridResources r;
    if (nepl) r.nepl = &*nepl;
    if (valence) r.valence = &*valence;
    if (victims) r.victim_terms = &*victims;
    if (negators) r.negators = &*negators;
    if (abbreviations) r.abbreviations = &*abbreviations;
    return r;
  }
};

void require_file(const std::filesystem::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string("missing required --") + what);
  if (!std::filesystem::exists(p)) throw ConfigError(std::string(what) + " file not found: " + p.string());
}

Resources load_resources(const RunConfig& c) {
  Resources r;
  if (!c.lexicon_path.empty()) {
    require_file(c.lexicon_path, "lexicon");
    r.nepl = load_lexicon(c.lexicon_path);
  }
  if (!c.valence_path.empty()) r.valence = ValenceLexicon::load(c.valence_path);
  if (!c.victim_terms_path.empty()) r.victims = load_term_list(c.victim_terms_path, "Victim");
  if (!c.negators_path.empty()) r.negators = load_term_list(c.negators_path, "Negation");
  if (!c.abbreviations_path.empty()) r.abbreviations = AbbreviationSet::load(c.abbreviations_path);
  return r;
}

std::vector<Article> load_articles(const RunConfig& c, std::ostream& log, bool write_rejects) {
  require_file(c.corpus_path, "corpus");
  CorpusLoad corpus = load_corpus(c.corpus_path);
  for (const auto& r : corpus.rejected) {
    log << c.corpus_path.string() << ":" << r.line << ": rejected: " << r.reason << '\n';
  }
  if (write_rejects) {
    std::ostringstream rej;
    write_rejected(rej, corpus.rejected);
    report::write_file(c.output_dir / "rejected.jsonl", rej.str());
  }
  if (corpus.articles.empty()) throw ValidationError("corpus has no valid articles: " + c.corpus_path.string());
  return std::move(corpus.articles);
}

std::string month_name(const YearMonth& ym) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u", ym.year, ym.month);
  return buf;
}

std::string stats_csv(const CorpusStats& s) {
  std::string out = csv_row({"article_count", "sentence_count", "mean_words", "median_words",
                             "std_words", "min_words", "max_words"});
  out += csv_row({std::to_string(s.article_count), std::to_string(s.sentence_count),
                  fixed(s.mean_words, 4), fixed(s.median_words, 4), fixed(s.std_words, 4),
                  std::to_string(s.min_words), std::to_string(s.max_words)});
  return out;
}

void log_diagnostics(std::ostream& log, const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) log << "warning: " << d.to_string() << '\n';
}

std::string safe_label(SentimentLabel l) { return std::to_string(to_int(l)); }

template <typename Fn>
int guarded(std::ostream& log, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

void RunConfig::validate() const {
  thresholds.validate();
  if (smoothing_window < 1) throw ConfigError("smoothing window must be at least 1");
  if (agreement_k < 1) throw ConfigError("agreement k must be at least 1");
  if (chunking.size <= chunking.overlap) throw ConfigError("chunk size must exceed chunk overlap");
  if (chunking.min_chunk < 1) throw ConfigError("min chunk must be at least 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

int cmd_analyze(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    const Resources res = load_resources(c);
    const HybridResources view = res.view();
    const auto articles = load_articles(c, log, true);
    const auto analyses = analyze_corpus(articles, view, c.thresholds, c.jobs);

    std::ostringstream jsonl, csv, preds;
    std::vector<std::string> header = {"id", "publish_date", "label", "compound", "stage",
                                       "fear_count", "victim_flag"};
    for (const auto& cat : view.nepl->categories()) header.push_back(cat.name);
    csv << csv_row(header);

    std::vector<std::size_t> category_articles(view.nepl->categories().size(), 0);
    std::vector<DatedLabel> dated;
    std::vector<ArticleFlags> flags;
    for (std::size_t i = 0; i < articles.size(); ++i) {
      const Article& art = articles[i];
      const ArticleAnalysis& a = analyses[i];
      nlohmann::json cats = nlohmann::json::object();
      std::vector<std::string> row = {art.id, format_iso_date(art.publish_date), safe_label(a.hybrid.label),
                                      fixed(a.hybrid.compound, 4), std::string(stage_name(a.hybrid.stage)),
                                      std::to_string(a.hybrid.fear_count), a.hybrid.victim_flag ? "1" : "0"};
      for (std::size_t k = 0; k < a.presence.present.size(); ++k) {
        const auto& [name, flag] = a.presence.present[k];
        cats[name] = flag;
        row.push_back(flag ? "1" : "0");
        category_articles[k] += flag ? 1 : 0;
      }
      csv << csv_row(row);

      std::vector<std::string> rationale;
      for (std::size_t idx : a.rationale_indices) rationale.push_back(a.sentences[idx].text);
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& m : a.matches) {
        terms.push_back({{"term", m.term}, {"category", m.category}, {"sentence_index", m.sentence_index}});
      }
      nlohmann::json victims = nlohmann::json::array();
      for (const auto& v : a.victims.matched_terms) {
        const bool neg = std::find(a.victims.negated_terms.begin(), a.victims.negated_terms.end(), v) !=
                         a.victims.negated_terms.end();
        victims.push_back({{"term", v.term}, {"sentence_index", v.sentence_index}, {"negated", neg}});
      }
      nlohmann::json rec = {{"id", art.id},
                            {"publish_date", format_iso_date(art.publish_date)},
                            {"label", to_int(a.hybrid.label)},
                            {"compound", a.hybrid.compound},
                            {"stage", stage_name(a.hybrid.stage)},
                            {"fear_count", a.hybrid.fear_count},
                            {"victim_flag", a.hybrid.victim_flag},
                            {"nepl_categories", cats},
                            {"nepl_matches", terms},
                            {"victim_terms", victims},
                            {"sentence_count", a.sentences.size()},
                            {"rationale_sentences", rationale}};
      jsonl << rec.dump() << '\n';

      ModelPrediction p;
      p.model_id = "vader_regex";
      p.article_id = art.id;
      p.label = a.hybrid.label;
      p.rationale_sentences = rationale;
      preds << prediction_to_json(p).dump() << '\n';

      dated.push_back({art.publish_date, a.hybrid.label});
      flags.push_back({a.hybrid.victim_flag, a.hybrid.fear_count});
    }

    const CorpusStats stats = corpus_stats(articles, *view.abbreviations);
    const VictimNeplCrosstab xt = victim_nepl_crosstab(flags);
    const auto trends = monthly_trends(dated, c.smoothing_window);

    std::string xt_csv = csv_row({"cell", "count", "percent"});
    for (std::size_t k = 0; k < 4; ++k) {
      xt_csv += csv_row({kCrosstabCells[k], std::to_string(xt.counts[k]), fixed(xt.percentages[k], 2)});
    }
    std::string trend_csv = csv_row({"month", "article_count", "negative_count", "negativity_rate",
                                     "smoothed_count", "smoothed_rate"});
    for (const auto& t : trends) {
      trend_csv += csv_row({month_name(t.month), std::to_string(t.article_count),
                            std::to_string(t.negative_count), fixed(t.negativity_rate, 6),
                            fixed(t.smoothed_count, 6), fixed(t.smoothed_rate, 6)});
    }
    std::string cat_csv = csv_row({"category", "articles", "percent"});
    std::vector<std::string> cat_names;
    std::vector<double> cat_pct;
    for (std::size_t k = 0; k < category_articles.size(); ++k) {
      const double pct = 100.0 * static_cast<double>(category_articles[k]) / static_cast<double>(articles.size());
      cat_names.push_back(view.nepl->categories()[k].name);
      cat_pct.push_back(pct);
      cat_csv += csv_row({cat_names.back(), std::to_string(category_articles[k]), fixed(pct, 2)});
    }

    const auto& dir = c.output_dir;
    report::write_file(dir / "article_results.jsonl", jsonl.str());
    report::write_file(dir / "article_results.csv", csv.str());
    report::write_file(dir / "hybrid_predictions.jsonl", preds.str());
    report::write_file(dir / "corpus_stats.csv", stats_csv(stats));
    report::write_file(dir / "victim_nepl_crosstab.csv", xt_csv);
    report::write_file(dir / "monthly_trends.csv", trend_csv);
    report::write_file(dir / "nepl_category_presence.csv", cat_csv);
    if (c.svg) {
      std::vector<std::string> months;
      report::Series counts{"smoothed article count", {}}, rates{"smoothed negativity rate", {}};
      for (const auto& t : trends) {
        months.push_back(month_name(t.month));
        counts.values.push_back(t.smoothed_count);
        rates.values.push_back(t.smoothed_rate);
      }
      report::write_file(dir / "monthly_counts.svg",
                         report::line_chart_svg("Monthly article count", months, {counts}, "articles"));
      report::write_file(dir / "monthly_negativity.svg",
                         report::line_chart_svg("Monthly negativity rate", months, {rates}, "rate"));
      report::write_file(dir / "nepl_category_presence.svg",
                         report::bar_chart_svg("NEPL categories", cat_names, cat_pct, "% of articles"));
      report::write_file(dir / "victim_nepl_crosstab.svg",
                         report::bar_chart_svg("Victim mention vs NEPL presence",
                                               {kCrosstabCells.begin(), kCrosstabCells.end()},
                                               {xt.percentages.begin(), xt.percentages.end()}, "% of articles"));
    }
    log << "analyzed " << articles.size() << " article(s) into " << dir.string() << '\n';
  });
}

int cmd_agree(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    const auto articles = load_articles(c, log, false);
    if (c.predictions_paths.empty()) throw ConfigError("missing required --predictions");
    for (const auto& p : c.predictions_paths) require_file(p, "predictions");
    const auto load = ingest_predictions(c.predictions_paths, article_texts(articles));
    log_diagnostics(log, load.diagnostics);
    const auto models = model_ids(load.predictions);
    if (models.empty()) throw ValidationError("no usable predictions");
    std::vector<std::string> ids;
    for (const auto& a : articles) ids.push_back(a.id);
    const AgreementSummary s = agreement(load.predictions, models, ids);

    const std::size_t m = models.size();
    std::string votes = csv_row({"negative_votes", "article_count", "fraction_at_least"});
    for (std::size_t b = 0; b <= m; ++b) {
      votes += csv_row({std::to_string(b), std::to_string(s.vote_histogram[b]), fixed(s.fraction_at_least[b], 6)});
    }
    std::vector<std::string> header = {"model"};
    header.insert(header.end(), models.begin(), models.end());
    std::string pairwise = csv_row(header);
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<std::string> row = {models[a]};
      for (std::size_t b = 0; b < m; ++b) row.push_back(fixed(s.pairwise_agreement[a][b], 6));
      pairwise += csv_row(row);
    }
    std::string dist = csv_row({"model", "negative", "neutral", "positive"});
    for (std::size_t a = 0; a < m; ++a) {
      dist += csv_row({models[a], fixed(s.label_distribution[a][0], 6), fixed(s.label_distribution[a][1], 6),
                       fixed(s.label_distribution[a][2], 6)});
    }
    if (c.agreement_k > m) {
      log << "warning: agreement k=" << c.agreement_k << " exceeds the " << m << " model(s) present\n";
    }
    const double at_k = c.agreement_k <= m ? s.fraction_at_least[c.agreement_k] : 0.0;
    nlohmann::json summary = {{"models", models},
                              {"article_count", s.article_count},
                              {"agreement_k", c.agreement_k},
                              {"fraction_at_least_k", at_k},
                              {"vote_histogram", s.vote_histogram},
                              {"fraction_at_least", s.fraction_at_least},
                              {"pairwise_agreement", s.pairwise_agreement}};

    const auto& dir = c.output_dir;
    report::write_file(dir / "agreement_votes.csv", votes);
    report::write_file(dir / "pairwise_agreement.csv", pairwise);
    report::write_file(dir / "label_distribution.csv", dist);
    report::write_file(dir / "agreement_summary.json", summary.dump(2) + "\n");
    if (c.svg) {
      std::vector<std::string> labels;
      std::vector<double> neg;
      for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(models[a]);
        neg.push_back(s.label_distribution[a][0]);
      }
      report::write_file(dir / "label_distribution.svg",
                         report::bar_chart_svg("Negative share per model", labels, neg, "fraction negative"));
    }
    log << "agreement over " << m << " model(s) and " << ids.size() << " article(s): "
        << fixed(at_k * 100.0, 1) << "% with >= " << c.agreement_k << " negative votes\n";
  });
}

int cmd_eval(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    const auto articles = load_articles(c, log, false);
    require_file(c.annotations_path, "annotations");
    if (c.predictions_paths.empty()) throw ConfigError("missing required --predictions");
    for (const auto& p : c.predictions_paths) require_file(p, "predictions");
    const auto texts = article_texts(articles);
    const auto gold = load_annotations(c.annotations_path, c.annotator);
    if (gold.empty()) throw ValidationError("no annotations for annotator '" + c.annotator + "'");
    const auto load = ingest_predictions(c.predictions_paths, texts);
    log_diagnostics(log, load.diagnostics);
    const auto models = model_ids(load.predictions);
    if (models.empty()) throw ValidationError("no usable predictions");

    std::string cm_csv = csv_row({"model", "gold", "pred_negative", "pred_neutral", "pred_positive"});
    std::string metrics_csv = csv_row({"model", "class", "precision", "recall", "f1", "support"});
    std::string acc_csv = csv_row({"model", "accuracy", "articles"});
    std::string overlap_csv = csv_row({"model", "bleu", "rouge_l", "articles_scored", "articles_excluded"});
    std::string per_article_csv = csv_row({"model", "article_id", "bleu", "rouge_l"});
    for (const auto& model : models) {
      std::vector<ModelPrediction> mine;
      for (const auto& p : load.predictions) {
        if (p.model_id == model) mine.push_back(p);
      }
      const ConfusionMatrix cm = confusion_matrix(gold, mine);
      const ClassMetrics metrics = class_metrics(cm);
      for (SentimentLabel g : kAllLabels) {
        const auto& row = cm[label_index(g)];
        cm_csv += csv_row({model, safe_label(g), std::to_string(row[0]), std::to_string(row[1]),
                           std::to_string(row[2])});
        const auto& s = metrics[g];
        metrics_csv += csv_row({model, std::string(label_name(g)), fixed(s.precision, 6), fixed(s.recall, 6),
                                fixed(s.f1, 6), std::to_string(s.support)});
      }
      acc_csv += csv_row({model, fixed(metrics.accuracy, 6), std::to_string(gold.size())});

      std::set<std::string> gold_ids;
      for (const auto& g : gold) gold_ids.insert(g.article_id);
      const bool has_rationales = std::any_of(mine.begin(), mine.end(), [&](const ModelPrediction& p) {
        return gold_ids.count(p.article_id) && !p.rationale_sentences.empty();
      });
      if (has_rationales) {
        const OverlapScores o = rationale_overlap(gold, mine, texts);
        log_diagnostics(log, o.diagnostics);
        overlap_csv += csv_row({model, fixed(o.bleu, 6), fixed(o.rouge_l, 6), std::to_string(o.per_article.size()),
                                std::to_string(o.diagnostics.size())});
        for (const auto& a : o.per_article) {
          per_article_csv += csv_row({model, a.article_id, fixed(a.bleu, 6), fixed(a.rouge_l, 6)});
        }
      }
      log << model << ": accuracy " << fixed(metrics.accuracy, 3) << " on " << gold.size() << " article(s)\n";
    }
    const auto& dir = c.output_dir;
    report::write_file(dir / "confusion_matrices.csv", cm_csv);
    report::write_file(dir / "class_metrics.csv", metrics_csv);
    report::write_file(dir / "accuracy.csv", acc_csv);
    report::write_file(dir / "rationale_overlap.csv", overlap_csv);
    report::write_file(dir / "rationale_overlap_per_article.csv", per_article_csv);
  });
}

int cmd_chunks(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    const auto articles = load_articles(c, log, false);
    std::ostringstream out;
    std::size_t total = 0;
    for (const auto& a : articles) {
      for (const auto& ch : chunk_words(a.full_text, c.chunking, a.id)) {
        nlohmann::json rec = {{"article_id", ch.article_id},
                              {"chunk_index", ch.index},
                              {"word_start", ch.word_begin},
                              {"word_end", ch.word_end},
                              {"text", ch.text}};
        out << rec.dump() << '\n';
        ++total;
      }
    }
    report::write_file(c.output_dir / "chunks.jsonl", out.str());
    log << "wrote " << total << " chunk(s) for " << articles.size() << " article(s)\n";
  });
}

int cmd_aggregate_chunks(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    require_file(c.scores_path, "scores");
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> scores;
    std::set<std::pair<std::string, long long>> seen;
    read_jsonl(
        c.scores_path,
        [&](std::size_t line_no, const nlohmann::json& r) {
          const std::string where = c.scores_path.string() + ":" + std::to_string(line_no);
          const std::string id = string_field(r, "article_id");
          if (id.empty()) throw ValidationError(where + ": missing article_id");
          if (!r.contains("chunk_index") || !r["chunk_index"].is_number_integer())
            throw ValidationError(where + ": chunk_index must be an integer");
          if (!r.contains("negative_score") || !r["negative_score"].is_number())
            throw ValidationError(where + ": negative_score must be a number");
          const double s = r["negative_score"].get<double>();
          if (!(s >= 0.0 && s <= 1.0)) throw ValidationError(where + ": negative_score outside [0, 1]");
          if (!seen.emplace(id, r["chunk_index"].get<long long>()).second)
            throw ValidationError(where + ": duplicate chunk score for '" + id + "'");
          if (!scores.count(id)) order.push_back(id);
          scores[id].push_back(s);
        },
        [&](std::size_t line_no, const std::string&, const std::string& why) {
          throw ValidationError(c.scores_path.string() + ":" + std::to_string(line_no) + ": " + why);
        });
    if (!c.corpus_path.empty()) {
      const auto articles = load_articles(c, log, false);
      std::vector<std::string> corpus_order;
      for (const auto& a : articles) {
        if (scores.count(a.id)) corpus_order.push_back(a.id);
        else log << "warning: no chunk scores for article '" << a.id << "'\n";
      }
      std::set<std::string> known;
      for (const auto& a : articles) known.insert(a.id);
      for (const auto& id : order) {
        if (!known.count(id)) log << "warning: chunk scores for unknown article '" << id << "' ignored\n";
      }
      order = std::move(corpus_order);
    }
    if (order.empty()) throw ValidationError("no chunk scores to aggregate");
    std::vector<double> means;
    for (const auto& id : order) {
      const auto& v = scores[id];
      double sum = 0.0;
      for (double s : v) sum += s;
      means.push_back(sum / static_cast<double>(v.size()));
    }
    const auto labels = cluster_article_scores(means, 3);
    std::string csv = csv_row({"article_id", "chunks", "mean_negative_score", "label"});
    std::ostringstream preds;
    for (std::size_t i = 0; i < order.size(); ++i) {
      csv += csv_row({order[i], std::to_string(scores[order[i]].size()), fixed(means[i], 6), safe_label(labels[i])});
      ModelPrediction p;
      p.model_id = c.chunk_model_id;
      p.article_id = order[i];
      p.label = labels[i];
      preds << prediction_to_json(p).dump() << '\n';
    }
    report::write_file(c.output_dir / "chunk_article_labels.csv", csv);
    report::write_file(c.output_dir / "chunk_predictions.jsonl", preds.str());
    log << "labeled " << order.size() << " article(s) from chunk scores\n";
  });
}

int cmd_stats(const RunConfig& c, std::ostream& log) {
  return guarded(log, [&] {
    c.validate();
    const Resources res = load_resources(c);
    const auto articles = load_articles(c, log, false);
    const CorpusStats s = corpus_stats(articles, *res.view().abbreviations);
    report::write_file(c.output_dir / "corpus_stats.csv", stats_csv(s));
    log << "articles=" << s.article_count << " sentences=" << s.sentence_count
        << " mean_words=" << fixed(s.mean_words, 2) << " median_words=" << fixed(s.median_words, 2)
        << " std_words=" << fixed(s.std_words, 2) << " min_words=" << s.min_words
        << " max_words=" << s.max_words << '\n';
  });
}

namespace {

std::string env_name(const std::string& flag) {
  std::string out = "FRAMELENS_";
  for (char ch : flag) out.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  return out;
}

template <typename T>
CLI::Option* opt(CLI::App* app, const std::string& flag, T& target, const std::string& help) {
  return app->add_option("--" + flag, target, help)->envname(env_name(flag));
}

void add_inputs(CLI::App* app, RunConfig& c) {
  opt(app, "corpus", c.corpus_path, "Article corpus (JSON lines)");
  opt(app, "lexicon", c.lexicon_path, "NEPL lexicon file (YAML); bundled if omitted");
  opt(app, "valence", c.valence_path, "Valence lexicon (token<TAB>valence); bundled if omitted");
  opt(app, "victim-terms", c.victim_terms_path, "Victim term list (YAML); bundled if omitted");
  opt(app, "negators", c.negators_path, "Negation cue list (YAML); bundled if omitted");
  opt(app, "abbreviations", c.abbreviations_path, "Abbreviation list for sentence splitting");
  opt(app, "output-dir", c.output_dir, "Directory for reports")->capture_default_str();
  opt(app, "jobs", c.jobs, "Worker threads for per-article stages")->capture_default_str();
}

void add_thresholds(CLI::App* app, RunConfig& c) {
  opt(app, "pos-threshold", c.thresholds.positive, "Compound score above which an article is positive")
      ->capture_default_str();
  opt(app, "neg-threshold", c.thresholds.negative, "Compound score below which an article is negative")
      ->capture_default_str();
  opt(app, "nepl-min", c.thresholds.nepl_min, "NEPL matches that make an ambiguous article negative")
      ->capture_default_str();
  opt(app, "smoothing-window", c.smoothing_window, "Trailing window (months) for trend smoothing")
      ->capture_default_str();
  app->add_flag("--svg", c.svg, "Also render SVG charts")->envname(env_name("svg"));
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"framelens: framing and sentiment analysis for human-elephant conflict news"};
  app.require_subcommand(1);
  RunConfig c;
  int status = 0;

  auto* analyze = app.add_subcommand("analyze", "Hybrid sentiment, NEPL, victims, stats, trends");
  add_inputs(analyze, c);
  add_thresholds(analyze, c);
  analyze->callback([&] { status = cmd_analyze(c, std::cerr); });

  auto* agree = app.add_subcommand("agree", "Cross-model label distribution and agreement");
  add_inputs(agree, c);
  opt(agree, "predictions", c.predictions_paths, "Prediction files (JSON lines)")->expected(1, -1);
  opt(agree, "agreement-k", c.agreement_k, "Negative-vote threshold to report")->capture_default_str();
  agree->add_flag("--svg", c.svg, "Also render SVG charts")->envname(env_name("svg"));
  agree->callback([&] { status = cmd_agree(c, std::cerr); });

  auto* eval = app.add_subcommand("eval", "Score predictions against expert annotations");
  add_inputs(eval, c);
  opt(eval, "predictions", c.predictions_paths, "Prediction files (JSON lines)")->expected(1, -1);
  opt(eval, "annotations", c.annotations_path, "Expert annotations (JSON lines)");
  opt(eval, "annotator", c.annotator, "Annotator id to evaluate against")->capture_default_str();
  eval->callback([&] { status = cmd_eval(c, std::cerr); });

  auto* chunks = app.add_subcommand("chunks", "Emit overlapping word windows for chunk scoring");
  add_inputs(chunks, c);
  opt(chunks, "chunk-size", c.chunking.size, "Words per chunk")->capture_default_str();
  opt(chunks, "chunk-overlap", c.chunking.overlap, "Words shared by consecutive chunks")->capture_default_str();
  opt(chunks, "min-chunk", c.chunking.min_chunk, "Shorter trailing chunks merge into the previous one")
      ->capture_default_str();
  chunks->callback([&] { status = cmd_chunks(c, std::cerr); });

  auto* aggregate = app.add_subcommand("aggregate-chunks", "Cluster per-chunk negative scores into labels");
  add_inputs(aggregate, c);
  opt(aggregate, "scores", c.scores_path, "Chunk scores (JSON lines: article_id, chunk_index, negative_score)");
  opt(aggregate, "model-id", c.chunk_model_id, "Model id for the emitted predictions")->capture_default_str();
  aggregate->callback([&] { status = cmd_aggregate_chunks(c, std::cerr); });

  auto* stats = app.add_subcommand("stats", "Corpus summary statistics");
  add_inputs(stats, c);
  stats->callback([&] { status = cmd_stats(c, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return status;
}

}  // namespace framelens::cli
