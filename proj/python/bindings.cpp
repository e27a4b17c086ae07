#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "framelens/cli.hpp"
#include "framelens/corpus.hpp"
#include "framelens/error.hpp"
#include "framelens/eval.hpp"
#include "framelens/kmeans1d.hpp"
#include "framelens/lexicon.hpp"
#include "framelens/sentiment.hpp"
#include "framelens/text.hpp"
#include "framelens/trends.hpp"

namespace py = pybind11;
using namespace framelens;

namespace {

Article make_article(const std::string& title, const std::string& body, const std::string& subheadline,
                     const std::string& publish_date, const std::string& id) {
  RawArticle r;
  r.id = id;
  r.title = title;
  r.subheadline = subheadline;
  r.body = body;
  r.publish_date = publish_date;
  return clean_article(r);
}

py::dict match_dict(const LexiconMatch& m) {
  py::dict d;
  d["term"] = m.term;
  d["category"] = m.category;
  d["also_categories"] = m.also_categories;
  d["sentence_index"] = m.sentence_index;
  d["token_span"] = py::make_tuple(m.token_begin, m.token_end);
  return d;
}

SentimentLabel parse_label(const std::string& s) {
  const auto five = parse_five_class(s);
  if (!five) throw ValidationError("unrecognized five-class label '" + s + "'");
  return map_five_to_three(*five);
}

}  // namespace

PYBIND11_MODULE(_framelens, m) {
  m.doc() = "framelens core operations";
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("normalized_tokens", &text::normalized_tokens, py::arg("text"));

  m.def(
      "segment_sentences",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (auto& s : segment_sentences(text)) out.push_back(std::move(s.text));
        return out;
      },
      py::arg("text"));

  m.def(
      "chunk_words",
      [](const std::string& text, std::size_t size, std::size_t overlap, std::size_t min_chunk) {
        py::list out;
        for (const auto& c : chunk_words(text, {size, overlap, min_chunk})) {
          out.append(py::make_tuple(c.word_begin, c.word_end, c.text));
        }
        return out;
      },
      py::arg("text"), py::arg("size") = 450, py::arg("overlap") = 50, py::arg("min_chunk") = 20);

  m.def(
      "corpus_stats",
      [](const std::vector<std::string>& texts) {
        std::vector<Article> arts(texts.size());
        for (std::size_t i = 0; i < texts.size(); ++i) arts[i].full_text = arts[i].body = texts[i];
        const CorpusStats s = corpus_stats(arts);
        py::dict d;
        d["article_count"] = s.article_count;
        d["sentence_count"] = s.sentence_count;
        d["mean_words"] = s.mean_words;
        d["median_words"] = s.median_words;
        d["std_words"] = s.std_words;
        d["min_words"] = s.min_words;
        d["max_words"] = s.max_words;
        return d;
      },
      py::arg("texts"), "Summary statistics over raw article texts.");

  m.def(
      "lexicon_categories",
      [] {
        std::vector<std::string> out;
        for (const auto& c : bundled_lexicon().categories()) out.push_back(c.name);
        return out;
      });

  m.def(
      "match_lexicon",
      [](const std::string& text) {
        py::list out;
        for (const auto& mt : match_lexicon(segment_sentences(text), bundled_lexicon())) out.append(match_dict(mt));
        return out;
      },
      py::arg("text"));

  m.def(
      "detect_victims",
      [](const std::string& text) {
        const VictimReport r = detect_victims(segment_sentences(text));
        auto hits = [](const std::vector<TermHit>& v) {
          py::list l;
          for (const auto& h : v) l.append(py::make_tuple(h.term, h.sentence_index));
          return l;
        };
        py::dict d;
        d["victim_flag"] = r.victim_flag;
        d["matched_terms"] = hits(r.matched_terms);
        d["negated_terms"] = hits(r.negated_terms);
        return d;
      },
      py::arg("text"));

  m.def(
      "compound_score", [](const std::string& text) { return compound_score(text); }, py::arg("text"));

  m.def(
      "hybrid_decision",
      [](double compound, std::size_t nepl_count, double pos, double neg, std::size_t nepl_min) {
        const HybridThresholds t{pos, neg, nepl_min};
        t.validate();
        const auto [label, stage] = hybrid_decision(compound, nepl_count, t);
        return py::make_tuple(to_int(label), std::string(stage_name(stage)));
      },
      py::arg("compound"), py::arg("nepl_count"), py::arg("pos_threshold") = 0.20,
      py::arg("neg_threshold") = -0.20, py::arg("nepl_min") = 3);

  m.def(
      "classify_hybrid",
      [](const std::string& title, const std::string& body, const std::string& subheadline,
         const std::string& publish_date) {
        const HybridResult h = classify_hybrid(make_article(title, body, subheadline, publish_date, ""),
                                               bundled_lexicon());
        py::dict d;
        d["label"] = to_int(h.label);
        d["compound"] = h.compound;
        d["fear_count"] = h.fear_count;
        d["victim_flag"] = h.victim_flag;
        d["stage"] = std::string(stage_name(h.stage));
        return d;
      },
      py::arg("title"), py::arg("body"), py::arg("subheadline") = "", py::arg("publish_date") = "2000-01-01");

  m.def(
      "map_five_to_three", [](const std::string& label) { return to_int(parse_label(label)); }, py::arg("label"));

  m.def(
      "map_probabilities",
      [](double neg, double neu, double pos) { return to_int(map_probabilities(neg, neu, pos)); },
      py::arg("p_negative"), py::arg("p_neutral"), py::arg("p_positive"));

  m.def(
      "cluster_article_scores",
      [](const std::vector<double>& scores) {
        std::vector<int> out;
        for (SentimentLabel l : cluster_article_scores(scores)) out.push_back(to_int(l));
        return out;
      },
      py::arg("scores"));

  m.def(
      "class_metrics",
      [](const std::vector<std::vector<std::size_t>>& rows) {
        if (rows.size() != 3) throw ValidationError("confusion matrix must be 3x3");
        ConfusionMatrix cm{};
        for (std::size_t i = 0; i < 3; ++i) {
          if (rows[i].size() != 3) throw ValidationError("confusion matrix must be 3x3");
          for (std::size_t j = 0; j < 3; ++j) cm[i][j] = rows[i][j];
        }
        const ClassMetrics k = class_metrics(cm);
        py::dict d;
        for (SentimentLabel l : kAllLabels) {
          const auto& s = k[l];
          py::dict c;
          c["precision"] = s.precision;
          c["recall"] = s.recall;
          c["f1"] = s.f1;
          c["support"] = s.support;
          d[py::str(std::string(label_name(l)))] = c;
        }
        d["accuracy"] = k.accuracy;
        return d;
      },
      py::arg("matrix"), "Rows are gold labels, columns predictions, order (-1, 0, +1).");

  m.def(
      "bleu",
      [](const std::string& candidate, const std::string& reference) {
        return bleu(text::normalized_tokens(candidate), text::normalized_tokens(reference));
      },
      py::arg("candidate"), py::arg("reference"));

  m.def(
      "rouge_l",
      [](const std::string& candidate, const std::string& reference) {
        return rouge_l(text::normalized_tokens(candidate), text::normalized_tokens(reference));
      },
      py::arg("candidate"), py::arg("reference"));

  m.def("trailing_mean", &trailing_mean, py::arg("series"), py::arg("window") = 3);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "framelens");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        py::gil_scoped_release release;
        return cli::run(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"), "Runs a CLI subcommand, e.g. run_cli(['analyze', '--corpus', 'c.jsonl']).");
}
