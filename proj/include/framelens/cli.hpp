#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "framelens/corpus.hpp"
#include "framelens/sentiment.hpp"

namespace framelens::cli {

// Options shared by every subcommand. Empty resource paths select the
// bundled data files.
struct RunConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path lexicon_path;
  std::filesystem::path valence_path;
  std::filesystem::path victim_terms_path;
  std::filesystem::path negators_path;
  std::filesystem::path abbreviations_path;
  std::vector<std::filesystem::path> predictions_paths;
  std::filesystem::path annotations_path;
  std::string annotator = "final";
  std::filesystem::path scores_path;
  std::filesystem::path output_dir = "out";
  HybridThresholds thresholds;
  std::size_t smoothing_window = 3;
  std::size_t agreement_k = 3;
  ChunkConfig chunking;
  std::string chunk_model_id = "roberta_chunked";
  bool svg = false;
  std::size_t jobs = 1;

  // Throws ConfigError on inconsistent settings.
  void validate() const;
};

// Each command returns a process exit status: 0 when every declared output
// was written, 1 on a data or configuration error (reported on `log`).
int cmd_analyze(const RunConfig& config, std::ostream& log);
int cmd_agree(const RunConfig& config, std::ostream& log);
int cmd_eval(const RunConfig& config, std::ostream& log);
int cmd_chunks(const RunConfig& config, std::ostream& log);
int cmd_aggregate_chunks(const RunConfig& config, std::ostream& log);
int cmd_stats(const RunConfig& config, std::ostream& log);

// Entry point used by the executable; parses argv with CLI11.
int run(int argc, char** argv);

}  // namespace framelens::cli
