#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "framelens/sentiment.hpp"

namespace framelens {

struct KMeans1dResult {
  // Cluster id per input point; ids are ordered by ascending centroid.
  std::vector<std::size_t> assignment;
  std::vector<double> centroids;
  double sse = 0.0;
};

// Exact 1-D k-means by dynamic programming over the sorted distinct values.
// Equal values always share a cluster. Requires at least k distinct values;
// throws ValidationError otherwise.
KMeans1dResult kmeans1d(std::span<const double> values, std::size_t k);

// Labels articles from their mean chunk negativity in [0, 1]: three exact
// clusters, lowest centroid -> positive, middle -> neutral, highest ->
// negative. Fewer than k distinct values labels every article neutral.
// Throws ValidationError on empty input or out-of-range scores, ConfigError
// for k != 3.
std::vector<SentimentLabel> cluster_article_scores(std::span<const double> scores,
                                                   std::size_t k = 3);

}  // namespace framelens
