#include "framelens/kmeans1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "framelens/error.hpp"

namespace framelens {

KMeans1dResult kmeans1d(std::span<const double> values, std::size_t k) {
  if (k == 0) throw ValidationError("kmeans1d: k must be positive");
  std::vector<double> uniq(values.begin(), values.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  const std::size_t m = uniq.size();
  if (m < k) throw ValidationError("kmeans1d: fewer distinct values than clusters");

  std::vector<double> weight(m, 0.0);
  for (double v : values) {
    weight[static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin())] += 1.0;
  }

  // Prefix sums of weight, weighted value and weighted square.
  std::vector<double> w(m + 1, 0.0), s1(m + 1, 0.0), s2(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    w[i + 1] = w[i] + weight[i];
    s1[i + 1] = s1[i] + weight[i] * uniq[i];
    s2[i + 1] = s2[i] + weight[i] * uniq[i] * uniq[i];
  }
  // Cost of one cluster over distinct values [a, b).
  auto cost = [&](std::size_t a, std::size_t b) {
    const double n = w[b] - w[a];
    const double sum = s1[b] - s1[a];
    return std::max(0.0, (s2[b] - s2[a]) - sum * sum / n);
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // best[c][j]: minimal cost of splitting the first j distinct values into c + 1 clusters.
  std::vector<std::vector<double>> best(k, std::vector<double>(m + 1, kInf));
  std::vector<std::vector<std::size_t>> split(k, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t j = 1; j <= m; ++j) best[0][j] = cost(0, j);
  for (std::size_t c = 1; c < k; ++c) {
    for (std::size_t j = c + 1; j <= m; ++j) {
      for (std::size_t i = c; i < j; ++i) {
        const double candidate = best[c - 1][i] + cost(i, j);
        if (candidate < best[c][j]) {
          best[c][j] = candidate;
          split[c][j] = i;
        }
      }
    }
  }

  // Recover cluster boundaries over distinct values.
  std::vector<std::size_t> starts(k, 0);
  std::size_t end = m;
  for (std::size_t c = k; c-- > 1;) {
    starts[c] = split[c][end];
    end = starts[c];
  }
  std::vector<std::size_t> cluster_of(m, 0);
  KMeans1dResult out;
  out.centroids.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t a = starts[c];
    const std::size_t b = c + 1 < k ? starts[c + 1] : m;
    for (std::size_t i = a; i < b; ++i) cluster_of[i] = c;
    out.centroids[c] = (s1[b] - s1[a]) / (w[b] - w[a]);
  }
  out.assignment.reserve(values.size());
  for (double v : values) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin());
    const std::size_t c = cluster_of[idx];
    out.assignment.push_back(c);
    out.sse += (v - out.centroids[c]) * (v - out.centroids[c]);
  }
  return out;
}

std::vector<SentimentLabel> cluster_article_scores(std::span<const double> scores, std::size_t k) {
  if (k != 3) throw ConfigError("cluster_article_scores: only k = 3 maps onto three labels");
  if (scores.empty()) throw ValidationError("cluster_article_scores: no scores");
  for (double s : scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ValidationError("cluster_article_scores: score outside [0, 1]");
    }
  }
  std::vector<double> uniq(scores.begin(), scores.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < k) return std::vector<SentimentLabel>(scores.size(), SentimentLabel::kNeutral);

  const auto km = kmeans1d(scores, k);
  static constexpr SentimentLabel kByRank[] = {SentimentLabel::kPositive, SentimentLabel::kNeutral,
                                               SentimentLabel::kNegative};
  std::vector<SentimentLabel> out;
  out.reserve(scores.size());
  for (std::size_t c : km.assignment) out.push_back(kByRank[c]);
  return out;
}

}  // namespace framelens
