#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "framelens/error.hpp"
#include "framelens/kmeans1d.hpp"
#include "oracles/brute_force.hpp"

using namespace framelens;
using L = SentimentLabel;

TEST(ClusterScores, ThreeSeparatedPairs) {
  const std::vector<double> x = {0.1, 0.1, 0.5, 0.5, 0.9, 0.9};
  EXPECT_EQ(cluster_article_scores(x),
            (std::vector<L>{L::kPositive, L::kPositive, L::kNeutral, L::kNeutral, L::kNegative, L::kNegative}));
}

TEST(ClusterScores, DegenerateInputsAreNeutral) {
  EXPECT_EQ(cluster_article_scores(std::vector<double>{0.4, 0.4, 0.4, 0.4}), std::vector<L>(4, L::kNeutral));
  EXPECT_EQ(cluster_article_scores(std::vector<double>{0.2, 0.8, 0.2}), std::vector<L>(3, L::kNeutral));
  EXPECT_EQ(cluster_article_scores(std::vector<double>{0.3}), std::vector<L>(1, L::kNeutral));
}

TEST(ClusterScores, Errors) {
  EXPECT_THROW(cluster_article_scores(std::vector<double>{}), ValidationError);
  EXPECT_THROW(cluster_article_scores(std::vector<double>{0.1, 1.5, 0.3}), ValidationError);
  EXPECT_THROW(cluster_article_scores(std::vector<double>{0.1, 0.5, 0.9}, 4), ConfigError);
  EXPECT_THROW(kmeans1d(std::vector<double>{0.1, 0.1}, 2), ValidationError);
}

TEST(KMeans1d, CentroidsAscendAndSseIsConsistent) {
  const std::vector<double> x = {5, 1, 9, 2, 8, 1.5};
  const auto r = kmeans1d(x, 3);
  ASSERT_EQ(r.centroids.size(), 3u);
  EXPECT_TRUE(std::is_sorted(r.centroids.begin(), r.centroids.end()));
  double sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sse += std::pow(x[i] - r.centroids[r.assignment[i]], 2);
  EXPECT_NEAR(sse, r.sse, 1e-12);
  EXPECT_EQ(r.assignment, (std::vector<std::size_t>{1, 0, 2, 0, 2, 0}));
}

namespace {
std::vector<double> random_scores(std::mt19937& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng() % 3 == 0 ? static_cast<double>(rng() % 21) / 20.0
                                       : std::uniform_real_distribution<double>(0, 1)(rng);
  return x;
}
}  // namespace

// Oracle: exhaustive enumeration of all 3^n labelings.
TEST(ClusterScoresOracle, MatchesExhaustivePartition) {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 3 + rng() % 8;
    const auto x = random_scores(rng, n);
    const std::set<double> distinct(x.begin(), x.end());
    const auto labels = cluster_article_scores(x);
    if (distinct.size() < 3) {
      EXPECT_EQ(labels, std::vector<L>(n, L::kNeutral));
      continue;
    }
    const auto best = oracle::exhaustive_kmeans(x, 3);
    const auto dp = kmeans1d(x, 3);
    EXPECT_NEAR(dp.sse, best.best_sse, 1e-9);
    if (best.second_sse > best.best_sse + 1e-9) {
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(to_int(labels[i]), 1 - static_cast<int>(best.assignment[i]));
    }
  }
}

TEST(ClusterScoresProperty, PermutationEquivariantAndMonotone) {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 3 + rng() % 40;
    auto x = random_scores(rng, n);
    const auto labels = cluster_article_scores(x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x[i] < x[j]) EXPECT_GE(to_int(labels[i]), to_int(labels[j]));
        if (x[i] == x[j]) EXPECT_EQ(labels[i], labels[j]);
      }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[perm[i]];
    const auto permuted = cluster_article_scores(y);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(permuted[i], labels[perm[i]]);
  }
}
