#include "pcgid/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pcgid/error.hpp"
#include "pcgid/spectrogram.hpp"

namespace pcgid {

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(ErrorCode::LengthMismatch,
                "vector lengths differ: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

ClassificationResult classify(const PixelMatrix& test_px,
                              const std::vector<TrainingRecord>& db,
                              int n_levels, FeatureMode mode) {
  if (db.empty()) throw Error(ErrorCode::EmptyDatabase, "training database is empty");

  const FeatureVector test_features = extract_features(test_px, n_levels, mode);

  std::vector<double> distances(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    const PixelMatrix resized = resize_bilinear(db[i].pixels, test_px.rows, test_px.cols);
    const FeatureVector train_features = extract_features(resized, n_levels, mode);
    distances[i] = euclidean_distance(test_features.values, train_features.values);
  }

  // ties keep insertion order
  std::vector<std::size_t> order(db.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return distances[a] < distances[b]; });

  ClassificationResult result;
  result.ranking.reserve(db.size());
  for (std::size_t idx : order) {
    result.ranking.push_back({db[idx].source_id, db[idx].label, distances[idx]});
  }
  result.best_label = result.ranking.front().label;
  result.best_distance = result.ranking.front().distance;
  return result;
}

}  // namespace pcgid
