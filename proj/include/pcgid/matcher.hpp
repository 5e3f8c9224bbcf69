#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcgid/features.hpp"
#include "pcgid/matrix.hpp"

namespace pcgid {

struct TrainingRecord {
  std::string label;
  PixelMatrix pixels;
  std::string source_id;  // provenance, typically the file name

  friend bool operator==(const TrainingRecord& a, const TrainingRecord& b) = default;
};

struct RankedMatch {
  std::string source_id;
  std::string label;
  double distance = 0.0;
};

struct ClassificationResult {
  std::string best_label;
  double best_distance = 0.0;
  std::vector<RankedMatch> ranking;  // ascending by distance
};

/// D = sqrt(sum_i (x_i - y_i)^2). Throws LengthMismatch.
double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// 1-nearest-neighbor match of a test image against the database. Every
/// record is resized to the test dimensions, features are extracted on both
/// sides and ranked by ascending distance; ties keep insertion order.
ClassificationResult classify(const PixelMatrix& test_px,
                              const std::vector<TrainingRecord>& db,
                              int n_levels,
                              FeatureMode mode = FeatureMode::AllLevels);

}  // namespace pcgid
