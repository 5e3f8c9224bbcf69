#pragma once

#include <cstddef>
#include <vector>

#include "pcgid/matrix.hpp"

namespace pcgid {

enum class FeatureMode { AllLevels, LastLevelOnly };

/// Concatenated row means of |Ca| across decomposition levels.
struct FeatureVector {
  std::vector<double> values;              // all entries >= 0
  std::vector<std::size_t> level_offsets;  // start of each level's segment
  int n_levels = 0;
};

/// out[i] = mean of |m(i, j)| over j. Throws EmptyMatrix.
std::vector<double> row_mean_abs(const Matrix& m);

/// Build the feature vector from the approximation pyramid of the pixel
/// image. AllLevels concatenates row_mean_abs(Ca_1)..row_mean_abs(Ca_N);
/// LastLevelOnly keeps only Ca_N.
FeatureVector extract_features(const PixelMatrix& px, int n_levels,
                               FeatureMode mode = FeatureMode::AllLevels);

}  // namespace pcgid
