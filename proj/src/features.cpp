#include "pcgid/features.hpp"

#include <cmath>

#include "pcgid/error.hpp"
#include "pcgid/wavelet.hpp"

namespace pcgid {

std::vector<double> row_mean_abs(const Matrix& m) {
  if (m.empty()) throw Error(ErrorCode::EmptyMatrix, "row_mean_abs on empty matrix");

  std::vector<double> means(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) sum += std::fabs(m(r, c));
    means[r] = sum / static_cast<double>(m.cols);
  }
  return means;
}

FeatureVector extract_features(const PixelMatrix& px, int n_levels, FeatureMode mode) {
  const ApproximationPyramid pyramid = approximation_pyramid(to_matrix(px), n_levels);

  FeatureVector fv;
  fv.n_levels = n_levels;

  if (mode == FeatureMode::LastLevelOnly) {
    fv.level_offsets.push_back(0);
    fv.values = row_mean_abs(pyramid.levels.back());
    return fv;
  }

  for (const Matrix& ca : pyramid.levels) {
    fv.level_offsets.push_back(fv.values.size());
    const auto means = row_mean_abs(ca);
    fv.values.insert(fv.values.end(), means.begin(), means.end());
  }
  return fv;
}

}  // namespace pcgid
