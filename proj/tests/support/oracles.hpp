// Independent reference implementations used as test oracles. These must not
// call into the library code paths they are checking.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "pcgid/matrix.hpp"

namespace oracle {

// Direct O(n^2) DFT, unnormalized: X[k] = sum_n x[n] e^{-2*pi*i*k*n/N}.
inline std::vector<std::complex<double>> brute_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(i) / static_cast<double>(n);
      acc += x[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

// Edge-replicating pad to even dims, written independently of the library.
inline pcgid::Matrix pad_even(const pcgid::Matrix& m) {
  const std::size_t rows = m.rows % 2 == 0 ? m.rows : m.rows + 1;
  const std::size_t cols = m.cols % 2 == 0 ? m.cols : m.cols + 1;
  pcgid::Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t rr = std::min(r, m.rows - 1);
      const std::size_t cc = std::min(c, m.cols - 1);
      out(r, c) = m(rr, cc);
    }
  }
  return out;
}

// One level of the orthonormal block Haar, approximation band only.
inline pcgid::Matrix brute_ll(const pcgid::Matrix& input) {
  const pcgid::Matrix m = pad_even(input);
  pcgid::Matrix ll(m.rows / 2, m.cols / 2);
  for (std::size_t r = 0; r + 1 < m.rows; r += 2) {
    for (std::size_t c = 0; c + 1 < m.cols; c += 2) {
      ll(r / 2, c / 2) = 0.5 * (m(r, c) + m(r, c + 1) + m(r + 1, c) + m(r + 1, c + 1));
    }
  }
  return ll;
}

// Full approximation chain followed by per-row means of absolute values.
inline std::vector<double> brute_features(const pcgid::PixelMatrix& px, int n_levels) {
  pcgid::Matrix ca(px.rows, px.cols);
  for (std::size_t i = 0; i < px.pixels.size(); ++i) ca.data[i] = px.pixels[i];

  std::vector<double> features;
  for (int level = 0; level < n_levels; ++level) {
    ca = brute_ll(ca);
    for (std::size_t r = 0; r < ca.rows; ++r) {
      double sum = 0.0;
      for (std::size_t c = 0; c < ca.cols; ++c) sum += std::abs(ca(r, c));
      features.push_back(sum / static_cast<double>(ca.cols));
    }
  }
  return features;
}

// Dimension trace of the ceil-halving pyramid.
inline std::vector<std::pair<std::size_t, std::size_t>> dim_trace(std::size_t rows,
                                                                  std::size_t cols,
                                                                  int n_levels) {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (int level = 0; level < n_levels; ++level) {
    rows = (rows + 1) / 2;
    cols = (cols + 1) / 2;
    dims.emplace_back(rows, cols);
  }
  return dims;
}

inline double energy(const pcgid::Matrix& m) {
  double sum = 0.0;
  for (double v : m.data) sum += v * v;
  return sum;
}

}  // namespace oracle
