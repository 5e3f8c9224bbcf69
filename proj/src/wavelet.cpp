#include "pcgid/wavelet.hpp"

#include <string>

#include "pcgid/error.hpp"

namespace pcgid {

namespace {

// Replicate the last row/column so both dimensions are even.
Matrix pad_to_even(const Matrix& m) {
  const std::size_t rows = m.rows + (m.rows & 1);
  const std::size_t cols = m.cols + (m.cols & 1);
  if (rows == m.rows && cols == m.cols) return m;

  Matrix padded(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t sr = r < m.rows ? r : m.rows - 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t sc = c < m.cols ? c : m.cols - 1;
      padded(r, c) = m(sr, sc);
    }
  }
  return padded;
}

}  // namespace

SubbandSet haar_dwt2(const Matrix& input) {
  if (input.empty()) throw Error(ErrorCode::EmptyMatrix, "haar_dwt2 on empty matrix");

  const Matrix m = pad_to_even(input);
  const std::size_t out_rows = m.rows / 2;
  const std::size_t out_cols = m.cols / 2;

  SubbandSet bands{Matrix(out_rows, out_cols), Matrix(out_rows, out_cols),
                   Matrix(out_rows, out_cols), Matrix(out_rows, out_cols)};

  for (std::size_t r = 0; r < out_rows; ++r) {
    for (std::size_t c = 0; c < out_cols; ++c) {
      const double a = m(2 * r, 2 * c);
      const double b = m(2 * r, 2 * c + 1);
      const double cc = m(2 * r + 1, 2 * c);
      const double d = m(2 * r + 1, 2 * c + 1);
      // orthonormal 2x2 block Haar
      bands.ll(r, c) = (a + b + cc + d) / 2.0;
      bands.hl(r, c) = (a + b - cc - d) / 2.0;
      bands.lh(r, c) = (a - b + cc - d) / 2.0;
      bands.hh(r, c) = (a - b - cc + d) / 2.0;
    }
  }
  return bands;
}

Matrix haar_idwt2(const SubbandSet& bands) {
  const Matrix& ll = bands.ll;
  auto same_dims = [&](const Matrix& m) { return m.rows == ll.rows && m.cols == ll.cols; };
  if (!same_dims(bands.lh) || !same_dims(bands.hl) || !same_dims(bands.hh)) {
    throw Error(ErrorCode::DimensionMismatch, "sub-bands differ in shape");
  }

  Matrix out(ll.rows * 2, ll.cols * 2);
  for (std::size_t r = 0; r < ll.rows; ++r) {
    for (std::size_t c = 0; c < ll.cols; ++c) {
      const double l = bands.ll(r, c);
      const double h = bands.hl(r, c);
      const double v = bands.lh(r, c);
      const double d = bands.hh(r, c);
      out(2 * r, 2 * c) = (l + h + v + d) / 2.0;
      out(2 * r, 2 * c + 1) = (l + h - v - d) / 2.0;
      out(2 * r + 1, 2 * c) = (l - h + v - d) / 2.0;
      out(2 * r + 1, 2 * c + 1) = (l - h - v + d) / 2.0;
    }
  }
  return out;
}

ApproximationPyramid approximation_pyramid(const Matrix& input, int n_levels) {
  if (n_levels < 1) {
    throw Error(ErrorCode::TooManyLevels,
                "level count must be >= 1, got " + std::to_string(n_levels));
  }
  if (input.empty()) throw Error(ErrorCode::EmptyMatrix, "pyramid of empty matrix");

  ApproximationPyramid pyramid;
  pyramid.levels.reserve(static_cast<std::size_t>(n_levels));

  const Matrix* current = &input;
  for (int level = 0; level < n_levels; ++level) {
    pyramid.levels.push_back(haar_dwt2(*current).ll);
    current = &pyramid.levels.back();
  }
  return pyramid;
}

}  // namespace pcgid
