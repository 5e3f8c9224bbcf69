#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcgid {

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool empty() const { return rows == 0 || cols == 0; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
};

/// Grayscale image, one byte per pixel, row-major.
struct PixelMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;  // rows * cols, row-major

  PixelMatrix() = default;
  PixelMatrix(std::size_t r, std::size_t c, std::uint8_t fill = 0)
      : rows(r), cols(c), pixels(r * c, fill) {}

  std::uint8_t& operator()(std::size_t r, std::size_t c) { return pixels[r * cols + c]; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }

  bool empty() const { return rows == 0 || cols == 0; }

  friend bool operator==(const PixelMatrix& a, const PixelMatrix& b) = default;
};

/// Promote pixels to a real-valued matrix.
inline Matrix to_matrix(const PixelMatrix& px) {
  Matrix m(px.rows, px.cols);
  for (std::size_t i = 0; i < px.pixels.size(); ++i) m.data[i] = px.pixels[i];
  return m;
}

}  // namespace pcgid
