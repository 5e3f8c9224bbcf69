#pragma once

#include <vector>

#include "pcgid/matrix.hpp"

namespace pcgid {

/// One level of 2D Haar decomposition. All four bands share the same shape:
/// ceil(rows/2) x ceil(cols/2) of the input.
struct SubbandSet {
  Matrix ll;  // approximation
  Matrix lh;
  Matrix hl;
  Matrix hh;  // diagonal detail
};

/// Approximation (LL) matrices for levels 1..n_levels.
struct ApproximationPyramid {
  std::vector<Matrix> levels;

  int n_levels() const { return static_cast<int>(levels.size()); }
};

/// Single-level orthonormal 2D Haar transform. Each 2x2 block [[a,b],[c,d]]
/// maps to ll=(a+b+c+d)/2, hl=(a+b-c-d)/2, lh=(a-b+c-d)/2, hh=(a-b-c+d)/2.
/// Odd dimensions are edge-padded (last row/column replicated) first.
SubbandSet haar_dwt2(const Matrix& input);

/// Exact inverse of haar_dwt2 for even-dimension (unpadded) inputs.
Matrix haar_idwt2(const SubbandSet& bands);

/// Recursive LL decomposition: levels[k] = LL of haar_dwt2(levels[k-1]),
/// detail bands discarded.
ApproximationPyramid approximation_pyramid(const Matrix& input, int n_levels);

}  // namespace pcgid
