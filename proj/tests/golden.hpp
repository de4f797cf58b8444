#pragma once

#include "dilate/nnmatrix.hpp"

// The 8 x 8 transition matrix of the (4,2) combined tree map as printed in
// the source, row by row.
inline dilate::NNMatrix golden_matrix_4_2() {
  return dilate::NNMatrix::from_dense({
      {0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 1, 0, 0},
      {1, 0, 0, 0, 0, 1, 0, 0},
      {1, 0, 0, 0, 0, 1, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 2, 0, 0},
  });
}
